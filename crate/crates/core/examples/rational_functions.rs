//! Canonical rational functions: parsing, arithmetic, substitution, evaluation.

use noether_forge::field::CoefField;
use noether_forge::ratfunc::RatFunc;
use noether_forge::text::parse_ratfunc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = CoefField::Rationals;
    let f = parse_ratfunc("(t1^2 - t2^2)/(t1 - t2)", 2, q)?;
    println!("(t1^2 - t2^2)/(t1 - t2) reduces to {f}");

    let g = parse_ratfunc("1/(t1 + t2)", 2, q)?;
    println!("f + g = {}", f.checked_add(&g)?);
    println!("f * g = {}", f.checked_mul(&g)?);
    println!("g^-2 = {}", g.pow(-2)?);

    // t1 -> t1 + t2, t2 -> t1*t2
    let images = [
        parse_ratfunc("t1 + t2", 2, q)?,
        parse_ratfunc("t1*t2", 2, q)?,
    ];
    println!("g(t1 + t2, t1*t2) = {}", g.substitute(&images)?);

    let point = [q.from_i64(2), q.from_i64(5)];
    println!("g(2, 5) = {}", g.eval(&point)?);
    let pole = [q.from_i64(1), q.from_i64(-1)];
    println!("g(1, -1): {}", g.eval(&pole).unwrap_err());

    let f5 = CoefField::prime(5)?;
    let h = RatFunc::var(2, f5, 0).checked_add(&RatFunc::constant(2, f5.from_i64(7)))?;
    println!("over F5: t1 + 7 = {h}");
    Ok(())
}
