//! Rewriting symmetric polynomials in e1..en, and the root-product identity.

use noether_forge::field::CoefField;
use noether_forge::poly::{expand_root_product, symmetric_reduce};
use noether_forge::text::parse_poly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = CoefField::Rationals;
    for (text, n) in [
        ("t1^2 + t2^2", 2),
        ("t1^3 + t2^3 + t3^3", 3),
        ("t1^2*t2 + t1*t2^2 + t1^2*t3 + t1*t3^2 + t2^2*t3 + t2*t3^2", 3),
        ("t1^2 + t2", 2),
    ] {
        let f = parse_poly(text, n, q)?;
        let r = symmetric_reduce(&f);
        if r.is_symmetric() {
            println!("{f}  =  {}", r.expression.to_string_with("e"));
        } else {
            println!("{f}  is not symmetric (residue {})", r.residue);
        }
        assert_eq!(r.back_substitute(), f);
    }

    // prod (Y - X_i) = sum (-1)^k e_k Y^(m-k)
    for m in 1..=6 {
        let rep = expand_root_product(m, q);
        println!("m = {m}: root product identity {}", if rep.passed { "holds" } else { "FAILS" });
    }
    Ok(())
}
