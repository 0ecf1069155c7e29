//! Exact arithmetic in Q and F_p, and roots of unity.

use noether_forge::field::CoefField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: CoefField = "Q".parse()?;
    let half = q.from_i64(1).checked_div(&q.from_i64(2))?;
    let third = q.from_i64(1).checked_div(&q.from_i64(3))?;
    println!("Q: 1/2 + 1/3 = {}", half.checked_add(&third)?);

    let f7: CoefField = "Fp:7".parse()?;
    let three = f7.from_i64(3);
    println!("F7: 3^-1 = {}, 3^6 = {}", three.inv()?, three.pow(6));
    println!("F7: order of 3 is {:?}", three.multiplicative_order());

    for p in [5u64, 7, 11, 13] {
        let f = CoefField::prime(p)?;
        let orders: Vec<u64> = (1..=12).filter(|&m| f.primitive_root_of_unity(m).is_some()).collect();
        println!("F{p}: primitive m-th roots exist for m in {orders:?}");
    }
    println!("Q has {} roots of unity", q.roots_of_unity_count());
    Ok(())
}
