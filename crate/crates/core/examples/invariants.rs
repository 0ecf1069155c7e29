//! Reynolds averaging, orbit polynomials, and the Noether conditions N1/N2.

use noether_forge::autos::{AutGroup, FieldAutomorphism};
use noether_forge::field::CoefField;
use noether_forge::groups::{PermGroup, DEFAULT_CAP};
use noether_forge::noether::{self, orbit_min_poly};
use noether_forge::poly::symmetric_reduce;
use noether_forge::text::parse_ratfunc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = CoefField::Rationals;
    let s3 = AutGroup::from_perm_group(&PermGroup::symmetric(3), q);
    let gens: Vec<String> = noether::sym_generators(3, q).iter().map(|g| g.to_string()).collect();
    println!("generators of the symmetric invariants: {gens:?}");

    let f = parse_ratfunc("t1^2*t2", 3, q)?;
    let r = noether::reynolds(&f, &s3)?;
    println!("R(t1^2*t2) = {r}");
    println!("  in e's: {}", symmetric_reduce(r.num()).expression.to_string_with("e"));

    let g = parse_ratfunc("t1/(t2 + t3)", 3, q)?;
    println!("R(t1/(t2 + t3)) = {}", noether::reynolds(&g, &s3)?);

    let c4 = PermGroup::cyclic(4);
    let orb = orbit_min_poly(&c4, 0, q);
    println!("orbit of t1 under C4: {:?}, polynomial {}", orb.orbit, orb.poly);

    let f2 = CoefField::prime(2)?;
    let s2 = AutGroup::from_perm_group(&PermGroup::symmetric(2), f2);
    println!("over F2: {}", noether::reynolds(&parse_ratfunc("t1", 2, f2)?, &s2).unwrap_err());

    // Scalings by cube roots of unity over F7 together with S2.
    let f7 = CoefField::prime(7)?;
    let mut gens = vec![
        FieldAutomorphism::vertical_scaling(&[3, 3], &[1, 0], f7)?,
        FieldAutomorphism::vertical_scaling(&[3, 3], &[0, 1], f7)?,
    ];
    let scal = AutGroup::closure(2, f7, &gens, DEFAULT_CAP)?;
    gens.extend(AutGroup::from_perm_group(&PermGroup::symmetric(2), f7).generators().iter().cloned());
    let big = AutGroup::closure(2, f7, &gens, DEFAULT_CAP)?;
    println!("N1 for scalings inside scalings x S2: {}", noether::check_n1(&big, &scal)?);
    let n2 = noether::probe_n2(&big, &scal, &[])?;
    println!("N2 probes: passed {} on {} probes (necessary check only)", n2.passed, n2.probes_checked);
    Ok(())
}
