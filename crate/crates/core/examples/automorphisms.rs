//! Typed automorphisms of K(t1..tn): composition, inverses, closures,
//! basis matrices over a vertical base, and Dedekind independence witnesses.

use noether_forge::autos::{
    basis_matrix, dedekind_witness, lift_permutation, AutGroup, AutSpec, FieldAutomorphism, NiceBasisSpec,
};
use noether_forge::field::CoefField;
use noether_forge::groups::{Perm, PermGroup, DEFAULT_CAP};
use noether_forge::text::parse_ratfunc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = CoefField::Rationals;
    let spec: AutSpec = serde_json::from_str(r#"{"linear":{"A":[[1,1],[0,1]],"B":[0,3]}}"#)?;
    let a = spec.build(2, q)?;
    let tau = FieldAutomorphism::reciprocal(2, q);
    let at = a.compose(&tau)?;
    println!("a = {a}, tau = {tau}, a o tau = {at}");
    println!("(a o tau)^-1 = {}", at.inverse());
    assert!(at.compose(&at.inverse())?.is_identity());

    let f = parse_ratfunc("t1/(t2 + 1)", 2, q)?;
    println!("a(t1/(t2 + 1)) = {}", a.apply(&f)?);
    println!("tau fixes t1 + 1/t1: {}", tau.fixes(&parse_ratfunc("t1 + 1/t1", 2, q)?)?);

    // sign flips and permutations: the hyperoctahedral group
    let flips: Vec<FieldAutomorphism> = (0..3)
        .map(|i| {
            let mut k = vec![0i64; 3];
            k[i] = 1;
            FieldAutomorphism::vertical_scaling(&[2, 2, 2], &k, q)
        })
        .collect::<Result<_, _>>()?;
    let mut gens = flips;
    for p in [Perm::from_cycles(3, "(1 2)")?, Perm::from_cycles(3, "(1 2 3)")?] {
        gens.push(FieldAutomorphism::from_perm(&p, q));
    }
    let h = AutGroup::closure(3, q, &gens, DEFAULT_CAP)?;
    println!("sign flips and S3 generate a group of order {}", h.order());

    let f5 = CoefField::prime(5)?;
    let base = NiceBasisSpec::uniform(1, 4)?;
    let g = FieldAutomorphism::vertical_scaling(&[4], &[1], f5)?;
    println!("over F5, t -> 2t has basis matrix over F5(t^4):");
    for row in basis_matrix(&g, &base)? {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }

    let squares = NiceBasisSpec::uniform(2, 2)?;
    let lifted = lift_permutation(&Perm::from_cycles(2, "(1 2)")?, &squares, q)?;
    println!("lift of (1 2) over the squares base: {lifted}");

    let s3 = AutGroup::from_perm_group(&PermGroup::symmetric(3), q);
    let mut pool: Vec<FieldAutomorphism> = s3.elements().iter().take(3).cloned().collect();
    pool.push(FieldAutomorphism::reciprocal(3, q));
    let w = dedekind_witness(&pool, 50)?;
    println!("Dedekind witness for 4 automorphisms: det {} at trial {}", w.determinant, w.trial);
    Ok(())
}
