//! The classifier on permutation groups, vertical bases, separated groups,
//! and a conjugated group classified through its frame.

use noether_forge::autos::{AutGroup, FieldAutomorphism};
use noether_forge::field::CoefField;
use noether_forge::groups::{Perm, PermGroup, DEFAULT_CAP};
use noether_forge::noether::{self, ClassificationReport};

fn show(label: &str, r: &ClassificationReport) {
    println!("{label:<28} {:?} [{}] order {} transitive {}", r.verdict, r.citation, r.group_order, r.transitive);
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = CoefField::Rationals;
    for n in 3..=5 {
        show(&format!("S{n}"), &noether::classify_permutation_subgroup(&PermGroup::symmetric(n), q));
        show(&format!("A{n}"), &noether::classify_permutation_subgroup(&PermGroup::alternating(n), q));
        show(&format!("C{n}"), &noether::classify_permutation_subgroup(&PermGroup::cyclic(n), q));
    }
    show("trivial on 4", &noether::classify_permutation_subgroup(&PermGroup::trivial(4), q));
    let v4 = PermGroup::closure(4, &[Perm::from_cycles(4, "(1 2)(3 4)")?, Perm::from_cycles(4, "(1 3)(2 4)")?], DEFAULT_CAP)?;
    show("Klein four on 4", &noether::classify_permutation_subgroup(&v4, q));

    show("vertical [2,2] over Q", &noether::classify_vertical(&[2, 2], q, DEFAULT_CAP)?);
    show("vertical [3] over Q", &noether::classify_vertical(&[3], q, DEFAULT_CAP)?);
    let f13 = CoefField::prime(13)?;
    show("vertical [3,4,2] over F13", &noether::classify_vertical(&[3, 4, 2], f13, DEFAULT_CAP)?);

    show("separated [2,2,2] with S3", &noether::classify_separated(&[2, 2, 2], &PermGroup::symmetric(3), q, DEFAULT_CAP)?);
    show("separated [2,2,2] with C3", &noether::classify_separated(&[2, 2, 2], &PermGroup::cyclic(3), q, DEFAULT_CAP)?);

    // conjugate S3 by t -> 2t + (1, 0, -1) and classify through the frame
    let two = q.from_i64(2);
    let z = q.zero();
    let a = vec![vec![two.clone(), z.clone(), z.clone()], vec![z.clone(), two.clone(), z.clone()], vec![z.clone(), z.clone(), two]];
    let phi = FieldAutomorphism::linear(&a, &[q.from_i64(1), q.zero(), q.from_i64(-1)], q)?;
    let s3 = AutGroup::from_perm_group(&PermGroup::symmetric(3), q);
    let conj = noether::conjugate_group(&s3, &phi)?;
    show("conjugated S3, no frame", &noether::classify_aut_group(&conj, None, DEFAULT_CAP)?);
    show("conjugated S3, with frame", &noether::classify_aut_group(&conj, Some(&phi), DEFAULT_CAP)?);
    Ok(())
}
