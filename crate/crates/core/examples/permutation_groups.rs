//! Permutations, closures, family recognition, and the subgroup lattice of S_m.

use noether_forge::groups::{normal_subgroups_of_sn, subgroups_of_sn, Perm, PermGroup, DEFAULT_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Perm::from_cycles(4, "(1 2 3 4)")?;
    let t = Perm::from_cycles(4, "(1 2)")?;
    println!("{c} o {t} = {}", c.compose(&t)?);
    println!("sign of {c} is {}, order {}", c.sign(), c.order());

    let g = PermGroup::closure(4, &[c.clone(), t], DEFAULT_CAP)?;
    println!("<(1 2 3 4), (1 2)> has order {} and is {:?}", g.order(), g.classify());
    let d = PermGroup::closure(4, &[c, Perm::from_cycles(4, "(1 3)")?], DEFAULT_CAP)?;
    println!("dihedral subgroup: order {}, transitive {}, normal {}", d.order(), d.is_transitive(), d.is_normal_in(&g)?);

    for n in 2..=6 {
        let rev = Perm::reversal(n);
        println!("reversal on {n} letters: {rev}, sign {}", rev.sign());
    }

    for m in 1..=5 {
        let subs = subgroups_of_sn(m)?;
        let normal: Vec<usize> = normal_subgroups_of_sn(m)?.iter().map(|h| h.order()).collect();
        println!("S{m}: {} subgroups, normal subgroup orders {normal:?}", subs.len());
    }
    Ok(())
}
