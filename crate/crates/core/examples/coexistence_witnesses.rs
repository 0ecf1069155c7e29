//! Solution and non-solution families side by side on n letters.

use noether_forge::field::CoefField;
use noether_forge::groups::DEFAULT_CAP;
use noether_forge::noether::{vertical_gcd_reduce, witnesses_theorem_1_8};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let w = witnesses_theorem_1_8(n, CoefField::Rationals, DEFAULT_CAP)?;
    for (kind, fams) in [("solution", &w.solutions), ("non-solution", &w.non_solutions)] {
        for f in fams {
            println!(
                "{kind:<13} {:<16} order {:>5} transitive {:<5} {:?}",
                f.family, f.report.group_order, f.report.transitive, f.report.verdict
            );
        }
    }

    let red = vertical_gcd_reduce(&[vec![4, 3], vec![6, 7]])?;
    for c in &red.certificates {
        println!("t{}: gcd{:?} = {} with Bezout {:?}", c.variable, c.exponents, c.gcd, c.bezout);
    }
    println!("reduced exponents {:?}", red.reduced);
    Ok(())
}
