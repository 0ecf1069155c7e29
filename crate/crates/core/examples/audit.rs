//! Brute-force audits of finite claims; pass check ids as arguments.

use noether_forge::noether::{audit_paper, AuditOptions, AUDIT_CHECKS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        ids = AUDIT_CHECKS.iter().map(|s| s.to_string()).collect();
    }
    for f in audit_paper(&ids, &AuditOptions::default())? {
        let mark = if f.discrepancy { "DISCREPANCY" } else { "ok" };
        println!("{:<24} {mark:<12} computed {} / claimed {}", f.check_id, f.computed, f.paper_claim);
    }
    Ok(())
}
