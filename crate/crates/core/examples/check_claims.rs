//! Runs claim checks on their default universes and prints one line each.
//!
//! ```text
//! cargo run --release --example check_claims
//! cargo run --release --example check_claims -- THM_GI5 COR_CD_DOM
//! ```

use codis::verification::{check_claim, CheckOptions, ClaimId};

fn main() {
    let ids: Vec<ClaimId> = match std::env::args().skip(1).collect::<Vec<_>>() {
        args if args.is_empty() => ClaimId::ALL.to_vec(),
        args => args.iter().map(|a| a.parse().unwrap_or_else(|e| panic!("{e}"))).collect(),
    };
    for id in ids {
        let r = check_claim(id, &CheckOptions::default()).expect("default universes are in range");
        println!(
            "{:<18} tested={:<6} applicable={:<6} violations={} {:>7} ms  {}",
            id.as_str(),
            r.tested,
            r.applicable,
            r.violations.len(),
            r.wall_time_ms.unwrap_or(0),
            r.verdict
        );
        for v in &r.violations {
            println!("    {} {:?}: {}", v.graph6, v.status, v.detail);
        }
    }
}
