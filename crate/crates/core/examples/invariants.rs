//! Full invariant report, with certificates, for one graph.
//!
//! ```text
//! cargo run --release --example invariants            # G_1
//! cargo run --release --example invariants -- 'E?~o' # any graph6 string
//! ```

use codis::constructions::gn_family;
use codis::io::{invariant_report, parse_graph6, verify_report, ReportOptions};

fn main() {
    let g = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text).unwrap_or_else(|e| panic!("{text}: {e}")),
        None => gn_family(1).unwrap(),
    };
    let report = invariant_report(&g, &ReportOptions::default(), None);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    match verify_report(&report) {
        Ok(k) => eprintln!("{k} certificates replayed"),
        Err(errors) => eprintln!("invalid report: {errors:?}"),
    }
}
