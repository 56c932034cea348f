//! Exhaustive search on the two open problems, reporting the frontier.
//!
//! ```text
//! cargo run --release --example counterexample_search -- CNS_CM 8
//! ```

use codis::verification::{search_counterexample, Problem};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let problems: Vec<Problem> = match args.first() {
        Some(p) => vec![p.parse().unwrap_or_else(|e| panic!("{e}"))],
        None => Problem::ALL.to_vec(),
    };
    let n_max = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    for p in problems {
        let (_, report) = search_counterexample(p, n_max).expect("order within range");
        println!("{report:#?}");
    }
}
