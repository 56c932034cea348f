//! Clique whiskerings of cycles with one class per edge.
//!
//! ```text
//! cargo run --release --example whiskered_cycles -- 4 8
//! ```

use codis::constructions::{clique_whisker, cycle, EdgeCliquePartition};
use codis::decomposition::DecompositionEngine;
use codis::homology::{is_sequentially_cm, regularity, Field, DEFAULT_BETTI_CAP};
use codis::independence::independence_number;
use codis::matching::induced_matching_number;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args[..] {
        [a, b] => (a, b),
        [a] => (a, a),
        _ => (4, 8),
    };
    let engine = DecompositionEngine::default();
    for n in lo..=hi {
        let host = cycle(n).unwrap();
        let h = clique_whisker(&host, &EdgeCliquePartition::edges_of(&host));
        let min_degree = (0..h.n()).map(|v| h.degree(v)).min().unwrap_or(0);
        let trace = engine.vertex_decomposition(&h);
        let cd = engine.codismantle(&h);
        let reg = regularity(&h, Field::Gf2, DEFAULT_BETTI_CAP.max(h.n())).unwrap();
        println!(
            "n={n}: {} vertices, min degree {min_degree}, alpha {}, vd {}, cd {}, scm/gf2 {}, im {}, reg {reg}",
            h.n(),
            independence_number(&h),
            trace.as_ref().is_some_and(|t| t.replay(&h).is_ok()),
            cd.as_ref().is_some_and(|c| c.verify(&h).is_ok()),
            is_sequentially_cm(&h, Field::Gf2),
            induced_matching_number(&h),
        );
    }
}
