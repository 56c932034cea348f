//! Which cycles are well-covered, Cohen-Macaulay, vertex decomposable or
//! free of codominated vertices.
//!
//! ```text
//! cargo run --release --example cycle_classification -- 12
//! ```

use codis::constructions::cycle;
use codis::decomposition::{is_cns, DecompositionEngine};
use codis::homology::{is_cohen_macaulay, regularity, Field, DEFAULT_BETTI_CAP};
use codis::independence::is_well_covered;
use codis::matching::induced_matching_number;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let engine = DecompositionEngine::default();
    println!("{:>3} {:>4} {:>7} {:>5} {:>4} {:>4} {:>4} {:>4}", "n", "wc", "cm/gf2", "cm/q", "vd", "cns", "im", "reg");
    for n in 3..=max_n {
        let g = cycle(n).unwrap();
        let reg = regularity(&g, Field::Gf2, DEFAULT_BETTI_CAP).map_or("-".to_string(), |r| r.to_string());
        println!(
            "{n:>3} {:>4} {:>7} {:>5} {:>4} {:>4} {:>4} {reg:>4}",
            is_well_covered(&g),
            is_cohen_macaulay(&g, Field::Gf2),
            is_cohen_macaulay(&g, Field::Rational),
            engine.is_vertex_decomposable(&g),
            is_cns(&g),
            induced_matching_number(&g),
        );
    }
}
