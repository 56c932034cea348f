//! Exhaustive search for connected well-covered graphs of girth at least
//! five that have no shedding vertex.
//!
//! ```text
//! cargo run --release --example orphan_search -- 14
//! cargo run --release --example orphan_search -- 14 --write crates/core/data/orphans
//! ```
//!
//! With `--write DIR` each graph found is written there as an edge list
//! named by its order and position (`n10_0.txt`, ...).

use std::time::Instant;

use codis::decomposition::{shedding_vertices, SheddingMode};
use codis::io::{emit_edgelist, emit_graph6};
use codis::verification::{enumerate_graphs, GraphFilter};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_n: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(10);
    let out_dir = args.iter().position(|a| a == "--write").and_then(|i| args.get(i + 1));

    // A leaf's neighbor is codominated, so minimum degree two loses nothing.
    let filter = GraphFilter::connected().with_min_girth(5).with_well_covered().with_min_degree(2);
    for n in 2..=max_n {
        let start = Instant::now();
        let candidates = enumerate_graphs(n, &filter).expect("order within range");
        let found: Vec<_> =
            candidates.iter().filter(|g| shedding_vertices(g, SheddingMode::Definitional).is_empty()).collect();
        println!(
            "n={n}: {} candidates, {} without a shedding vertex ({:.1?})",
            candidates.len(),
            found.len(),
            start.elapsed()
        );
        for (i, g) in found.iter().enumerate() {
            println!("  {}", emit_graph6(g));
            if let Some(dir) = out_dir {
                let path = format!("{dir}/n{n}_{i}.txt");
                std::fs::write(&path, emit_edgelist(g)).expect("write edge list");
            }
        }
    }
}
