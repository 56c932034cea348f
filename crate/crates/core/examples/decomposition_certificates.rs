//! Codismantling sequences and shedding traces, replayed on the graph.
//!
//! ```text
//! cargo run --release --example decomposition_certificates -- 'F`OXW'
//! ```

use codis::decomposition::{codominated_vertices, shedding_vertices, DecompositionEngine, SheddingMode};
use codis::io::parse_graph6;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "F`OXW".to_string());
    let g = parse_graph6(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
    println!("edges: {:?}", g.edges());
    println!("codominated (x, witness): {:?}", codominated_vertices(&g));
    println!("shedding vertices: {:?}", shedding_vertices(&g, SheddingMode::default()));
    let engine = DecompositionEngine::default();
    match engine.codismantle(&g) {
        Some(cert) => println!("cd-set {:?}, replay {:?}", cert.cd_set(), cert.verify(&g)),
        None => println!("not codismantlable"),
    }
    match engine.vertex_decomposition(&g) {
        Some(trace) => println!(
            "vertex decomposable, replay {:?}\n{}",
            trace.replay(&g),
            serde_json::to_string_pretty(&trace).unwrap()
        ),
        None => println!("not vertex decomposable"),
    }
}
