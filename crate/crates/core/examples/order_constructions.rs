//! Common-enemy graphs of acyclic digraphs and upper bound graphs of
//! posets, each with replayed decomposition and codismantling
//! certificates.
//!
//! ```text
//! cargo run --release --example order_constructions -- 20
//! ```

use codis::constructions::{common_enemy, upper_bound_graph};
use codis::decomposition::DecompositionEngine;
use codis::io::emit_graph6;
use codis::verification::random::{random_dag, random_poset};
use codis::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn certify(engine: &DecompositionEngine, label: &str, g: &Graph) {
    let vd = engine.vertex_decomposition(g).map(|t| t.replay(g).is_ok());
    let cd = engine.codismantle(g).map(|c| c.cd_set());
    println!("{label:<14} {:<24} vd={vd:?} cd-set={cd:?}", emit_graph6(g));
}

fn main() {
    let count: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let engine = DecompositionEngine::default();
    for _ in 0..count {
        let d = random_dag(&mut rng, 10);
        certify(&engine, &format!("dag n={}", d.n()), &common_enemy(&d));
    }
    for _ in 0..count {
        let p = random_poset(&mut rng, 8);
        certify(&engine, &format!("poset n={}", p.n()), &upper_bound_graph(&p));
    }
}
