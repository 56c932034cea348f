//! Seeded samplers for the randomized claim universes.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::constructions::{Digraph, EdgeCliquePartition, Poset};
use crate::graph::Graph;

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).expect("ids in range")
}

/// Orders `1..=max_n` uniformly; arcs follow a random topological order,
/// each present with a density drawn per sample.
pub fn random_dag<R: Rng>(rng: &mut R, max_n: usize) -> Digraph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.7);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Digraph::new(n, arcs).expect("a topological order has no loops or repeats")
}

/// The transitive closure of a random acyclic relation.
pub fn random_poset<R: Rng>(rng: &mut R, max_n: usize) -> Poset {
    let d = random_dag(rng, max_n);
    Poset::from_relations(d.n(), d.arcs()).expect("acyclic relations close to a partial order")
}

/// Grows cliques greedily from random uncovered edges.
pub fn random_clique_partition<R: Rng>(rng: &mut R, g: &Graph) -> EdgeCliquePartition {
    let n = g.n();
    let mut free = vec![vec![false; n]; n];
    let mut remaining = g.edges();
    for &(u, v) in &remaining {
        free[u][v] = true;
        free[v][u] = true;
    }
    let mut classes = Vec::new();
    while !remaining.is_empty() {
        let (u, v) = remaining[rng.gen_range(0..remaining.len())];
        let mut clique = vec![u, v];
        let mut others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
        others.shuffle(rng);
        for w in others {
            if rng.gen_bool(0.7) && clique.iter().all(|&c| free[c][w]) {
                clique.push(w);
            }
        }
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                free[a][b] = false;
                free[b][a] = false;
            }
        }
        remaining.retain(|&(a, b)| free[a][b]);
        clique.sort_unstable();
        classes.push(clique);
    }
    EdgeCliquePartition::new(g, classes).expect("greedy classes are edge-disjoint cliques covering every edge")
}
