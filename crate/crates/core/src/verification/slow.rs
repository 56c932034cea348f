//! Definition-level versions of every invariant the claim checks use.
//!
//! Nothing here calls the engines: subsets are enumerated as masks of the
//! original graph and each property is evaluated straight from its
//! definition. Meant for graphs of at most about 14 vertices.

use std::collections::HashMap;

use crate::graph::{is_chordal, Graph, VertexSet};
use crate::homology::{reduced_betti_numbers, Field};
use crate::independence::SimplicialComplex;

/// Neighbor masks; panics beyond 64 vertices.
fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "slow oracles take at most 64 vertices");
    (0..g.n()).map(|v| g.neighbors(v).mask()).collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn independent(adj: &[u64], s: u64) -> bool {
    bits(s).all(|v| adj[v] & s == 0)
}

/// All subsets of `within` that are independent.
fn independent_subsets(adj: &[u64], within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = within;
    loop {
        if independent(adj, s) {
            out.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & within;
    }
    out
}

fn maximal_independent(adj: &[u64], within: u64) -> Vec<u64> {
    independent_subsets(adj, within).into_iter().filter(|&s| bits(within & !s).all(|v| adj[v] & s != 0)).collect()
}

fn closed(adj: &[u64], v: usize) -> u64 {
    adj[v] | 1 << v
}

fn closed_of_set(adj: &[u64], s: u64) -> u64 {
    bits(s).fold(s, |acc, v| acc | adj[v])
}

fn edgeless_within(adj: &[u64], alive: u64) -> bool {
    bits(alive).all(|v| adj[v] & alive == 0)
}

fn full(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub fn is_well_covered(g: &Graph) -> bool {
    let adj = masks(g);
    let sizes: Vec<u32> = maximal_independent(&adj, full(g.n())).iter().map(|s| s.count_ones()).collect();
    sizes.windows(2).all(|w| w[0] == w[1])
}

pub fn independence_number(g: &Graph) -> usize {
    let adj = masks(g);
    independent_subsets(&adj, full(g.n())).iter().map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

/// Every independent set, as vertex lists.
pub fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let adj = masks(g);
    independent_subsets(&adj, full(g.n())).into_iter().map(|s| bits(s).collect()).collect()
}

fn codominated_in(adj: &[u64], alive: u64, x: usize) -> bool {
    let nx = closed(adj, x) & alive;
    bits(alive & !(1 << x)).any(|y| closed(adj, y) & alive & !nx == 0)
}

/// Some `y != x` has `N[y] ⊆ N[x]`.
pub fn is_codominated(g: &Graph, x: usize) -> bool {
    codominated_in(&masks(g), full(g.n()), x)
}

fn shedding_in(adj: &[u64], alive: u64, x: usize) -> bool {
    let nbrs = adj[x] & alive;
    let outside = alive & !closed(adj, x);
    independent_subsets(adj, outside).into_iter().all(|s| bits(nbrs).any(|y| adj[y] & s == 0))
}

/// Every independent set of `G - N[x]` stays independent after adding
/// some neighbor of `x`.
pub fn is_shedding(g: &Graph, x: usize) -> bool {
    shedding_in(&masks(g), full(g.n()), x)
}

fn cd_search(adj: &[u64], alive: u64, memo: &mut HashMap<u64, Option<Vec<usize>>>) -> Option<Vec<usize>> {
    if edgeless_within(adj, alive) {
        return Some(Vec::new());
    }
    if let Some(r) = memo.get(&alive) {
        return r.clone();
    }
    let found = bits(alive).filter(|&x| codominated_in(adj, alive, x)).find_map(|x| {
        cd_search(adj, alive & !(1 << x), memo).map(|mut rest| {
            rest.insert(0, x);
            rest
        })
    });
    memo.insert(alive, found.clone());
    found
}

/// A codismantling order of deleted vertices, if one exists.
pub fn cd_sequence(g: &Graph) -> Option<Vec<usize>> {
    cd_search(&masks(g), full(g.n()), &mut HashMap::new())
}

pub fn is_codismantlable(g: &Graph) -> bool {
    cd_sequence(g).is_some()
}

fn vd_in(adj: &[u64], alive: u64, memo: &mut HashMap<u64, bool>) -> bool {
    if edgeless_within(adj, alive) {
        return true;
    }
    if let Some(&r) = memo.get(&alive) {
        return r;
    }
    let r = bits(alive).any(|x| {
        shedding_in(adj, alive, x) && vd_in(adj, alive & !(1 << x), memo) && vd_in(adj, alive & !closed(adj, x), memo)
    });
    memo.insert(alive, r);
    r
}

pub fn is_vertex_decomposable(g: &Graph) -> bool {
    vd_in(&masks(g), full(g.n()), &mut HashMap::new())
}

/// `Ind(G[W])` as a complex on the ground set of `G`.
fn complex_on(adj: &[u64], n: usize, within: u64) -> SimplicialComplex {
    let facets = maximal_independent(adj, within).into_iter().map(|s| VertexSet::from_mask(n, s)).collect();
    SimplicialComplex::from_facets(n, facets).expect("facets live on the ground set")
}

/// Reisner: every link `lk(σ)` has vanishing reduced homology below its
/// dimension.
pub fn is_cohen_macaulay(g: &Graph, field: Field) -> bool {
    let n = g.n();
    let adj = masks(g);
    let delta = complex_on(&adj, n, full(n));
    independent_subsets(&adj, full(n)).into_iter().all(|s| {
        let link = delta.link(&VertexSet::from_mask(n, s));
        let h = reduced_betti_numbers(&link, field);
        match link.dimension() {
            None => true,
            Some(d) => (-1..d).all(|i| h.rank(i) == 0),
        }
    })
}

/// Hochster: `reg` is the largest `d + 1` with `h̃_d(Ind(G[W])) != 0`.
pub fn regularity(g: &Graph, field: Field) -> usize {
    let n = g.n();
    let adj = masks(g);
    let mut best = 0;
    for w in 0..=full(n) {
        if w.count_ones() as usize <= best || bits(w).any(|v| adj[v] & w == 0) {
            continue;
        }
        let h = reduced_betti_numbers(&complex_on(&adj, n, w), field);
        if let Some(top) = h.top_nonzero() {
            best = best.max((top + 1) as usize);
        }
    }
    best
}

fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
}

pub fn matching_number(g: &Graph) -> usize {
    let edges = edge_list(g);
    let mut best = 0;
    let mut used = vec![false; g.n()];
    fn rec(i: usize, edges: &[(usize, usize)], used: &mut [bool], size: usize, best: &mut usize) {
        if size + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = size;
            return;
        }
        let (u, v) = edges[i];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            rec(i + 1, edges, used, size + 1, best);
            used[u] = false;
            used[v] = false;
        }
        rec(i + 1, edges, used, size, best);
    }
    rec(0, &edges, &mut used, 0, &mut best);
    best
}

/// Edges pairwise at distance at least two: no shared endpoint, no edge
/// between them.
pub fn induced_matching_number(g: &Graph) -> usize {
    let adj = masks(g);
    let edges = edge_list(g);
    let mut best = 0;
    fn rec(i: usize, edges: &[(usize, usize)], adj: &[u64], blocked: u64, size: usize, best: &mut usize) {
        if size + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = size;
            return;
        }
        let (u, v) = edges[i];
        if blocked & (1 << u | 1 << v) == 0 {
            let nb = blocked | closed(adj, u) | closed(adj, v);
            rec(i + 1, edges, adj, nb, size + 1, best);
        }
        rec(i + 1, edges, adj, blocked, size, best);
    }
    rec(0, &edges, &adj, 0, 0, &mut best);
    best
}

pub fn domination_number(g: &Graph) -> usize {
    let n = g.n();
    let adj = masks(g);
    (0..=n).find(|&k| (0..=full(n)).any(|s| s.count_ones() as usize == k && closed_of_set(&adj, s) == full(n))).unwrap()
}

/// Least number of co-chordal subgraphs covering the edges, over all edge
/// subsets. `None` beyond 20 edges.
pub fn cochord(g: &Graph) -> Option<usize> {
    let edges = edge_list(g);
    let m = edges.len();
    if m > 20 {
        return None;
    }
    if m == 0 {
        return Some(0);
    }
    let cochordal: Vec<u32> = (1u32..1 << m)
        .filter(|&s| {
            let sub: Vec<_> = (0..m).filter(|i| s >> i & 1 == 1).map(|i| edges[i]).collect();
            let h = Graph::from_edges(g.n(), &sub).unwrap();
            is_chordal(&h.complement())
        })
        .collect();
    let maximal: Vec<u32> =
        cochordal.iter().copied().filter(|&s| !cochordal.iter().any(|&t| t != s && t & s == s)).collect();
    let all = (1u32 << m) - 1;
    for k in 1..=m {
        if covers(&maximal, k, 0, 0, all) {
            return Some(k);
        }
    }
    unreachable!("single edges are co-chordal")
}

fn covers(sets: &[u32], k: usize, from: usize, acc: u32, all: u32) -> bool {
    if acc == all {
        return true;
    }
    if k == 0 {
        return false;
    }
    (from..sets.len()).any(|i| covers(sets, k - 1, i + 1, acc | sets[i], all))
}

/// Every edge meets `cover`, and no proper subset has that property.
pub fn is_minimal_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let c: u64 = cover.iter().fold(0, |acc, &v| acc | 1 << v);
    let edges = edge_list(g);
    let covers = |s: u64| edges.iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1);
    covers(c) && bits(c).all(|v| !covers(c & !(1 << v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, pan, path};

    #[test]
    fn cycles() {
        let cm: Vec<usize> = (3..=8).filter(|&n| is_cohen_macaulay(&cycle(n).unwrap(), Field::Gf2)).collect();
        assert_eq!(cm, vec![3, 5]);
        let vd: Vec<usize> = (3..=8).filter(|&n| is_vertex_decomposable(&cycle(n).unwrap())).collect();
        assert_eq!(vd, vec![3, 5]);
        let wc: Vec<usize> = (3..=9).filter(|&n| is_well_covered(&cycle(n).unwrap())).collect();
        assert_eq!(wc, vec![3, 4, 5, 7]);
        assert!(!is_codismantlable(&cycle(6).unwrap()));
    }

    #[test]
    fn numbers_on_paths() {
        let p6 = path(6).unwrap();
        assert_eq!(matching_number(&p6), 3);
        assert_eq!(induced_matching_number(&p6), 2);
        assert_eq!(domination_number(&p6), 2);
        assert_eq!(regularity(&p6, Field::Gf2), 2);
        assert_eq!(cochord(&p6), Some(2));
        assert_eq!(independence_number(&p6), 3);
    }

    #[test]
    fn pan_certificate() {
        let g = pan(4).unwrap();
        let seq = cd_sequence(&g).unwrap();
        assert!(is_minimal_vertex_cover(&g, &seq));
        assert!(is_shedding(&g, 0));
        assert!(!is_minimal_vertex_cover(&g, &[0, 1, 2]));
    }
}
