//! Matchings, induced matchings, domination and co-chordal covers.

mod cochord;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

pub use cochord::{
    cochordal_cover_general, cochordal_cover_girth5, cochordal_cover_number, cochordal_subgraph_shape, CochordalClass,
    CochordalCover, ShapeError, SubgraphShape,
};

/// A set of edges of a host graph, by position in `Graph::edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(VertexSet);

impl EdgeSet {
    pub fn empty(g: &Graph) -> EdgeSet {
        EdgeSet(VertexSet::new(g.edge_count()))
    }

    /// `None` if some id is not an edge id of `g`.
    pub fn from_ids(g: &Graph, ids: impl IntoIterator<Item = usize>) -> Option<EdgeSet> {
        VertexSet::from_vertices(g.edge_count(), ids).ok().map(EdgeSet)
    }

    /// `None` if some pair is not an edge of `g`.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Option<EdgeSet> {
        let all = g.edges();
        let ids: Option<Vec<usize>> =
            edges.iter().map(|&(u, v)| all.iter().position(|&e| e == (u.min(v), u.max(v)))).collect();
        EdgeSet::from_ids(g, ids?)
    }

    pub fn ids(&self) -> Vec<usize> {
        self.0.to_vec()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.0.contains(id)
    }

    pub fn insert(&mut self, id: usize) {
        self.0.insert(id);
    }

    /// Endpoint pairs, given the edge list of the host.
    pub fn endpoints(&self, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
        self.0.iter().map(|i| edges[i]).collect()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.ids().serialize(s)
    }
}

/// Maximum matching by augmenting paths with blossom contraction.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut blossom = vec![false; n];

    let lca = |mut a: usize, mut b: usize, base: &[usize], mate: &[usize], parent: &[usize]| {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = NONE);
        used.iter_mut().for_each(|u| *u = false);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut end = NONE;
        'search: while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    let cur = lca(v, to, &base, &mate, &parent);
                    blossom.iter_mut().for_each(|b| *b = false);
                    for (mut x, mut child) in [(v, to), (to, v)] {
                        while base[x] != cur {
                            blossom[base[x]] = true;
                            blossom[base[mate[x]]] = true;
                            parent[x] = child;
                            child = mate[x];
                            x = parent[mate[x]];
                        }
                    }
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        end = to;
                        break 'search;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        let mut v = end;
        while v != NONE {
            let pv = parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
    (0..n).filter(|&v| mate[v] != NONE && v < mate[v]).map(|v| (v, mate[v])).collect()
}

/// `m(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Maximum induced matching, lexicographically least among optima in
/// edge-id order.
pub fn maximum_induced_matching(g: &Graph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let m = edges.len();
    // conflict graph: two edges clash if they touch or an edge joins them
    let mut adj = vec![VertexSet::new(m); m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let clash = [a, b].iter().any(|&x| x == c || x == d || g.has_edge(x, c) || g.has_edge(x, d));
            if clash {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let conflict = Graph::from_adjacency(adj).expect("symmetric by construction");
    maximum_independent_set(&conflict).iter().map(|i| edges[i]).collect()
}

/// `im(G)`.
pub fn induced_matching_number(g: &Graph) -> usize {
    maximum_induced_matching(g).len()
}

/// Maximum independent set by branch and bound, including the smallest
/// candidate first so the first optimum found is lexicographically least.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let greedy = {
        let mut left = g.vertices();
        let mut count = 0usize;
        while let Some(v) = left.iter().min_by_key(|&v| g.neighbors(v).intersection_len(&left)) {
            count += 1;
            left.remove(v);
            left.difference_with(g.neighbors(v));
        }
        count
    };
    // start just below the greedy value so the search itself records the
    // first optimum it meets
    let mut best: Option<VertexSet> = None;
    let mut best_len = greedy.saturating_sub(1);
    let mut current = VertexSet::new(n);
    mis_branch(g, &mut current, g.vertices(), &mut best, &mut best_len);
    best.unwrap_or_else(|| VertexSet::new(n))
}

fn mis_branch(
    g: &Graph,
    current: &mut VertexSet,
    candidates: VertexSet,
    best: &mut Option<VertexSet>,
    best_len: &mut usize,
) {
    let Some(v) = candidates.first() else {
        if current.len() > *best_len {
            *best_len = current.len();
            *best = Some(current.clone());
        }
        return;
    };
    if current.len() + clique_cover_bound(g, &candidates) <= *best_len {
        return;
    }
    current.insert(v);
    let mut inc = candidates.difference(g.neighbors(v));
    inc.remove(v);
    mis_branch(g, current, inc, best, best_len);
    current.remove(v);
    let mut exc = candidates;
    exc.remove(v);
    mis_branch(g, current, exc, best, best_len);
}

/// Size of a greedy partition of `set` into cliques: an upper bound on
/// the independence number of `G[set]`.
fn clique_cover_bound(g: &Graph, set: &VertexSet) -> usize {
    let mut left = set.clone();
    let mut cliques = 0;
    while let Some(v) = left.first() {
        cliques += 1;
        left.remove(v);
        let mut common = g.neighbors(v).intersection(&left);
        while let Some(w) = common.first() {
            left.remove(w);
            common.intersect_with(g.neighbors(w));
        }
    }
    cliques
}

/// Edge tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    /// An endpoint has degree one.
    Pendant,
    /// Both endpoints have degree two and share a neighbor.
    Triangle,
    Other,
}

/// Tags for `g.edges()`, in the same order.
pub fn classify_edges(g: &Graph) -> Vec<EdgeKind> {
    g.edges()
        .into_iter()
        .map(|(u, v)| {
            if g.degree(u) == 1 || g.degree(v) == 1 {
                EdgeKind::Pendant
            } else if g.degree(u) == 2 && g.degree(v) == 2 && !g.neighbors(u).is_disjoint(g.neighbors(v)) {
                EdgeKind::Triangle
            } else {
                EdgeKind::Other
            }
        })
        .collect()
}

/// Minimum dominating set, lexicographically least among optima.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let none = VertexSet::new(n);
    let mut found = dominate(&closed, none.clone(), &none, n + 1).expect("the whole vertex set dominates");
    // shrink until no smaller set exists
    while let Some(smaller) = dominate(&closed, VertexSet::new(n), &VertexSet::new(n), found.len()) {
        found = smaller;
    }
    let gamma = found.len();
    // fix vertices in ascending order, keeping a dominating set of size γ
    let mut chosen = VertexSet::new(n);
    let mut forbidden = VertexSet::new(n);
    for v in 0..n {
        if chosen.len() == gamma {
            break;
        }
        let mut trial = chosen.clone();
        trial.insert(v);
        if dominate(&closed, trial.clone(), &forbidden, gamma + 1).is_some() {
            chosen = trial;
        } else {
            forbidden.insert(v);
        }
    }
    debug_assert!(is_dominating(g, &chosen));
    chosen
}

/// A dominating set with fewer than `limit` vertices that contains
/// `chosen` and avoids `forbidden`. Branches on the dominator of the
/// smallest undominated vertex.
fn dominate(closed: &[VertexSet], chosen: VertexSet, forbidden: &VertexSet, limit: usize) -> Option<VertexSet> {
    let n = closed.len();
    let mut dominated = VertexSet::new(n);
    for v in chosen.iter() {
        dominated.union_with(&closed[v]);
    }
    let max_reach = closed.iter().map(VertexSet::len).max().unwrap_or(1);
    dominate_rec(closed, chosen, dominated, forbidden.clone(), limit, max_reach)
}

fn dominate_rec(
    closed: &[VertexSet],
    chosen: VertexSet,
    dominated: VertexSet,
    mut forbidden: VertexSet,
    limit: usize,
    max_reach: usize,
) -> Option<VertexSet> {
    let n = closed.len();
    let missing = n - dominated.len();
    if missing == 0 {
        return (chosen.len() < limit).then_some(chosen);
    }
    if chosen.len() + missing.div_ceil(max_reach) >= limit {
        return None;
    }
    let u = dominated.complement().first().unwrap();
    let options = closed[u].difference(&forbidden);
    for w in options.iter() {
        let mut c = chosen.clone();
        c.insert(w);
        let d = dominated.union(&closed[w]);
        if let Some(found) = dominate_rec(closed, c, d, forbidden.clone(), limit, max_reach) {
            return Some(found);
        }
        // later branches need not reconsider w
        forbidden.insert(w);
    }
    None
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    let mut covered = set.clone();
    for v in set.iter() {
        covered.union_with(g.neighbors(v));
    }
    covered.len() == g.n()
}

/// `γ(G)`.
pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Graph::from_edges(m + 1, &edges).unwrap()
    }

    pub(crate) fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    fn subsets(k: usize) -> impl Iterator<Item = Vec<usize>> {
        (0u64..1 << k).map(move |m| (0..k).filter(|i| m >> i & 1 == 1).collect())
    }

    /// Oracles over all edge or vertex subsets.
    fn brute_matching(g: &Graph, induced: bool) -> usize {
        let edges = g.edges();
        subsets(edges.len())
            .filter(|s| {
                s.iter().enumerate().all(|(a, &i)| {
                    s[a + 1..].iter().all(|&j| {
                        let ((p, q), (r, t)) = (edges[i], edges[j]);
                        let disjoint = p != r && p != t && q != r && q != t;
                        disjoint && (!induced || [p, q].iter().all(|&x| !g.has_edge(x, r) && !g.has_edge(x, t)))
                    })
                })
            })
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    fn brute_domination(g: &Graph) -> Vec<usize> {
        let mut all: Vec<Vec<usize>> = subsets(g.n())
            .filter(|s| is_dominating(g, &VertexSet::from_vertices(g.n(), s.iter().copied()).unwrap()))
            .collect();
        let best = all.iter().map(Vec::len).min().unwrap();
        all.retain(|s| s.len() == best);
        all.into_iter().min().unwrap()
    }

    #[test]
    fn named_cases() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(matching_number(&k2), 1);
        assert_eq!(matching_number(&cycle(6)), 3);
        assert_eq!(induced_matching_number(&star(5)), 1);
        assert_eq!(induced_matching_number(&cycle(6)), 2);
        assert_eq!(domination_number(&star(5)), 1);
        assert_eq!(domination_number(&cycle(4)), 2);
        assert_eq!(matching_number(&Graph::empty(3)), 0);
        assert_eq!(induced_matching_number(&Graph::empty(0)), 0);
        assert_eq!(domination_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn blossom_needed() {
        // two triangles joined by a path: greedy alone misses the augmenting path through a blossom
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert_eq!(matching_number(&g), 3);
        let petersen = {
            let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            e.extend((0..5).map(|i| (i, i + 5)));
            e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            Graph::from_edges(10, &e).unwrap()
        };
        assert_eq!(matching_number(&petersen), 5);
    }

    #[test]
    fn agree_with_brute_force_on_six_vertices() {
        for g in all_graphs(6).step_by(3) {
            let mm = maximum_matching(&g);
            assert_eq!(mm.len(), brute_matching(&g, false), "{g:?}");
            assert!(mm.iter().all(|&(u, v)| g.has_edge(u, v)));
            assert_eq!(induced_matching_number(&g), brute_matching(&g, true), "{g:?}");
            assert_eq!(minimum_dominating_set(&g).to_vec(), brute_domination(&g), "{g:?}");
        }
    }

    #[test]
    fn induced_matching_is_lexicographically_least() {
        // P6: optimal induced matchings {01,34}, {01,45}, {12,45}; least in edge order is {01,34}
        let p6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(maximum_induced_matching(&p6), vec![(0, 1), (3, 4)]);
    }

    #[test]
    fn edge_tags() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(classify_edges(&k2), vec![EdgeKind::Pendant]);
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(classify_edges(&k3), vec![EdgeKind::Triangle; 3]);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(classify_edges(&p4), vec![EdgeKind::Pendant, EdgeKind::Other, EdgeKind::Pendant]);
    }

    #[test]
    fn edge_sets() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = EdgeSet::from_edges(&p4, &[(2, 1), (0, 1)]).unwrap();
        assert_eq!(s.ids(), vec![0, 1]);
        assert!(EdgeSet::from_edges(&p4, &[(0, 2)]).is_none());
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,1]");
    }
}
