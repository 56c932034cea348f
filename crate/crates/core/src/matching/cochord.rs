use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{find_chordless_cycle, girth, is_cochordal, Girth, Graph};

use super::{induced_matching_number, minimum_dominating_set, EdgeSet};

/// One class of a cover; `center` is set when the class is the double
/// star of all edges meeting that edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CochordalClass {
    pub edges: EdgeSet,
    pub center: Option<(usize, usize)>,
}

/// Co-chordal subgraphs whose edges together cover `E(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CochordalCover {
    pub classes: Vec<CochordalClass>,
}

impl CochordalCover {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Checks coverage, co-chordality of every class, and that a stated
    /// center is an edge inside its class.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let edges = g.edges();
        let mut covered = EdgeSet::empty(g);
        for (k, class) in self.classes.iter().enumerate() {
            let h = spanned(g.n(), &class.edges.endpoints(&edges));
            if !is_cochordal(&h) {
                return Err(format!("class {k} is not co-chordal"));
            }
            if let Some((u, v)) = class.center {
                if !h.has_edge(u, v) {
                    return Err(format!("center {u}-{v} of class {k} is not in the class"));
                }
            }
            for id in class.edges.ids() {
                covered.insert(id);
            }
        }
        match (0..edges.len()).find(|&i| !covered.contains(i)) {
            Some(i) => Err(format!("edge {}-{} is not covered", edges[i].0, edges[i].1)),
            None => Ok(()),
        }
    }
}

fn spanned(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("edges of the host")
}

/// `cochord(G)` with a witness. At girth at least five the line-graph
/// domination engine is used, otherwise the general search.
pub fn cochordal_cover_number(g: &Graph) -> (usize, CochordalCover) {
    let cover = if girth(g).at_least(5) {
        cochordal_cover_girth5(g).expect("girth checked")
    } else {
        cochordal_cover_general(g)
    };
    (cover.len(), cover)
}

/// At girth at least five, a minimum dominating set of `L(G)` per
/// component gives a minimum cover by double stars around its edges.
/// `None` when the girth is below five.
pub fn cochordal_cover_girth5(g: &Graph) -> Option<CochordalCover> {
    if !girth(g).at_least(5) {
        return None;
    }
    let all = g.edges();
    let mut classes = Vec::new();
    for comp in g.components() {
        let part = g.induced(&comp);
        if part.graph.edge_count() == 0 {
            continue;
        }
        let line = part.graph.line_graph();
        for i in minimum_dominating_set(&line.graph).iter() {
            let (a, b) = line.edges[i];
            let (u, v) = (part.original[a], part.original[b]);
            let ids =
                all.iter().enumerate().filter(|(_, &(p, q))| p == u || p == v || q == u || q == v).map(|(k, _)| k);
            classes
                .push(CochordalClass { edges: EdgeSet::from_ids(g, ids).unwrap(), center: Some((u.min(v), u.max(v))) });
        }
    }
    Some(CochordalCover { classes })
}

/// Exhaustive search: iterative deepening on the number of classes
/// starting from `im(G)`, assigning edges in order to classes that can
/// still grow into co-chordal subgraphs of `G`.
pub fn cochordal_cover_general(g: &Graph) -> CochordalCover {
    let edges = g.edges();
    if edges.is_empty() {
        return CochordalCover { classes: Vec::new() };
    }
    let mut search = CoverSearch { g, edges: &edges, order: edge_order(&edges), memo: HashMap::new() };
    let lower = induced_matching_number(g).max(1);
    for r in lower..=edges.len() {
        let mut classes: Vec<EdgeSet> = Vec::new();
        if search.assign(0, &mut classes, r) {
            let classes = classes
                .into_iter()
                .map(|f| CochordalClass { edges: search.extension(&f).expect("class is extendable"), center: None })
                .collect();
            return CochordalCover { classes };
        }
    }
    unreachable!("one class per edge always works")
}

/// Breadth-first edge order, so each edge touches an earlier one when
/// possible and conflicts surface early.
fn edge_order(edges: &[(usize, usize)]) -> Vec<usize> {
    let mut order = Vec::with_capacity(edges.len());
    let mut placed = vec![false; edges.len()];
    while order.len() < edges.len() {
        let start = (0..edges.len()).find(|&i| !placed[i]).unwrap();
        placed[start] = true;
        order.push(start);
        let mut k = order.len() - 1;
        while k < order.len() {
            let (a, b) = edges[order[k]];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if !placed[i] && (u == a || u == b || v == a || v == b) {
                    placed[i] = true;
                    order.push(i);
                }
            }
            k += 1;
        }
    }
    order
}

struct CoverSearch<'a> {
    g: &'a Graph,
    edges: &'a [(usize, usize)],
    order: Vec<usize>,
    memo: HashMap<EdgeSet, Option<EdgeSet>>,
}

impl CoverSearch<'_> {
    fn assign(&mut self, i: usize, classes: &mut Vec<EdgeSet>, r: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let e = self.order[i];
        for c in 0..classes.len() {
            let mut grown = classes[c].clone();
            grown.insert(e);
            if self.extension(&grown).is_some() {
                let saved = std::mem::replace(&mut classes[c], grown);
                if self.assign(i + 1, classes, r) {
                    return true;
                }
                classes[c] = saved;
            }
        }
        // opening a new class is symmetric across the unused ones
        if classes.len() < r {
            let mut fresh = EdgeSet::empty(self.g);
            fresh.insert(e);
            classes.push(fresh);
            if self.assign(i + 1, classes, r) {
                return true;
            }
            classes.pop();
        }
        false
    }

    /// Some co-chordal `F'` with `F ⊆ F' ⊆ E(G)`. An induced cycle of
    /// length at least four in the complement of `F` survives until one of
    /// its edges is added to `F`, so the search branches on those edges
    /// that belong to `G`.
    fn extension(&mut self, f: &EdgeSet) -> Option<EdgeSet> {
        if let Some(known) = self.memo.get(f) {
            return known.clone();
        }
        let h = spanned(self.g.n(), &f.endpoints(self.edges));
        let result = match find_chordless_cycle(&h.complement()) {
            None => Some(f.clone()),
            Some(cycle) => {
                let k = cycle.len();
                let mut found = None;
                for j in 0..k {
                    let (a, b) = (cycle[j], cycle[(j + 1) % k]);
                    if !self.g.has_edge(a, b) {
                        continue;
                    }
                    let id = self.edges.binary_search(&(a.min(b), a.max(b))).unwrap();
                    let mut grown = f.clone();
                    grown.insert(id);
                    if let Some(ext) = self.extension(&grown) {
                        found = Some(ext);
                        break;
                    }
                }
                found
            }
        };
        self.memo.insert(f.clone(), result.clone());
        result
    }
}

/// Shape of a co-chordal subgraph of a graph of girth at least five.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubgraphShape {
    Star,
    DoubleStar,
    NotCochordal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("shape classification needs ambient girth at least 5, got {0}")]
    AmbientGirth(usize),
    #[error("the subgraph has no edges")]
    NoEdges,
    #[error("the subgraph has girth {0}, below the stated ambient girth {1}")]
    ShortCycle(Girth, usize),
    #[error("co-chordal subgraph is neither a star nor a double star")]
    NeitherShape,
}

/// Classifies `h` (isolated vertices ignored), assuming it sits inside a
/// graph of girth `ambient_girth >= 5`.
pub fn cochordal_subgraph_shape(h: &Graph, ambient_girth: usize) -> Result<SubgraphShape, ShapeError> {
    if ambient_girth < 5 {
        return Err(ShapeError::AmbientGirth(ambient_girth));
    }
    let edges = h.edges();
    if edges.is_empty() {
        return Err(ShapeError::NoEdges);
    }
    let own = girth(h);
    if !own.at_least(ambient_girth) {
        return Err(ShapeError::ShortCycle(own, ambient_girth));
    }
    if !is_cochordal(h) {
        return Ok(SubgraphShape::NotCochordal);
    }
    let meets = |s: &[usize]| edges.iter().all(|&(u, v)| s.contains(&u) || s.contains(&v));
    if (0..h.n()).any(|c| meets(&[c])) {
        return Ok(SubgraphShape::Star);
    }
    if edges.iter().any(|&(u, v)| meets(&[u, v])) {
        return Ok(SubgraphShape::DoubleStar);
    }
    Err(ShapeError::NeitherShape)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Oracle: smallest r such that some r co-chordal edge subsets cover
    /// E(G), by scanning all edge subsets.
    fn brute_cochord(g: &Graph) -> usize {
        let edges = g.edges();
        let m = edges.len();
        if m == 0 {
            return 0;
        }
        let good: Vec<u64> = (1u64..1 << m)
            .filter(|mask| {
                let sub: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                is_cochordal(&spanned(g.n(), &sub))
            })
            .collect();
        let full = (1u64 << m) - 1;
        let mut frontier = vec![0u64];
        for r in 1..=m {
            let mut next = Vec::new();
            for &u in &frontier {
                for &s in &good {
                    let w = u | s;
                    if w == full {
                        return r;
                    }
                    next.push(w);
                }
            }
            next.sort_unstable();
            next.dedup();
            frontier = next;
        }
        m
    }

    #[test]
    fn small_values() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(cochordal_cover_number(&star).0, 1);
        assert_eq!(cochordal_cover_general(&cycle(6)).len(), 2);
        assert_eq!(cochordal_cover_number(&cycle(6)).0, 2);
        assert_eq!(cochordal_cover_number(&Graph::empty(3)).0, 0);
    }

    #[test]
    fn general_matches_subset_oracle() {
        let graphs =
            [cycle(4), cycle(5), cycle(7), path(6), Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5), (1, 2)]).unwrap()];
        for g in &graphs {
            let cover = cochordal_cover_general(g);
            cover.verify(g).unwrap();
            assert_eq!(cover.len(), brute_cochord(g), "{g:?}");
        }
    }

    #[test]
    fn engines_agree_at_girth_five() {
        for g in [cycle(5), cycle(7), cycle(9), path(7)] {
            let a = cochordal_cover_general(&g);
            let b = cochordal_cover_girth5(&g).unwrap();
            a.verify(&g).unwrap();
            b.verify(&g).unwrap();
            assert_eq!(a.len(), b.len(), "{g:?}");
        }
        assert!(cochordal_cover_girth5(&cycle(4)).is_none());
    }

    #[test]
    fn shapes() {
        let k13 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(cochordal_subgraph_shape(&k13, 5), Ok(SubgraphShape::Star));
        let ds = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(cochordal_subgraph_shape(&ds, 5), Ok(SubgraphShape::DoubleStar));
        assert_eq!(cochordal_subgraph_shape(&path(5), 5), Ok(SubgraphShape::NotCochordal));
        assert_eq!(cochordal_subgraph_shape(&k13, 4), Err(ShapeError::AmbientGirth(4)));
        assert_eq!(cochordal_subgraph_shape(&Graph::empty(2), 5), Err(ShapeError::NoEdges));
        assert!(matches!(cochordal_subgraph_shape(&cycle(3), 5), Err(ShapeError::ShortCycle(..))));
    }
}
