//! Immutable simple graphs on `0..n` and the primitives the rest of the
//! crate is built on.
//!
//! Every "deletion" (`G - x`, `G - N[U]`, `G[W]`) produces a new value
//! together with the map back to the parent's vertex ids, so certificates
//! computed on a residual graph can be reported in original labels.

mod canon;
mod cycles;
mod vertex_set;

use std::collections::VecDeque;

use thiserror::Error;

pub use canon::{are_isomorphic, canonical_form, canonical_form_and_labeling, canonical_labeling, CanonicalForm};
pub use cycles::{find_chordless_cycle, girth, is_chordal, is_cochordal, is_induced_cycle_free, Girth};
pub use vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
}

/// Simple undirected graph with symmetric, loop-free bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// A graph derived from a parent together with `original[i]`, the parent
/// id of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    pub original: Vec<usize>,
}

/// `L(G)` with `edges[i]` the edge of `G` that vertex `i` stands for.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![VertexSet::new(n); n], labels: None }
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor sets, symmetrizing them.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        let mut g = Graph::empty(n);
        for (u, nb) in adj.iter().enumerate() {
            for v in nb {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::Loop(u));
                }
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount { labels: labels.len(), n: self.n() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order. This order fixes
    /// edge identifiers throughout the crate.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let mut s = VertexSet::new(self.n());
        for v in 0..self.n() {
            if self.adj[v].is_empty() {
                s.insert(v);
            }
        }
        s
    }

    fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        if set.universe() != self.n() {
            // sets built for a different host: report the first bad id
            if let Some(v) = set.iter().find(|&v| v >= self.n()) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        Ok(())
    }

    /// Resizes a set onto this graph's universe after range checking.
    fn own_set(&self, set: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(set)?;
        if set.universe() == self.n() {
            Ok(set.clone())
        } else {
            VertexSet::from_vertices(self.n(), set.iter())
        }
    }

    /// `N(U)`: the union of open neighborhoods.
    pub fn open_neighborhood(&self, set: &VertexSet) -> Result<VertexSet, GraphError> {
        let set = self.own_set(set)?;
        let mut out = VertexSet::new(self.n());
        for v in &set {
            out.union_with(&self.adj[v]);
        }
        Ok(out)
    }

    /// `N[U] = N(U) ∪ U`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet, GraphError> {
        let set = self.own_set(set)?;
        let mut out = set.clone();
        for v in &set {
            out.union_with(&self.adj[v]);
        }
        Ok(out)
    }

    /// `G[W]`, relabeled to `0..|W|` in ascending order of original id.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Relabeled, GraphError> {
        let set = self.own_set(set)?;
        Ok(self.induced(&set))
    }

    /// Unchecked `G[W]` for sets already on this graph's universe.
    pub(crate) fn induced(&self, set: &VertexSet) -> Relabeled {
        let original: Vec<usize> = set.iter().collect();
        let k = original.len();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            position[v] = i;
        }
        let mut adj = vec![VertexSet::new(k); k];
        for (i, &v) in original.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = position[w];
                if j != usize::MAX {
                    adj[i].insert(j);
                }
            }
        }
        let labels = self.labels.as_ref().map(|l| original.iter().map(|&v| l[v].clone()).collect());
        Relabeled { graph: Graph { adj, labels }, original }
    }

    /// `G - U`.
    pub fn remove_vertices(&self, set: &VertexSet) -> Result<Relabeled, GraphError> {
        let set = self.own_set(set)?;
        Ok(self.induced(&set.complement()))
    }

    /// `G - x`.
    pub fn remove_vertex(&self, x: usize) -> Result<Relabeled, GraphError> {
        let set = VertexSet::from_vertices(self.n(), [x])?;
        Ok(self.induced(&set.complement()))
    }

    /// `G - N[U]`.
    pub fn remove_closed_neighborhood(&self, set: &VertexSet) -> Result<Relabeled, GraphError> {
        let closed = self.closed_neighborhood(set)?;
        Ok(self.induced(&closed.complement()))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { adj, labels: self.labels.clone() }
    }

    pub fn line_graph(&self) -> LineGraph {
        let edges = self.edges();
        let m = edges.len();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut adj = vec![VertexSet::new(m); m];
        for list in &incident {
            for (a, &i) in list.iter().enumerate() {
                for &j in &list[a + 1..] {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        LineGraph { graph: Graph { adj, labels: None }, edges }
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            comp.insert(s);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new(n);
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `source`; `None` for unreachable.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Two-coloring check.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertices `order[i]` of `self` become vertex `i` of the result.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(order.len(), n, "permutation length mismatch");
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                let mut s = VertexSet::new(n);
                for w in &self.adj[v] {
                    s.insert(position[w]);
                }
                s
            })
            .collect();
        let labels = self.labels.as_ref().map(|l| order.iter().map(|&v| l[v].clone()).collect());
        Graph { adj, labels }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let a = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + a, v + a)));
        Graph::from_edges(a + other.n(), &edges).expect("shifted edges are in range")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
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

    #[test]
    fn induced_subgraph_cases() {
        let c5 = cycle(5);
        let empty = c5.induced_subgraph(&VertexSet::new(5)).unwrap();
        assert_eq!(empty.graph.n(), 0);
        let all = c5.induced_subgraph(&c5.vertices()).unwrap();
        assert_eq!(all.graph, c5);
        assert_eq!(all.original, vec![0, 1, 2, 3, 4]);
        for start in 0..5 {
            let w = VertexSet::from_vertices(5, [start, (start + 1) % 5, (start + 2) % 5]).unwrap();
            let sub = c5.induced_subgraph(&w).unwrap();
            assert!(are_isomorphic(&sub.graph, &path(3)));
        }
        let bad = VertexSet::from_vertices(9, [7]).unwrap();
        assert_eq!(c5.induced_subgraph(&bad).unwrap_err(), GraphError::VertexOutOfRange { vertex: 7, n: 5 });
    }

    #[test]
    fn closed_neighborhood_cases() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let u = VertexSet::from_vertices(3, [0]).unwrap();
        assert_eq!(k3.closed_neighborhood(&u).unwrap(), k3.vertices());
        let e4 = Graph::empty(4);
        let u = VertexSet::from_vertices(4, [2]).unwrap();
        assert_eq!(e4.closed_neighborhood(&u).unwrap().to_vec(), vec![2]);
        let p4 = path(4);
        let u = VertexSet::from_vertices(4, [0, 3]).unwrap();
        assert_eq!(p4.closed_neighborhood(&u).unwrap(), p4.vertices());
    }

    #[test]
    fn complement_cases() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.complement().is_edgeless());
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        assert!(are_isomorphic(&c5.complement(), &c5));
    }

    #[test]
    fn line_graph_cases() {
        let lp3 = path(3).line_graph();
        assert_eq!(lp3.graph.n(), 2);
        assert_eq!(lp3.graph.edge_count(), 1);
        let k3 = cycle(3);
        assert!(are_isomorphic(&k3.line_graph().graph, &k3));
        let c5 = cycle(5);
        assert!(are_isomorphic(&c5.line_graph().graph, &c5));
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]).unwrap_err(), GraphError::Loop(1));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn components_and_bipartite() {
        let g = cycle(4).disjoint_union(&cycle(3));
        assert_eq!(g.components().len(), 2);
        assert!(!g.is_bipartite());
        assert!(cycle(6).is_bipartite());
    }
}
