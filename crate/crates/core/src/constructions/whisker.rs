use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Edge-disjoint cliques covering every edge of a host graph exactly once.
/// A class of size one is allowed only on an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCliquePartition {
    classes: Vec<Vec<usize>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("class {class} is empty")]
    EmptyClass { class: usize },
    #[error("class {class}: vertex {vertex} is out of range")]
    VertexOutOfRange { class: usize, vertex: usize },
    #[error("class {class}: vertex {vertex} listed twice")]
    RepeatedVertex { class: usize, vertex: usize },
    #[error("class {class} is not a clique: {u} and {v} are not adjacent")]
    NotClique { class: usize, u: usize, v: usize },
    #[error("class {class} is the singleton {vertex}, which is not isolated")]
    SingletonNotIsolated { class: usize, vertex: usize },
    #[error("classes {first} and {second} share edge {u}-{v}")]
    SharedEdge { first: usize, second: usize, u: usize, v: usize },
    #[error("edge {0}-{1} lies in no class")]
    Uncovered(usize, usize),
}

impl EdgeCliquePartition {
    /// Validates `classes` against `g`.
    pub fn new(g: &Graph, classes: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let n = g.n();
        let mut owner = vec![vec![None; n]; n];
        for (class, members) in classes.iter().enumerate() {
            let mut seen = VertexSet::new(n);
            if members.is_empty() {
                return Err(PartitionError::EmptyClass { class });
            }
            for &vertex in members {
                if vertex >= n {
                    return Err(PartitionError::VertexOutOfRange { class, vertex });
                }
                if seen.contains(vertex) {
                    return Err(PartitionError::RepeatedVertex { class, vertex });
                }
                seen.insert(vertex);
            }
            if let [vertex] = members[..] {
                if g.degree(vertex) > 0 {
                    return Err(PartitionError::SingletonNotIsolated { class, vertex });
                }
            }
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    let (u, v) = (a.min(b), a.max(b));
                    if !g.has_edge(u, v) {
                        return Err(PartitionError::NotClique { class, u, v });
                    }
                    if let Some(first) = owner[u][v] {
                        return Err(PartitionError::SharedEdge { first, second: class, u, v });
                    }
                    owner[u][v] = Some(class);
                }
            }
        }
        if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| owner[u][v].is_none()) {
            return Err(PartitionError::Uncovered(u, v));
        }
        Ok(EdgeCliquePartition { classes })
    }

    /// One class per edge.
    pub fn edges_of(g: &Graph) -> Self {
        EdgeCliquePartition { classes: g.edges().into_iter().map(|(u, v)| vec![u, v]).collect() }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// `G^Π`: the cone vertex of class `i` is `n + i`, adjacent to exactly the
/// members of that class.
pub fn clique_whisker(g: &Graph, pi: &EdgeCliquePartition) -> Graph {
    let n = g.n();
    let mut edges = g.edges();
    for (i, class) in pi.classes.iter().enumerate() {
        edges.extend(class.iter().map(|&u| (u, n + i)));
    }
    Graph::from_edges(n + pi.len(), &edges).expect("validated partition")
}
