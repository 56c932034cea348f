use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

use super::is_shedding_vertex;

/// A vertex decomposition in the host graph's labels.
///
/// `Disjoint` records that the current graph is a disjoint union of the
/// parts' vertex sets with no edges between them; a shedding vertex of one
/// part is shedding in the union, so each part is decomposed on its own.
/// [`DecompositionTrace::flatten`] expands these nodes into plain shedding
/// steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum DecompositionTrace {
    Edgeless { vertices: Vec<usize> },
    Shed { vertex: usize, deletion: Box<DecompositionTrace>, link: Box<DecompositionTrace> },
    Disjoint { parts: Vec<DecompositionTrace> },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("node covers {found:?} but the current graph has vertices {expected:?}")]
    VertexMismatch { expected: Vec<usize>, found: Vec<usize> },
    #[error("leaf {0:?} is not edgeless")]
    LeafHasEdge(Vec<usize>),
    #[error("vertex {0} is not a shedding vertex of the current graph")]
    NotShedding(usize),
    #[error("disjoint parts share a vertex or are joined by edge {0}-{1}")]
    PartsTouch(usize, usize),
}

impl DecompositionTrace {
    /// Vertices of the graph this node stands for, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = match self {
            DecompositionTrace::Edgeless { vertices } => vertices.clone(),
            DecompositionTrace::Shed { vertex, deletion, .. } => {
                let mut v = deletion.vertices();
                v.push(*vertex);
                v
            }
            DecompositionTrace::Disjoint { parts } => parts.iter().flat_map(|p| p.vertices()).collect(),
        };
        out.sort_unstable();
        out
    }

    /// Number of shedding steps.
    pub fn shed_count(&self) -> usize {
        match self {
            DecompositionTrace::Edgeless { .. } => 0,
            DecompositionTrace::Shed { deletion, link, .. } => 1 + deletion.shed_count() + link.shed_count(),
            DecompositionTrace::Disjoint { parts } => parts.iter().map(|p| p.shed_count()).sum(),
        }
    }

    /// Checks every node against `g`: leaves are edgeless, every shedding
    /// choice satisfies the definition in its current graph, and children
    /// are exactly `G - x` and `G - N[x]`.
    pub fn replay(&self, g: &Graph) -> Result<(), TraceError> {
        self.replay_on(g, &g.vertices())
    }

    fn replay_on(&self, g: &Graph, alive: &VertexSet) -> Result<(), TraceError> {
        let found = self.vertices();
        let expected = alive.to_vec();
        if found != expected {
            return Err(TraceError::VertexMismatch { expected, found });
        }
        match self {
            DecompositionTrace::Edgeless { vertices } => {
                let current = g.induced(alive);
                if !current.graph.is_edgeless() {
                    return Err(TraceError::LeafHasEdge(vertices.clone()));
                }
                Ok(())
            }
            DecompositionTrace::Shed { vertex, deletion, link } => {
                let current = g.induced(alive);
                let local = current.original.iter().position(|v| v == vertex).unwrap();
                if !is_shedding_vertex(&current.graph, local) {
                    return Err(TraceError::NotShedding(*vertex));
                }
                let mut rest = alive.clone();
                rest.remove(*vertex);
                deletion.replay_on(g, &rest)?;
                let mut outside = alive.clone();
                outside.difference_with(&g.closed_neighbors(*vertex));
                link.replay_on(g, &outside)
            }
            DecompositionTrace::Disjoint { parts } => {
                let sets: Vec<VertexSet> = parts
                    .iter()
                    .map(|p| VertexSet::from_vertices(g.n(), p.vertices()).expect("checked above"))
                    .collect();
                for (i, a) in sets.iter().enumerate() {
                    for b in &sets[i + 1..] {
                        if let Some(v) = a.intersection(b).first() {
                            return Err(TraceError::PartsTouch(v, v));
                        }
                        for u in a.iter() {
                            if let Some(v) = g.neighbors(u).intersection(b).first() {
                                return Err(TraceError::PartsTouch(u, v));
                            }
                        }
                    }
                }
                parts.iter().zip(&sets).try_for_each(|(p, s)| p.replay_on(g, s))
            }
        }
    }

    /// Equivalent trace with only shedding and leaf nodes: the parts of a
    /// disjoint union are decomposed one after another.
    pub fn flatten(&self) -> DecompositionTrace {
        match self {
            DecompositionTrace::Edgeless { .. } => self.clone(),
            DecompositionTrace::Shed { vertex, deletion, link } => DecompositionTrace::Shed {
                vertex: *vertex,
                deletion: Box::new(deletion.flatten()),
                link: Box::new(link.flatten()),
            },
            DecompositionTrace::Disjoint { parts } => {
                let mut acc = DecompositionTrace::Edgeless { vertices: Vec::new() };
                for p in parts.iter().rev() {
                    acc = graft(&p.flatten(), &acc);
                }
                acc
            }
        }
    }
}

/// Decomposes `first`, carrying `rest` (on disjoint vertices) into every leaf.
fn graft(first: &DecompositionTrace, rest: &DecompositionTrace) -> DecompositionTrace {
    match first {
        DecompositionTrace::Edgeless { vertices } => with_leaf_vertices(rest, vertices),
        DecompositionTrace::Shed { vertex, deletion, link } => DecompositionTrace::Shed {
            vertex: *vertex,
            deletion: Box::new(graft(deletion, rest)),
            link: Box::new(graft(link, rest)),
        },
        DecompositionTrace::Disjoint { .. } => unreachable!("flattened before grafting"),
    }
}

fn with_leaf_vertices(t: &DecompositionTrace, extra: &[usize]) -> DecompositionTrace {
    match t {
        DecompositionTrace::Edgeless { vertices } => {
            let mut v = vertices.clone();
            v.extend_from_slice(extra);
            v.sort_unstable();
            DecompositionTrace::Edgeless { vertices: v }
        }
        DecompositionTrace::Shed { vertex, deletion, link } => DecompositionTrace::Shed {
            vertex: *vertex,
            deletion: Box::new(with_leaf_vertices(deletion, extra)),
            link: Box::new(with_leaf_vertices(link, extra)),
        },
        DecompositionTrace::Disjoint { .. } => unreachable!("flattened before grafting"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::DecompositionEngine;

    #[test]
    fn two_edges_trace_replays_both_ways() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let t = DecompositionEngine::default().vertex_decomposition(&g).unwrap();
        assert!(matches!(t, DecompositionTrace::Disjoint { .. }));
        t.replay(&g).unwrap();
        let flat = t.flatten();
        flat.replay(&g).unwrap();
        assert_eq!(flat.vertices(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn replay_rejects_bad_choice() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let bogus = DecompositionTrace::Shed {
            vertex: 0,
            deletion: Box::new(DecompositionTrace::Edgeless { vertices: vec![1, 2, 3] }),
            link: Box::new(DecompositionTrace::Edgeless { vertices: vec![2] }),
        };
        assert_eq!(bogus.replay(&c4), Err(TraceError::NotShedding(0)));
        let json = serde_json::to_string(&bogus).unwrap();
        assert!(json.contains("\"node\":\"shed\""));
    }
}
