use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// One deletion: `vertex` is codominated by `witness` in the current graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdStep {
    pub vertex: usize,
    pub witness: usize,
}

/// A codismantling sequence ending in an edgeless graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdCertificate {
    pub steps: Vec<CdStep>,
    /// Vertices left after the last deletion, ascending.
    pub residual: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("step {step}: vertex {vertex} is out of range or already deleted")]
    VertexGone { step: usize, vertex: usize },
    #[error("step {step}: witness {witness} is out of range, deleted, or equal to the vertex")]
    WitnessGone { step: usize, witness: usize },
    #[error("step {step}: N[{witness}] is not contained in N[{vertex}]")]
    NotCodominated { step: usize, vertex: usize, witness: usize },
    #[error("the graph left after all steps still has edge {0}-{1}")]
    ResidualHasEdge(usize, usize),
    #[error("recorded residual {recorded:?} differs from the replayed one {replayed:?}")]
    ResidualMismatch { recorded: Vec<usize>, replayed: Vec<usize> },
    #[error("the deleted vertices do not form a minimal vertex cover")]
    NotMinimalCover,
}

impl CdCertificate {
    /// The deleted vertices, in deletion order.
    pub fn cd_set(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    /// Replays every deletion on `g` and checks the final graph, then
    /// checks that the deleted set is a minimal vertex cover.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        let n = g.n();
        let mut alive = g.vertices();
        for (step, &CdStep { vertex, witness }) in self.steps.iter().enumerate() {
            if vertex >= n || !alive.contains(vertex) {
                return Err(CertificateError::VertexGone { step, vertex });
            }
            if witness >= n || witness == vertex || !alive.contains(witness) {
                return Err(CertificateError::WitnessGone { step, witness });
            }
            let mut nx = g.closed_neighbors(vertex);
            nx.intersect_with(&alive);
            let mut ny = g.closed_neighbors(witness);
            ny.intersect_with(&alive);
            if !ny.is_subset(&nx) {
                return Err(CertificateError::NotCodominated { step, vertex, witness });
            }
            alive.remove(vertex);
        }
        for u in alive.iter() {
            if let Some(v) = g.neighbors(u).intersection(&alive).first() {
                return Err(CertificateError::ResidualHasEdge(u, v));
            }
        }
        let replayed = alive.to_vec();
        if replayed != self.residual {
            return Err(CertificateError::ResidualMismatch { recorded: self.residual.clone(), replayed });
        }
        if !is_minimal_vertex_cover(g, &self.cd_set()) {
            return Err(CertificateError::NotMinimalCover);
        }
        Ok(())
    }
}

/// Every edge meets `cover`, and no member can be dropped.
pub fn is_minimal_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let Ok(set) = VertexSet::from_vertices(g.n(), cover.iter().copied()) else {
        return false;
    };
    let covers = |s: &VertexSet| g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v));
    covers(&set)
        && set.iter().all(|v| {
            let mut smaller = set.clone();
            smaller.remove(v);
            !covers(&smaller)
        })
}

/// Heuristic: always delete the smallest codominated vertex. A `None`
/// answer does not rule out codismantlability.
pub fn codismantle_greedy(g: &Graph) -> Option<CdCertificate> {
    let mut alive = g.vertices();
    let mut steps = Vec::new();
    loop {
        let current = g.induced(&alive);
        if current.graph.is_edgeless() {
            return Some(CdCertificate { steps, residual: alive.to_vec() });
        }
        let (x, y) = *super::codominated_vertices(&current.graph).first()?;
        let (vertex, witness) = (current.original[x], current.original[y]);
        steps.push(CdStep { vertex, witness });
        alive.remove(vertex);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replay_rejects_tampering() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cert = codismantle_greedy(&p4).unwrap();
        cert.verify(&p4).unwrap();
        assert_eq!(cert.cd_set(), vec![1, 2]);

        let mut bad = cert.clone();
        bad.steps[0].witness = 2;
        assert!(matches!(bad.verify(&p4), Err(CertificateError::NotCodominated { .. })));

        let mut short = cert.clone();
        short.steps.pop();
        assert!(matches!(short.verify(&p4), Err(CertificateError::ResidualHasEdge(..))));

        let mut wrong = cert;
        wrong.residual = vec![0];
        assert!(matches!(wrong.verify(&p4), Err(CertificateError::ResidualMismatch { .. })));
    }

    #[test]
    fn minimal_cover_cases() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_minimal_vertex_cover(&p3, &[1]));
        assert!(!is_minimal_vertex_cover(&p3, &[0, 1]));
        assert!(is_minimal_vertex_cover(&p3, &[0, 2]));
        assert!(!is_minimal_vertex_cover(&p3, &[0]));
        assert!(is_minimal_vertex_cover(&Graph::empty(2), &[]));
    }

    #[test]
    fn greedy_gets_stuck_on_cns_graphs() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(codismantle_greedy(&c6).is_none());
    }
}
