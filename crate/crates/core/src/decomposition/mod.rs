//! Codominated vertices, codismantlability, shedding vertices and vertex
//! decomposability, each with a replayable certificate.

mod codis;
mod trace;

use std::ops::ControlFlow;

use crate::graph::{canonical_form_and_labeling, is_induced_cycle_free, CanonicalForm, Graph, VertexSet};
use crate::independence::for_each_maximal_independent_set;
use crate::memo::MemoCache;

pub use codis::{codismantle_greedy, is_minimal_vertex_cover, CdCertificate, CdStep, CertificateError};
pub use trace::{DecompositionTrace, TraceError};

/// All pairs `(x, y)`, `x ≠ y`, with `N[y] ⊆ N[x]`, in lexicographic order.
pub fn codominated_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    let mut out = Vec::new();
    for x in 0..g.n() {
        // a witness lies in N[y] ⊆ N[x], so it is a neighbor of x
        for y in g.neighbors(x).iter() {
            if closed[y].is_subset(&closed[x]) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Codominated vertices, each with its smallest witness.
pub fn codominated_vertices(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.n()).filter_map(|x| codominating_witness(g, x).map(|y| (x, y))).collect()
}

/// Smallest `y ≠ x` with `N[y] ⊆ N[x]`.
pub fn codominating_witness(g: &Graph, x: usize) -> Option<usize> {
    let nx = g.closed_neighbors(x);
    g.neighbors(x).iter().find(|&y| g.closed_neighbors(y).is_subset(&nx))
}

/// No vertex is codominated: the closed neighborhoods form an antichain.
pub fn is_cns(g: &Graph) -> bool {
    (0..g.n()).all(|x| codominating_witness(g, x).is_none())
}

/// How shedding vertices are decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SheddingMode {
    /// Quantify over the independent sets of `G - N[x]`.
    #[default]
    Definitional,
    /// On (C4, C5)-free graphs report the codominated vertices instead,
    /// which coincide with the shedding vertices there.
    FastPath,
}

/// `x` is shedding iff no independent `S` of `G - N[x]` has
/// `N(x) ⊆ N(S)`. Since `N(S)` grows with `S`, it suffices to test the
/// maximal independent sets of `G - N[x]`.
pub fn is_shedding_vertex(g: &Graph, x: usize) -> bool {
    let nx = g.neighbors(x);
    if nx.is_empty() {
        return false;
    }
    let rest = g.induced(&g.closed_neighbors(x).complement());
    let mut shedding = true;
    for_each_maximal_independent_set(&rest.graph, |s| {
        let mut covered = VertexSet::new(g.n());
        for v in s.iter() {
            covered.union_with(g.neighbors(rest.original[v]));
        }
        if nx.is_subset(&covered) {
            shedding = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    shedding
}

pub fn shedding_vertices(g: &Graph, mode: SheddingMode) -> Vec<usize> {
    if mode == SheddingMode::FastPath && is_induced_cycle_free(g, &[4, 5]) {
        return codominated_vertices(g).into_iter().map(|(x, _)| x).collect();
    }
    (0..g.n()).filter(|&x| is_shedding_vertex(g, x)).collect()
}

/// Memoized exhaustive searches for codismantling sequences and vertex
/// decompositions. Both properties split over connected components, and
/// results for connected pieces are cached by canonical form with the
/// decision stored in canonical positions.
pub struct DecompositionEngine {
    mode: SheddingMode,
    cd: MemoCache<CanonicalForm, Option<Vec<(usize, usize)>>>,
    vd: MemoCache<CanonicalForm, Option<usize>>,
}

impl Default for DecompositionEngine {
    fn default() -> Self {
        DecompositionEngine::new(SheddingMode::Definitional)
    }
}

impl DecompositionEngine {
    pub fn new(mode: SheddingMode) -> Self {
        DecompositionEngine { mode, cd: MemoCache::default(), vd: MemoCache::default() }
    }

    pub fn with_capacity(mode: SheddingMode, capacity: usize) -> Self {
        DecompositionEngine { mode, cd: MemoCache::new(capacity), vd: MemoCache::new(capacity) }
    }

    /// Exhaustive over every order of codominated deletions.
    pub fn codismantle(&self, g: &Graph) -> Option<CdCertificate> {
        let steps = self.cd_any(g)?;
        let mut alive = g.vertices();
        let steps: Vec<CdStep> = steps
            .into_iter()
            .map(|(vertex, witness)| {
                alive.remove(vertex);
                CdStep { vertex, witness }
            })
            .collect();
        Some(CdCertificate { steps, residual: alive.to_vec() })
    }

    pub fn is_codismantlable(&self, g: &Graph) -> bool {
        self.cd_any(g).is_some()
    }

    /// Deletion sequence in `g`'s labels, component by component.
    fn cd_any(&self, g: &Graph) -> Option<Vec<(usize, usize)>> {
        let mut steps = Vec::new();
        for comp in g.components() {
            if comp.len() < 2 {
                continue;
            }
            let part = g.induced(&comp);
            let seq = self.cd_connected(&part.graph)?;
            steps.extend(seq.into_iter().map(|(x, y)| (part.original[x], part.original[y])));
        }
        Some(steps)
    }

    fn cd_connected(&self, c: &Graph) -> Option<Vec<(usize, usize)>> {
        let (key, order) = canonical_form_and_labeling(c);
        if let Some(hit) = self.cd.get(&key) {
            return hit.map(|seq| seq.into_iter().map(|(x, y)| (order[x], order[y])).collect());
        }
        let result = self.cd_search(c);
        let mut position = vec![0; c.n()];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let stored = result.as_ref().map(|seq| seq.iter().map(|&(x, y)| (position[x], position[y])).collect());
        self.cd.insert(key, stored);
        result
    }

    fn cd_search(&self, c: &Graph) -> Option<Vec<(usize, usize)>> {
        for (x, y) in codominated_vertices(c) {
            let rest = c.induced(&VertexSet::from_vertices(c.n(), [x]).unwrap().complement());
            if let Some(seq) = self.cd_any(&rest.graph) {
                let mut out = vec![(x, y)];
                out.extend(seq.into_iter().map(|(a, b)| (rest.original[a], rest.original[b])));
                return Some(out);
            }
        }
        None
    }

    pub fn is_vertex_decomposable(&self, g: &Graph) -> bool {
        g.components().iter().filter(|c| c.len() >= 2).all(|c| self.vd_connected(&g.induced(c).graph).is_some())
    }

    /// A decomposition in `g`'s labels, or `None` if there is none.
    pub fn vertex_decomposition(&self, g: &Graph) -> Option<DecompositionTrace> {
        if !self.is_vertex_decomposable(g) {
            return None;
        }
        let labels: Vec<usize> = (0..g.n()).collect();
        Some(self.trace_any(g, &labels))
    }

    fn trace_any(&self, g: &Graph, labels: &[usize]) -> DecompositionTrace {
        if g.is_edgeless() {
            return DecompositionTrace::Edgeless { vertices: labels.to_vec() };
        }
        let comps = g.components();
        let isolated: Vec<usize> = comps.iter().filter(|c| c.len() == 1).map(|c| labels[c.first().unwrap()]).collect();
        let nontrivial: Vec<&VertexSet> = comps.iter().filter(|c| c.len() >= 2).collect();
        if nontrivial.len() == 1 && isolated.is_empty() {
            return self.trace_connected(g, labels);
        }
        let mut parts: Vec<DecompositionTrace> = nontrivial
            .into_iter()
            .map(|c| {
                let part = g.induced(c);
                let sub: Vec<usize> = part.original.iter().map(|&v| labels[v]).collect();
                self.trace_connected(&part.graph, &sub)
            })
            .collect();
        if !isolated.is_empty() {
            parts.push(DecompositionTrace::Edgeless { vertices: isolated });
        }
        DecompositionTrace::Disjoint { parts }
    }

    fn trace_connected(&self, c: &Graph, labels: &[usize]) -> DecompositionTrace {
        let x = self.vd_connected(c).expect("only called on decomposable pieces");
        let mut del = VertexSet::new(c.n());
        del.insert(x);
        let deletion = c.induced(&del.complement());
        let link = c.induced(&c.closed_neighbors(x).complement());
        let relabel = |orig: &[usize]| orig.iter().map(|&v| labels[v]).collect::<Vec<_>>();
        DecompositionTrace::Shed {
            vertex: labels[x],
            deletion: Box::new(self.trace_any(&deletion.graph, &relabel(&deletion.original))),
            link: Box::new(self.trace_any(&link.graph, &relabel(&link.original))),
        }
    }

    /// A shedding vertex of the connected graph `c` that leads to a
    /// decomposition, or `None` if `c` is not vertex decomposable.
    fn vd_connected(&self, c: &Graph) -> Option<usize> {
        let (key, order) = canonical_form_and_labeling(c);
        if let Some(hit) = self.vd.get(&key) {
            return hit.map(|p| order[p]);
        }
        let result = self.vd_search(c);
        let stored = result.map(|x| order.iter().position(|&v| v == x).unwrap());
        self.vd.insert(key, stored);
        result
    }

    fn vd_search(&self, c: &Graph) -> Option<usize> {
        let codominated: Vec<usize> = codominated_vertices(c).into_iter().map(|(x, _)| x).collect();
        let fast = self.mode == SheddingMode::FastPath && is_induced_cycle_free(c, &[4, 5]);
        // codominated vertices are always shedding, so they are tried first
        let mut candidates = codominated.clone();
        if !fast {
            candidates.extend((0..c.n()).filter(|x| !codominated.contains(x) && is_shedding_vertex(c, *x)));
        }
        candidates.into_iter().find(|&x| {
            let mut del = VertexSet::new(c.n());
            del.insert(x);
            self.is_vertex_decomposable(&c.induced(&del.complement()).graph)
                && self.is_vertex_decomposable(&c.induced(&c.closed_neighbors(x).complement()).graph)
        })
    }
}

/// Exhaustive codismantlability with a certificate on success.
pub fn is_codismantlable(g: &Graph) -> (bool, Option<CdCertificate>) {
    let cert = DecompositionEngine::default().codismantle(g);
    (cert.is_some(), cert)
}

/// Exact vertex decomposability with a decomposition on success.
pub fn is_vertex_decomposable(g: &Graph) -> (bool, Option<DecompositionTrace>) {
    let trace = DecompositionEngine::default().vertex_decomposition(g);
    (trace.is_some(), trace)
}
