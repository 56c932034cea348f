//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `k + 1` vertices is produced from a graph on `k` vertices by
//! adding a vertex `v` with an arbitrary neighbor set. The canonical parent
//! of `C` is `C - w*`, where `w*` is the minimum-degree vertex placed last
//! by the canonical labeling; a child is kept only if `C - v` is isomorphic
//! to that parent, and children of one parent are deduplicated by
//! canonical form. Filters closed under taking induced subgraphs prune the
//! tree; the rest are applied to the leaves.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    canonical_form, canonical_form_and_labeling, girth, is_induced_cycle_free, CanonicalForm, Graph, VertexSet,
};
use crate::independence::is_well_covered;

/// Largest order generated without an external graph stream.
pub const MAX_BUILTIN_N: usize = 10;

/// With a girth gate of at least five the tree stays small enough to
/// generate further.
pub const MAX_SPARSE_N: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order {n} is outside 1..={max} for built-in generation")]
    OutOfRange { n: usize, max: usize },
}

/// Restrictions on the generated universe.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFilter {
    pub connected: bool,
    /// Girth at least this (forests always pass).
    pub min_girth: Option<usize>,
    /// No induced cycle of any of these lengths.
    pub induced_cycle_free: Vec<usize>,
    pub well_covered: bool,
    pub min_degree: usize,
}

impl GraphFilter {
    pub fn connected() -> Self {
        GraphFilter { connected: true, ..Default::default() }
    }

    pub fn free_of(lengths: &[usize]) -> Self {
        GraphFilter { induced_cycle_free: lengths.to_vec(), ..Default::default() }
    }

    pub fn with_connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn with_min_girth(mut self, g: usize) -> Self {
        self.min_girth = Some(g);
        self
    }

    pub fn with_well_covered(mut self) -> Self {
        self.well_covered = true;
        self
    }

    pub fn with_min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    /// Conditions inherited by induced subgraphs.
    fn hereditary(&self, g: &Graph) -> bool {
        self.min_girth.is_none_or(|k| girth(g).at_least(k))
            && (self.induced_cycle_free.is_empty() || is_induced_cycle_free(g, &self.induced_cycle_free))
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.hereditary(g)
            && (!self.connected || g.is_connected())
            && (0..g.n()).all(|v| g.degree(v) >= self.min_degree)
            && (!self.well_covered || is_well_covered(g))
    }

    /// Short text such as `connected, girth>=5, well-covered`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.connected {
            parts.push("connected".to_string());
        }
        if let Some(k) = self.min_girth {
            parts.push(format!("girth>={k}"));
        }
        if !self.induced_cycle_free.is_empty() {
            let c: Vec<String> = self.induced_cycle_free.iter().map(|k| format!("C{k}")).collect();
            parts.push(format!("({})-free", c.join(",")));
        }
        if self.well_covered {
            parts.push("well-covered".to_string());
        }
        if self.min_degree > 0 {
            parts.push(format!("min-degree>={}", self.min_degree));
        }
        if parts.is_empty() {
            "all graphs".to_string()
        } else {
            parts.join(", ")
        }
    }

    fn max_order(&self) -> usize {
        if self.min_girth.is_some_and(|k| k >= 5) {
            MAX_SPARSE_N
        } else {
            MAX_BUILTIN_N
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices
/// passing `filter`, each in its canonical labeling, sorted by canonical
/// form.
pub fn enumerate_graphs(n: usize, filter: &GraphFilter) -> Result<Vec<Graph>, EnumerationError> {
    let max = filter.max_order();
    if n == 0 || n > max {
        return Err(EnumerationError::OutOfRange { n, max });
    }
    let mut out: Vec<(CanonicalForm, Graph)> = Vec::new();
    let sink = std::sync::Mutex::new(&mut out);
    grow(&Graph::empty(1), n, filter, &|g| {
        if filter.accepts(g) {
            let (key, order) = canonical_form_and_labeling(g);
            sink.lock().unwrap().push((key, g.permuted(&order)));
        }
    });
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// All orders in `lo..=hi`, concatenated in increasing order.
pub fn enumerate_range(lo: usize, hi: usize, filter: &GraphFilter) -> Result<Vec<Graph>, EnumerationError> {
    let mut all = Vec::new();
    for n in lo.max(1)..=hi {
        all.extend(enumerate_graphs(n, filter)?);
    }
    Ok(all)
}

fn grow(g: &Graph, target: usize, filter: &GraphFilter, emit: &(dyn Fn(&Graph) + Sync)) {
    if g.n() == target {
        emit(g);
        return;
    }
    let children = children(g, filter);
    children.par_iter().for_each(|c| grow(c, target, filter, emit));
}

/// Accepted children of `parent`, in a fixed order.
fn children(parent: &Graph, filter: &GraphFilter) -> Vec<Graph> {
    let k = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in neighbor_sets(parent, filter) {
        let child = extend(parent, &s);
        if !filter.hereditary(&child) || !is_canonical_extension(&child) {
            continue;
        }
        if seen.insert(canonical_form(&child)) {
            out.push(child);
        }
    }
    debug_assert!(out.iter().all(|c| c.n() == k + 1));
    out
}

/// Candidate neighbor sets for the new vertex. Under a girth gate `g`, two
/// neighbors at distance `d` close a cycle of length `d + 2`, so chosen
/// neighbors must be pairwise at distance at least `g - 2`.
fn neighbor_sets(parent: &Graph, filter: &GraphFilter) -> Vec<VertexSet> {
    let k = parent.n();
    let spread = filter.min_girth.map_or(0, |g| g.saturating_sub(2));
    let dist: Vec<Vec<Option<usize>>> =
        if spread > 1 { (0..k).map(|v| parent.distances_from(v)).collect() } else { Vec::new() };
    let far = |u: usize, v: usize| spread <= 1 || dist[u][v].is_none_or(|d| d >= spread);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        next: usize,
        k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
        far: &dyn Fn(usize, usize) -> bool,
    ) {
        if next == k {
            out.push(VertexSet::from_vertices(k + 1, current.iter().copied()).unwrap());
            return;
        }
        rec(next + 1, k, current, out, far);
        if current.iter().all(|&u| far(u, next)) {
            current.push(next);
            rec(next + 1, k, current, out, far);
            current.pop();
        }
    }
    rec(0, k, &mut current, &mut out, &far);
    out
}

fn extend(parent: &Graph, s: &VertexSet) -> Graph {
    let k = parent.n();
    let mut edges = parent.edges();
    edges.extend(s.iter().map(|u| (u, k)));
    Graph::from_edges(k + 1, &edges).expect("ids in range")
}

/// The new vertex (the last one) may stand for the canonical deletion.
fn is_canonical_extension(child: &Graph) -> bool {
    let v = child.n() - 1;
    let delta = (0..child.n()).map(|u| child.degree(u)).min().unwrap();
    if child.degree(v) != delta {
        return false;
    }
    let (_, order) = canonical_form_and_labeling(child);
    let w = *order.iter().rev().find(|&&u| child.degree(u) == delta).unwrap();
    w == v
        || canonical_form(&child.remove_vertex(v).unwrap().graph)
            == canonical_form(&child.remove_vertex(w).unwrap().graph)
}
