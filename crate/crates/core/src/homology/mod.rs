//! Reduced simplicial homology over GF(2) or the rationals, and the
//! homological deciders built on it: Cohen–Macaulayness through links,
//! sequential Cohen–Macaulayness through pure skeleta, and graded Betti
//! numbers of the edge ring through Hochster's formula.

mod betti;
mod cm;
mod field;
mod linalg;

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::graph::{canonical_form, CanonicalForm, Graph, VertexSet};
use crate::independence::SimplicialComplex;
use crate::memo::MemoCache;

pub use betti::{BettiCapExceeded, BettiTable, DEFAULT_BETTI_CAP};
pub use field::{Element, Field};
pub use linalg::{rank_gf2, rank_rational, SparseColumn};

/// Reduced homology ranks and face counts of one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: Field,
    /// `reduced[d + 1]` is the rank in dimension `d`, for `d = -1..=dim`.
    pub reduced: Vec<usize>,
    /// `f_vector[k]` counts faces with `k` vertices (`k = 0` is `∅`).
    pub f_vector: Vec<usize>,
}

impl HomologyProfile {
    /// Rank in dimension `d`; zero outside the stored range.
    pub fn rank(&self, d: isize) -> usize {
        usize::try_from(d + 1).ok().and_then(|i| self.reduced.get(i).copied()).unwrap_or(0)
    }

    pub fn is_void(&self) -> bool {
        self.f_vector.is_empty()
    }

    pub fn dimension(&self) -> Option<isize> {
        (!self.f_vector.is_empty()).then(|| self.f_vector.len() as isize - 2)
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced.iter().all(|&r| r == 0)
    }

    /// Reduced homology vanishes in every dimension below `d`.
    pub fn vanishes_below(&self, d: isize) -> bool {
        self.reduced.iter().enumerate().all(|(i, &r)| r == 0 || i as isize > d)
    }

    /// Largest dimension with nonzero homology.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.reduced.iter().rposition(|&r| r != 0).map(|i| i as isize - 1)
    }

    /// `Σ (-1)^d h̃_d = Σ (-1)^d f_d` over `d ≥ -1`.
    pub fn euler_holds(&self) -> bool {
        let alt = |v: &[usize]| {
            v.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { -(x as i64) } else { x as i64 }).sum::<i64>()
        };
        alt(&self.reduced) == alt(&self.f_vector)
    }

    /// Homology of the join: Künneth for joins is a shifted product of the
    /// rank polynomials, and face counts multiply the same way.
    pub fn join(&self, other: &HomologyProfile) -> HomologyProfile {
        debug_assert_eq!(self.field, other.field);
        HomologyProfile {
            field: self.field,
            reduced: poly_mul(&self.reduced, &other.reduced),
            f_vector: poly_mul(&self.f_vector, &other.f_vector),
        }
    }

    fn point_free(field: Field) -> HomologyProfile {
        HomologyProfile { field, reduced: vec![1], f_vector: vec![1] }
    }
}

fn poly_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

static HOMOLOGY_CALLS: AtomicU64 = AtomicU64::new(0);
static EULER_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Running totals of the Euler-characteristic check performed on every
/// homology computation in this process.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerAudit {
    pub computations: u64,
    pub violations: u64,
}

pub fn euler_audit() -> EulerAudit {
    EulerAudit {
        computations: HOMOLOGY_CALLS.load(Ordering::Relaxed),
        violations: EULER_VIOLATIONS.load(Ordering::Relaxed),
    }
}

/// Homology from the full face list, grouped by face size.
fn homology_of_faces(faces: &[Vec<VertexSet>], field: Field) -> HomologyProfile {
    let f_vector: Vec<usize> = faces.iter().map(Vec::len).collect();
    let top = f_vector.len();
    // rank[k] = rank of ∂_k : C_k -> C_{k-1}, faces with k vertices
    let mut rank = vec![0usize; top + 1];
    let mut index: Vec<HashMap<&VertexSet, usize>> = Vec::with_capacity(top);
    for layer in faces {
        index.push(layer.iter().enumerate().map(|(i, f)| (f, i)).collect());
    }
    for k in 1..top {
        let columns: Vec<SparseColumn> = faces[k]
            .iter()
            .map(|face| {
                let mut sub = face.clone();
                face.iter()
                    .enumerate()
                    .map(|(i, v)| {
                        sub.remove(v);
                        let row = index[k - 1][&sub];
                        sub.insert(v);
                        (row, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        rank[k] = match field {
            Field::Gf2 => rank_gf2(f_vector[k - 1], &columns),
            Field::Rational => rank_rational(&columns),
        };
    }
    let reduced = (0..top).map(|k| f_vector[k] - rank[k] - rank[k + 1]).collect();
    let profile = HomologyProfile { field, reduced, f_vector };
    HOMOLOGY_CALLS.fetch_add(1, Ordering::Relaxed);
    if !profile.euler_holds() {
        EULER_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
    profile
}

/// Reduced homology of an arbitrary complex.
pub fn reduced_betti_numbers(k: &SimplicialComplex, field: Field) -> HomologyProfile {
    homology_of_faces(&k.faces_by_size(), field)
}

/// Every independent set of `g`, grouped by size.
pub(crate) fn independent_sets_by_size(g: &Graph) -> Vec<Vec<VertexSet>> {
    let mut out: Vec<Vec<VertexSet>> = Vec::new();
    let mut current = VertexSet::new(g.n());
    grow_independent(g, &mut current, g.vertices(), &mut out);
    out
}

fn grow_independent(g: &Graph, current: &mut VertexSet, candidates: VertexSet, out: &mut Vec<Vec<VertexSet>>) {
    let k = current.len();
    if out.len() <= k {
        out.push(Vec::new());
    }
    out[k].push(current.clone());
    for v in candidates.iter() {
        let mut next = candidates.difference(g.neighbors(v));
        // only later vertices, so each set is produced once
        for w in candidates.iter().take_while(|&w| w <= v) {
            next.remove(w);
        }
        current.insert(v);
        grow_independent(g, current, next, out);
        current.remove(v);
    }
}

/// Faces of the subcomplex generated by the faces with `size` vertices.
pub(crate) fn pure_skeleton_faces(all: &[Vec<VertexSet>], size: usize) -> Vec<Vec<VertexSet>> {
    let Some(top) = all.get(size) else {
        return Vec::new();
    };
    if top.is_empty() {
        return Vec::new();
    }
    let mut layers = vec![Vec::new(); size + 1];
    layers[size] = top.clone();
    for k in (0..size).rev() {
        let mut next: Vec<VertexSet> = layers[k + 1]
            .iter()
            .flat_map(|f| {
                f.iter().map(move |v| {
                    let mut s = f.clone();
                    s.remove(v);
                    s
                })
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        layers[k] = next;
    }
    layers
}

/// Shared memo tables for homology-based deciders over one field.
///
/// Independence complexes of isomorphic graphs are isomorphic, so every
/// table is keyed by canonical forms.
pub struct HomologyEngine {
    field: Field,
    connected: MemoCache<CanonicalForm, HomologyProfile>,
    cm: MemoCache<CanonicalForm, bool>,
    scm: MemoCache<CanonicalForm, bool>,
}

/// Components up to this size are computed directly, without a memo lookup.
const DIRECT_LIMIT: usize = 3;

impl HomologyEngine {
    pub fn new(field: Field) -> Self {
        HomologyEngine { field, connected: MemoCache::default(), cm: MemoCache::default(), scm: MemoCache::default() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Reduced homology of `I(G)`, assembled from its components by joins.
    pub fn independence_homology(&self, g: &Graph) -> HomologyProfile {
        let mut acc = HomologyProfile::point_free(self.field);
        for comp in g.components() {
            let sub = g.induced(&comp).graph;
            let part = self.connected_homology(&sub);
            acc = acc.join(&part);
        }
        acc
    }

    fn connected_homology(&self, g: &Graph) -> HomologyProfile {
        if g.n() <= DIRECT_LIMIT {
            return homology_of_faces(&independent_sets_by_size(g), self.field);
        }
        let key = canonical_form(g);
        if let Some(p) = self.connected.get(&key) {
            return p;
        }
        let p = homology_of_faces(&independent_sets_by_size(g), self.field);
        self.connected.insert(key, p.clone());
        p
    }
}

/// Reduced homology of `I(G)` over `field`.
pub fn independence_homology(g: &Graph, field: Field) -> HomologyProfile {
    HomologyEngine::new(field).independence_homology(g)
}

pub fn is_cohen_macaulay(g: &Graph, field: Field) -> bool {
    HomologyEngine::new(field).is_cohen_macaulay(g)
}

pub fn is_sequentially_cm(g: &Graph, field: Field) -> bool {
    HomologyEngine::new(field).is_sequentially_cm(g)
}

/// Graded Betti numbers of `R/I(G)`; refuses graphs above `cap` vertices.
pub fn graded_betti_table(g: &Graph, field: Field, cap: usize) -> Result<BettiTable, BettiCapExceeded> {
    HomologyEngine::new(field).graded_betti_table(g, cap)
}

/// Castelnuovo–Mumford regularity of `R/I(G)`.
pub fn regularity(g: &Graph, field: Field, cap: usize) -> Result<usize, BettiCapExceeded> {
    HomologyEngine::new(field).regularity(g, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn set(ground: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(ground, v.iter().copied()).unwrap()
    }

    /// Oracle: Betti numbers from dense boundary matrices, independent of
    /// the face indexing used by the engine.
    fn dense_reduced(k: &SimplicialComplex, field: Field) -> Vec<usize> {
        let faces = k.faces_by_size();
        let mut ranks = vec![0usize; faces.len() + 1];
        for d in 1..faces.len() {
            let rows = &faces[d - 1];
            let cols: Vec<SparseColumn> = faces[d]
                .iter()
                .map(|f| {
                    let members = f.to_vec();
                    let mut col = Vec::new();
                    for (r, row) in rows.iter().enumerate() {
                        if row.is_subset(f) {
                            let missing = members.iter().position(|v| !row.contains(*v)).unwrap();
                            col.push((r, if missing % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    col
                })
                .collect();
            ranks[d] = match field {
                Field::Gf2 => rank_gf2(rows.len(), &cols),
                Field::Rational => rank_rational(&cols),
            };
        }
        (0..faces.len()).map(|k| faces[k].len() - ranks[k] - ranks[k + 1]).collect()
    }

    #[test]
    fn conventions_for_trivial_complexes() {
        let void = reduced_betti_numbers(&SimplicialComplex::void(3), Field::Gf2);
        assert!(void.reduced.is_empty() && void.is_void());
        let empty = SimplicialComplex::from_facets(3, vec![VertexSet::new(3)]).unwrap();
        let p = reduced_betti_numbers(&empty, Field::Rational);
        assert_eq!(p.reduced, vec![1]);
        assert_eq!(p.rank(-1), 1);
        assert!(p.euler_holds() && void.euler_holds());
    }

    #[test]
    fn simplex_circle_and_pentagon() {
        let simplex = SimplicialComplex::from_facets(3, vec![set(3, &[0, 1, 2])]).unwrap();
        assert!(reduced_betti_numbers(&simplex, Field::Gf2).is_acyclic());
        let circle =
            SimplicialComplex::from_facets(3, vec![set(3, &[0, 1]), set(3, &[1, 2]), set(3, &[0, 2])]).unwrap();
        for field in [Field::Gf2, Field::Rational] {
            let p = reduced_betti_numbers(&circle, field);
            assert_eq!(p.reduced, vec![0, 0, 1]);
            let c5 = independence_homology(&cycle(5), field);
            assert_eq!(c5.reduced, vec![0, 0, 1]);
        }
    }

    #[test]
    fn projective_plane_separates_fields() {
        // six-vertex triangulation of RP^2
        let tri = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [1, 3, 5],
            [2, 4, 5],
        ];
        let k = SimplicialComplex::from_facets(6, tri.iter().map(|t| set(6, t)).collect()).unwrap();
        let gf2 = reduced_betti_numbers(&k, Field::Gf2);
        let q = reduced_betti_numbers(&k, Field::Rational);
        assert_eq!(gf2.reduced, vec![0, 0, 1, 1]);
        assert_eq!(q.reduced, vec![0, 0, 0, 0]);
        assert_eq!(dense_reduced(&k, Field::Gf2), gf2.reduced);
        assert_eq!(dense_reduced(&k, Field::Rational), q.reduced);
    }

    #[test]
    fn independence_homology_matches_complex_route() {
        let graphs = [
            cycle(6),
            cycle(7),
            Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 4)]).unwrap(),
            Graph::empty(2),
            Graph::empty(0),
        ];
        for g in &graphs {
            for field in [Field::Gf2, Field::Rational] {
                let direct = dense_reduced(&crate::independence::independence_complex(g), field);
                let fast = independence_homology(g, field);
                assert_eq!(fast.reduced, direct, "{g:?}");
                assert!(fast.euler_holds());
            }
        }
    }

    #[test]
    fn pure_skeleton_faces_match_complex_skeleton() {
        let g = cycle(6);
        let all = independent_sets_by_size(&g);
        let k = crate::independence::independence_complex(&g);
        for d in 0..3 {
            let mut ours = pure_skeleton_faces(&all, d + 1);
            ours.iter_mut().for_each(|l| l.sort_by_cached_key(VertexSet::to_vec));
            assert_eq!(ours, k.pure_skeleton(d).faces_by_size());
        }
    }

    #[test]
    fn euler_audit_counts_calls() {
        let before = euler_audit();
        independence_homology(&cycle(8), Field::Gf2);
        let after = euler_audit();
        assert!(after.computations > before.computations);
        assert_eq!(after.violations, 0);
    }
}
