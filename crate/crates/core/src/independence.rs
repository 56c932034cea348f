//! Independent sets, well-coveredness, and independence complexes.

use std::collections::HashSet;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet contains vertex {vertex} outside the ground set of size {ground}")]
    VertexOutOfRange { vertex: usize, ground: usize },
}

/// Calls `visit` on every inclusion-maximal independent set, in a fixed
/// order, until it breaks.
///
/// Bron–Kerbosch with pivoting, run on the complement implicitly: the
/// candidates that stay compatible with `v` are those outside `N[v]`.
pub fn for_each_maximal_independent_set<F>(g: &Graph, mut visit: F)
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let n = g.n();
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let mut current = VertexSet::new(n);
    let _ = bron_kerbosch(&closed, &mut current, g.vertices(), VertexSet::new(n), &mut visit);
}

fn bron_kerbosch<F>(
    closed: &[VertexSet],
    current: &mut VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if candidates.is_empty() {
        if excluded.is_empty() {
            return visit(current);
        }
        return ControlFlow::Continue(());
    }
    // pivot leaving the fewest branches: branch only on candidates in N[pivot]
    let pivot =
        candidates.union(&excluded).iter().min_by_key(|&u| (candidates.intersection_len(&closed[u]), u)).unwrap();
    let branch = candidates.intersection(&closed[pivot]);
    for v in branch.iter() {
        current.insert(v);
        let flow =
            bron_kerbosch(closed, current, candidates.difference(&closed[v]), excluded.difference(&closed[v]), visit);
        current.remove(v);
        flow?;
        candidates.remove(v);
        excluded.insert(v);
    }
    ControlFlow::Continue(())
}

/// All maximal independent sets, sorted by their ascending member lists.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    out.sort_by_cached_key(VertexSet::to_vec);
    out
}

/// `α(G)`.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    for_each_maximal_independent_set(g, |s| {
        best = best.max(s.len());
        ControlFlow::Continue(())
    });
    best
}

/// Every maximal independent set has the same size.
pub fn is_well_covered(g: &Graph) -> bool {
    let mut size = None;
    let mut uniform = true;
    for_each_maximal_independent_set(g, |s| match size {
        None => {
            size = Some(s.len());
            ControlFlow::Continue(())
        }
        Some(k) if k == s.len() => ControlFlow::Continue(()),
        Some(_) => {
            uniform = false;
            ControlFlow::Break(())
        }
    });
    uniform
}

/// Well-covered, no isolated vertices, even order and `α = |V|/2`.
pub fn is_very_well_covered(g: &Graph) -> bool {
    g.n().is_multiple_of(2)
        && g.isolated_vertices().is_empty()
        && is_well_covered(g)
        && 2 * independence_number(g) == g.n()
}

/// Finite abstract simplicial complex stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps only the inclusion-maximal sets. An empty list gives the void
    /// complex; `[∅]` gives the complex `{∅}`.
    pub fn from_facets(ground: usize, sets: Vec<VertexSet>) -> Result<Self, ComplexError> {
        let mut owned = Vec::with_capacity(sets.len());
        for s in sets {
            if let Some(v) = s.iter().find(|&v| v >= ground) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, ground });
            }
            owned.push(if s.universe() == ground {
                s
            } else {
                VertexSet::from_vertices(ground, s.iter()).expect("range checked")
            });
        }
        owned.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let mut facets: Vec<VertexSet> = Vec::new();
        for s in owned {
            if !facets.iter().any(|f| s.is_subset(f)) {
                facets.push(s);
            }
        }
        facets.sort_by_cached_key(VertexSet::to_vec);
        Ok(SimplicialComplex { ground, facets })
    }

    pub fn void(ground: usize) -> Self {
        SimplicialComplex { ground, facets: Vec::new() }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest face dimension; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// All faces grouped by size (`result[k]` holds faces with `k` vertices).
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut seen: Vec<HashSet<VertexSet>> = vec![HashSet::new(); (dim + 2) as usize];
        for f in &self.facets {
            let members = f.to_vec();
            let k = members.len();
            for mask in 0u64..(1u64 << k) {
                let mut s = VertexSet::new(self.ground);
                for (i, &v) in members.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        s.insert(v);
                    }
                }
                seen[mask.count_ones() as usize].insert(s);
            }
        }
        seen.into_iter()
            .map(|set| {
                let mut v: Vec<VertexSet> = set.into_iter().collect();
                v.sort_by_cached_key(VertexSet::to_vec);
                v
            })
            .collect()
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`; void when `σ ∉ Δ`.
    pub fn link(&self, face: &VertexSet) -> SimplicialComplex {
        let facets = self.facets.iter().filter(|f| face.is_subset(f)).map(|f| f.difference(face)).collect();
        SimplicialComplex::from_facets(self.ground, facets).expect("same ground set")
    }

    /// Subcomplex generated by the faces of dimension `d`.
    pub fn pure_skeleton(&self, d: usize) -> SimplicialComplex {
        let faces = self.faces_by_size();
        let facets = faces.get(d + 1).cloned().unwrap_or_default();
        SimplicialComplex::from_facets(self.ground, facets).expect("same ground set")
    }
}

/// `I(G)`: facets are the maximal independent sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex { ground: g.n(), facets: maximal_independent_sets(g) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn sets(v: &[VertexSet]) -> Vec<Vec<usize>> {
        v.iter().map(VertexSet::to_vec).collect()
    }

    /// Oracle: α by scanning every subset.
    fn brute_alpha(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|m| {
                let s = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|i| m >> i & 1 == 1)).unwrap();
                g.is_independent(&s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn maximal_independent_set_cases() {
        assert_eq!(sets(&maximal_independent_sets(&Graph::empty(3))), vec![vec![0, 1, 2]]);
        assert_eq!(sets(&maximal_independent_sets(&cycle(4))), vec![vec![0, 2], vec![1, 3]]);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(sets(&maximal_independent_sets(&p3)), vec![vec![0, 2], vec![1]]);
        assert_eq!(sets(&maximal_independent_sets(&Graph::empty(0))), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn independence_number_cases() {
        assert_eq!(independence_number(&complete(5)), 1);
        assert_eq!(brute_alpha(&cycle(7)), 3);
        assert_eq!(independence_number(&cycle(7)), 3);
    }

    #[test]
    fn well_covered_cases() {
        assert!(is_well_covered(&cycle(4)));
        assert!(!is_well_covered(&cycle(6)));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_well_covered(&p3));
        for n in 1..6 {
            assert!(is_well_covered(&complete(n)));
        }
        assert!(is_very_well_covered(&complete(2)));
        assert!(!is_very_well_covered(&cycle(7)));
        assert_eq!(brute_alpha(&cycle(4)), 2);
        assert!(is_very_well_covered(&cycle(4)));
    }

    #[test]
    fn independence_complex_cases() {
        let k3 = independence_complex(&complete(3));
        assert_eq!(sets(k3.facets()), vec![vec![0], vec![1], vec![2]]);
        let e = independence_complex(&Graph::empty(4));
        assert_eq!(sets(e.facets()), vec![vec![0, 1, 2, 3]]);
        let c5 = independence_complex(&cycle(5));
        assert_eq!(sets(c5.facets()), vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert!(c5.is_pure());
        assert!(!independence_complex(&cycle(6)).is_pure());
    }

    #[test]
    fn complex_normalization_and_links() {
        let f = |v: &[usize]| VertexSet::from_vertices(4, v.iter().copied()).unwrap();
        let k = SimplicialComplex::from_facets(4, vec![f(&[0, 1]), f(&[0]), f(&[1, 2, 3])]).unwrap();
        assert_eq!(sets(k.facets()), vec![vec![0, 1], vec![1, 2, 3]]);
        assert_eq!(k.dimension(), Some(2));
        let lk = k.link(&f(&[1]));
        assert_eq!(sets(lk.facets()), vec![vec![0], vec![2, 3]]);
        assert!(SimplicialComplex::void(3).dimension().is_none());
        assert_eq!(k.faces_by_size().iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 4, 4, 1]);
        assert_eq!(sets(k.pure_skeleton(1).facets()), vec![vec![0, 1], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(SimplicialComplex::from_facets(2, vec![f(&[3])]).is_err());
    }
}
