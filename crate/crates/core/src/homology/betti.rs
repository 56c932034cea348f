use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

use super::{Field, HomologyEngine};

/// Default vertex bound for the Hochster sum, which ranges over all subsets.
pub const DEFAULT_BETTI_CAP: usize = 16;

/// Hard bound: subsets are enumerated as 64-bit masks.
const MASK_LIMIT: usize = 63;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("graph has {n} vertices but the Betti cap is {cap}; rerun with a cap of at least {n}")]
pub struct BettiCapExceeded {
    pub n: usize,
    pub cap: usize,
}

/// Graded Betti numbers `β_{i,j}` of `R/I(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: Field,
    /// `entries[i][j] = β_{i,j}`, for `0 <= i, j <= n`.
    entries: Vec<Vec<u64>>,
}

impl BettiTable {
    fn zero(field: Field, n: usize) -> BettiTable {
        BettiTable { field, entries: vec![vec![0; n + 1]; n + 1] }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(i).and_then(|row| row.get(j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, j, β_{i,j})`, ordered by `i` then `j`.
    pub fn nonzero(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    out.push((i, j, b));
                }
            }
        }
        out
    }

    /// `max{j - i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> usize {
        self.nonzero().iter().map(|&(i, j, _)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.nonzero().iter().map(|&(i, _, _)| i).max().unwrap_or(0)
    }

    fn merge(mut self, other: BettiTable) -> BettiTable {
        for (a, b) in self.entries.iter_mut().zip(other.entries) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), BettiCapExceeded> {
    let cap = cap.min(MASK_LIMIT);
    if g.n() > cap {
        return Err(BettiCapExceeded { n: g.n(), cap });
    }
    Ok(())
}

/// Subsets `W` for which `G[W]` has no isolated vertex. Every other
/// nonempty `W` gives a cone, whose reduced homology vanishes.
fn contributing_subsets(g: &Graph) -> impl ParallelIterator<Item = u64> + '_ {
    let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).mask()).collect();
    (1u64..1 << g.n()).into_par_iter().filter(move |&w| {
        let mut rest = w;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj[v] & w == 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    })
}

impl HomologyEngine {
    /// Hochster's formula: `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-1}(I(G[W]))`.
    pub fn graded_betti_table(&self, g: &Graph, cap: usize) -> Result<BettiTable, BettiCapExceeded> {
        check_cap(g, cap)?;
        let n = g.n();
        let mut base = BettiTable::zero(self.field, n);
        base.entries[0][0] = 1;
        let sum = contributing_subsets(g)
            .fold(
                || BettiTable::zero(self.field, n),
                |mut acc, w| {
                    let sub = g.induced(&VertexSet::from_mask(n, w)).graph;
                    let j = w.count_ones() as usize;
                    let profile = self.independence_homology(&sub);
                    for (k, &r) in profile.reduced.iter().enumerate() {
                        // k = d + 1, so i = j - d - 1 = j - k
                        if r != 0 {
                            acc.entries[j - k][j] += r as u64;
                        }
                    }
                    acc
                },
            )
            .reduce(|| BettiTable::zero(self.field, n), BettiTable::merge);
        Ok(base.merge(sum))
    }

    /// `max (d + 1)` over subsets `W` with `H̃_d(I(G[W])) ≠ 0`; additive
    /// over connected components.
    pub fn regularity(&self, g: &Graph, cap: usize) -> Result<usize, BettiCapExceeded> {
        check_cap(g, cap)?;
        Ok(g.components()
            .iter()
            .map(|c| {
                let comp = g.induced(c).graph;
                contributing_subsets(&comp)
                    .map(|w| {
                        let sub = comp.induced(&VertexSet::from_mask(comp.n(), w)).graph;
                        self.independence_homology(&sub).top_nonzero().map_or(0, |d| (d + 1) as usize)
                    })
                    .max()
                    .unwrap_or(0)
            })
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn edgeless_and_single_edge() {
        let engine = HomologyEngine::new(Field::Gf2);
        let t = engine.graded_betti_table(&Graph::empty(4), DEFAULT_BETTI_CAP).unwrap();
        assert_eq!(t.nonzero(), vec![(0, 0, 1)]);
        assert_eq!(t.regularity(), 0);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let t = engine.graded_betti_table(&k2, DEFAULT_BETTI_CAP).unwrap();
        assert_eq!(t.nonzero(), vec![(0, 0, 1), (1, 2, 1)]);
        assert_eq!(engine.regularity(&k2, DEFAULT_BETTI_CAP).unwrap(), 1);
    }

    #[test]
    fn pentagon_tables_agree_across_fields() {
        let a = HomologyEngine::new(Field::Gf2).graded_betti_table(&cycle(5), 16).unwrap();
        let b = HomologyEngine::new(Field::Rational).graded_betti_table(&cycle(5), 16).unwrap();
        assert_eq!(a.nonzero(), b.nonzero());
        // R/I(C5): 1, 5 quadrics, 5 linear syzygies in degree 3, one top class
        assert_eq!(a.nonzero(), vec![(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)]);
        assert_eq!(a.regularity(), 2);
    }

    #[test]
    fn regularity_agrees_with_table() {
        let engine = HomologyEngine::new(Field::Gf2);
        for n in 3..=8 {
            let g = cycle(n);
            let t = engine.graded_betti_table(&g, 16).unwrap();
            assert_eq!(engine.regularity(&g, 16).unwrap(), t.regularity(), "C{n}");
        }
        let two = cycle(5).disjoint_union(&Graph::from_edges(2, &[(0, 1)]).unwrap());
        assert_eq!(engine.regularity(&two, 16).unwrap(), 3);
        assert_eq!(engine.graded_betti_table(&two, 16).unwrap().regularity(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let err = HomologyEngine::new(Field::Gf2).regularity(&cycle(10), 8).unwrap_err();
        assert_eq!(err, BettiCapExceeded { n: 10, cap: 8 });
    }
}
