use crate::graph::{canonical_form, Graph};
use crate::independence::is_well_covered;

use super::{homology_of_faces, independent_sets_by_size, pure_skeleton_faces, HomologyEngine};

impl HomologyEngine {
    /// Reisner's criterion on `I(G)`. The link of an independent set `S`
    /// is `I(G - N[S])`, so the face sweep becomes a recursion over
    /// `G - N[v]`; a join is Cohen–Macaulay iff each factor is, so
    /// components are decided separately.
    pub fn is_cohen_macaulay(&self, g: &Graph) -> bool {
        g.components().iter().all(|c| self.cm_connected(&g.induced(c).graph))
    }

    fn cm_connected(&self, g: &Graph) -> bool {
        if g.n() <= 2 {
            return true;
        }
        let key = canonical_form(g);
        if let Some(known) = self.cm.get(&key) {
            return known;
        }
        let result = is_well_covered(g)
            && {
                let profile = self.connected_homology(g);
                let dim = profile.dimension().expect("nonempty graph has faces");
                profile.vanishes_below(dim)
            }
            && (0..g.n()).all(|v| {
                let rest = g.induced(&g.closed_neighbors(v).complement()).graph;
                self.is_cohen_macaulay(&rest)
            });
        self.cm.insert(key, result);
        result
    }

    /// Duval's criterion: every pure skeleton of `I(G)` is Cohen–Macaulay.
    /// Links in a pure skeleton are pure skeleta of links, so the check is
    /// that for every independent set `S`, with `L = G - N[S]`, each pure
    /// `e`-skeleton of `I(L)` has no reduced homology below `e`.
    pub fn is_sequentially_cm(&self, g: &Graph) -> bool {
        if g.is_edgeless() {
            return true;
        }
        let key = canonical_form(g);
        if let Some(known) = self.scm.get(&key) {
            return known;
        }
        let all = independent_sets_by_size(g);
        let result = (1..all.len()).all(|size| {
            let faces = pure_skeleton_faces(&all, size);
            homology_of_faces(&faces, self.field).vanishes_below(size as isize - 1)
        }) && (0..g.n()).all(|v| {
            let rest = g.induced(&g.closed_neighbors(v).complement()).graph;
            self.is_sequentially_cm(&rest)
        });
        self.scm.insert(key, result);
        result
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{Graph, VertexSet};
    use crate::homology::{reduced_betti_numbers, Field, HomologyEngine};
    use crate::independence::{independence_complex, SimplicialComplex};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Oracle: Reisner's criterion literally, over every face of the
    /// complex and its link, with no recursion or memo.
    fn reisner(k: &SimplicialComplex, field: Field) -> bool {
        k.faces_by_size().iter().flatten().all(|face| {
            let lk = k.link(face);
            let dim = lk.dimension().unwrap();
            reduced_betti_numbers(&lk, field).vanishes_below(dim)
        })
    }

    /// Oracle: every pure skeleton passes the literal Reisner check.
    fn duval(k: &SimplicialComplex, field: Field) -> bool {
        let dim = k.dimension().unwrap();
        (0..=dim.max(0) as usize).all(|d| reisner(&k.pure_skeleton(d), field))
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn cycles() {
        for field in Field::ALL {
            let engine = HomologyEngine::new(field);
            let cm: Vec<usize> = (3..=10).filter(|&n| engine.is_cohen_macaulay(&cycle(n))).collect();
            assert_eq!(cm, vec![3, 5]);
            assert!(engine.is_cohen_macaulay(&Graph::empty(4)));
            assert!(engine.is_cohen_macaulay(&Graph::empty(0)));
        }
    }

    #[test]
    fn matches_literal_reisner_and_duval_on_five_vertices() {
        for field in Field::ALL {
            let engine = HomologyEngine::new(field);
            for g in all_graphs(5) {
                let k = independence_complex(&g);
                assert_eq!(engine.is_cohen_macaulay(&g), reisner(&k, field), "{g:?}");
                assert_eq!(engine.is_sequentially_cm(&g), duval(&k, field), "{g:?}");
            }
        }
    }

    #[test]
    fn six_cycle_against_oracle() {
        let g = cycle(6);
        let k = independence_complex(&g);
        for field in Field::ALL {
            let engine = HomologyEngine::new(field);
            assert_eq!(engine.is_sequentially_cm(&g), duval(&k, field));
            assert!(!engine.is_cohen_macaulay(&g));
        }
    }

    #[test]
    fn cm_implies_scm_and_closed_under_links() {
        let engine = HomologyEngine::new(Field::Gf2);
        for g in all_graphs(6).step_by(7) {
            if engine.is_cohen_macaulay(&g) {
                assert!(engine.is_sequentially_cm(&g));
                for v in 0..g.n() {
                    let s = VertexSet::from_vertices(g.n(), [v]).unwrap();
                    let rest = g.remove_closed_neighborhood(&s).unwrap().graph;
                    assert!(engine.is_cohen_macaulay(&rest));
                }
            }
        }
    }
}
