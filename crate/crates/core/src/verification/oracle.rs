use crate::decomposition::{codominating_witness, is_shedding_vertex, CertificateError, DecompositionEngine};
use crate::graph::Graph;
use crate::homology::{Field, HomologyEngine};
use crate::independence;
use crate::matching::{
    cochordal_cover_general, cochordal_cover_girth5, domination_number, induced_matching_number, matching_number,
};

use super::slow;

/// Betti computations beyond this many vertices are skipped by the engines.
pub const REGULARITY_CAP: usize = 20;

/// The invariants claim checks are phrased in. Two implementations exist:
/// the engines, and definition-level brute force.
pub trait Oracle: Sync {
    fn name(&self) -> &'static str;
    fn well_covered(&self, g: &Graph) -> bool;
    fn codominated(&self, g: &Graph, x: usize) -> bool;
    fn shedding(&self, g: &Graph, x: usize) -> bool;
    /// A deletion order for a codismantling, if one exists.
    fn cd_set(&self, g: &Graph) -> Option<Vec<usize>>;
    fn codismantlable(&self, g: &Graph) -> bool {
        self.cd_set(g).is_some()
    }
    fn vertex_decomposable(&self, g: &Graph) -> bool;
    fn cohen_macaulay(&self, g: &Graph, field: Field) -> bool;
    /// `None` when the graph is too large for the Betti computation.
    fn regularity(&self, g: &Graph, field: Field) -> Option<usize>;
    fn matching_number(&self, g: &Graph) -> usize;
    fn induced_matching_number(&self, g: &Graph) -> usize;
    fn domination_number(&self, g: &Graph) -> usize;
    /// `None` when the graph is too large for this route.
    fn cochord(&self, g: &Graph) -> Option<usize>;
    /// Second cover engine, only meaningful at girth at least five.
    fn cochord_girth5(&self, _g: &Graph) -> Option<usize> {
        None
    }
}

/// The engines. Positive decomposition answers count only if their
/// certificates replay.
pub struct FastOracle {
    decomposition: DecompositionEngine,
    gf2: HomologyEngine,
    rational: HomologyEngine,
}

impl Default for FastOracle {
    fn default() -> Self {
        FastOracle {
            decomposition: DecompositionEngine::default(),
            gf2: HomologyEngine::new(Field::Gf2),
            rational: HomologyEngine::new(Field::Rational),
        }
    }
}

impl FastOracle {
    fn homology(&self, field: Field) -> &HomologyEngine {
        match field {
            Field::Gf2 => &self.gf2,
            Field::Rational => &self.rational,
        }
    }
}

impl Oracle for FastOracle {
    fn name(&self) -> &'static str {
        "engines"
    }

    fn well_covered(&self, g: &Graph) -> bool {
        independence::is_well_covered(g)
    }

    fn codominated(&self, g: &Graph, x: usize) -> bool {
        codominating_witness(g, x).is_some()
    }

    fn shedding(&self, g: &Graph, x: usize) -> bool {
        is_shedding_vertex(g, x)
    }

    fn cd_set(&self, g: &Graph) -> Option<Vec<usize>> {
        // The cover property is a claim under test, not part of the replay.
        let cert = self.decomposition.codismantle(g)?;
        match cert.verify(g) {
            Ok(()) | Err(CertificateError::NotMinimalCover) => Some(cert.cd_set()),
            Err(_) => None,
        }
    }

    fn vertex_decomposable(&self, g: &Graph) -> bool {
        self.decomposition.vertex_decomposition(g).is_some_and(|t| t.replay(g).is_ok())
    }

    fn cohen_macaulay(&self, g: &Graph, field: Field) -> bool {
        self.homology(field).is_cohen_macaulay(g)
    }

    fn regularity(&self, g: &Graph, field: Field) -> Option<usize> {
        self.homology(field).regularity(g, REGULARITY_CAP).ok()
    }

    fn matching_number(&self, g: &Graph) -> usize {
        matching_number(g)
    }

    fn induced_matching_number(&self, g: &Graph) -> usize {
        induced_matching_number(g)
    }

    fn domination_number(&self, g: &Graph) -> usize {
        domination_number(g)
    }

    fn cochord(&self, g: &Graph) -> Option<usize> {
        let cover = cochordal_cover_general(g);
        cover.verify(g).ok()?;
        Some(cover.len())
    }

    fn cochord_girth5(&self, g: &Graph) -> Option<usize> {
        let cover = cochordal_cover_girth5(g)?;
        cover.verify(g).ok()?;
        Some(cover.len())
    }
}

/// Definition-level brute force.
#[derive(Default)]
pub struct SlowOracle;

impl Oracle for SlowOracle {
    fn name(&self) -> &'static str {
        "definitions"
    }

    fn well_covered(&self, g: &Graph) -> bool {
        slow::is_well_covered(g)
    }

    fn codominated(&self, g: &Graph, x: usize) -> bool {
        slow::is_codominated(g, x)
    }

    fn shedding(&self, g: &Graph, x: usize) -> bool {
        slow::is_shedding(g, x)
    }

    fn cd_set(&self, g: &Graph) -> Option<Vec<usize>> {
        slow::cd_sequence(g)
    }

    fn vertex_decomposable(&self, g: &Graph) -> bool {
        slow::is_vertex_decomposable(g)
    }

    fn cohen_macaulay(&self, g: &Graph, field: Field) -> bool {
        slow::is_cohen_macaulay(g, field)
    }

    fn regularity(&self, g: &Graph, field: Field) -> Option<usize> {
        Some(slow::regularity(g, field))
    }

    fn matching_number(&self, g: &Graph) -> usize {
        slow::matching_number(g)
    }

    fn induced_matching_number(&self, g: &Graph) -> usize {
        slow::induced_matching_number(g)
    }

    fn domination_number(&self, g: &Graph) -> usize {
        slow::domination_number(g)
    }

    fn cochord(&self, g: &Graph) -> Option<usize> {
        slow::cochord(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verification::{enumerate_graphs, GraphFilter};

    /// Both routes agree on every invariant over all graphs on six vertices.
    #[test]
    fn routes_agree() {
        let (fast, slow) = (FastOracle::default(), SlowOracle);
        for g in enumerate_graphs(6, &GraphFilter::default()).unwrap() {
            let both = |o: &dyn Oracle| {
                (
                    o.well_covered(&g),
                    (0..g.n()).map(|x| (o.codominated(&g, x), o.shedding(&g, x))).collect::<Vec<_>>(),
                    o.codismantlable(&g),
                    o.vertex_decomposable(&g),
                    Field::ALL.map(|f| (o.cohen_macaulay(&g, f), o.regularity(&g, f))),
                    (o.matching_number(&g), o.induced_matching_number(&g), o.domination_number(&g), o.cochord(&g)),
                )
            };
            assert_eq!(both(&fast), both(&slow), "{g:?}");
        }
    }
}
