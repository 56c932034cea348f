//! Exhaustive search for counterexamples to two open problems.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::homology::Field;
use crate::io::emit_graph6;

use super::{enumerate_graphs, slow, CheckError, FastOracle, GraphFilter, Oracle, SlowOracle};

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Problem {
    WCCODIS_VD,
    CNS_CM,
}

impl Problem {
    pub const ALL: [Problem; 2] = [Problem::WCCODIS_VD, Problem::CNS_CM];

    pub fn as_str(self) -> &'static str {
        match self {
            Problem::WCCODIS_VD => "WCCODIS_VD",
            Problem::CNS_CM => "CNS_CM",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Problem::WCCODIS_VD => "a well-covered codismantlable graph that is not vertex decomposable",
            Problem::CNS_CM => "a (C4,C5)-free CNS graph with an edge that is Cohen-Macaulay",
        }
    }

    /// Enumeration filter. Cohen-Macaulay graphs are well-covered, so the
    /// CNS_CM search only enumerates well-covered graphs.
    fn filter(self) -> GraphFilter {
        match self {
            Problem::WCCODIS_VD => GraphFilter::default().with_well_covered(),
            Problem::CNS_CM => GraphFilter::free_of(&[4, 5]).with_well_covered(),
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown problem {0:?}; expected WCCODIS_VD or CNS_CM")]
pub struct UnknownProblem(pub String);

impl FromStr for Problem {
    type Err = UnknownProblem;

    fn from_str(s: &str) -> Result<Self, UnknownProblem> {
        Problem::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownProblem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub problem: String,
    pub statement: String,
    pub universe: String,
    /// `(n, graphs examined)` per order.
    pub tested: Vec<(usize, usize)>,
    /// Largest order searched without finding a witness.
    pub frontier: usize,
    pub prefilter_rejected: usize,
    /// Engine answers the definitional route did not confirm.
    pub unconfirmed: Vec<String>,
    pub witness: Option<String>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub version: String,
}

impl SearchReport {
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.wall_time_ms = None;
        serde_json::to_string_pretty(&r).expect("reports serialize")
    }
}

/// Some independent `U` leaves a component of `G - N[U]` that is a cycle
/// of length at least six. Such a graph is not Cohen-Macaulay over any
/// field, since links and their components would have to be.
pub fn has_separated_cycle(g: &Graph) -> bool {
    slow::independent_sets(g).into_iter().any(|u| {
        let set = VertexSet::from_vertices(g.n(), u).expect("ids in range");
        let rest = g.remove_closed_neighborhood(&set).expect("ids in range").graph;
        rest.components().iter().any(|c| c.len() >= 6 && c.iter().all(|v| rest.degree(v) == 2))
    })
}

enum Verdict {
    No,
    Rejected,
    Witness,
    Unconfirmed,
}

fn examine(problem: Problem, g: &Graph, fast: &dyn Oracle, slow: &dyn Oracle) -> Verdict {
    let hit = |o: &dyn Oracle| match problem {
        Problem::WCCODIS_VD => o.codismantlable(g) && !o.vertex_decomposable(g),
        Problem::CNS_CM => Field::ALL.into_iter().any(|f| o.cohen_macaulay(g, f)),
    };
    if problem == Problem::CNS_CM {
        if g.edge_count() == 0 || (0..g.n()).any(|x| fast.codominated(g, x)) {
            return Verdict::No;
        }
        if has_separated_cycle(g) {
            return Verdict::Rejected;
        }
    }
    match (hit(fast), hit(slow)) {
        (false, _) => Verdict::No,
        (true, true) => Verdict::Witness,
        (true, false) => Verdict::Unconfirmed,
    }
}

/// Searches orders `1..=n_max` in canonical order and stops at the first
/// confirmed witness.
pub fn search_counterexample(problem: Problem, n_max: usize) -> Result<(Option<Graph>, SearchReport), CheckError> {
    let filter = problem.filter();
    let mut levels = Vec::new();
    for n in 1..=n_max {
        levels.push((n, enumerate_graphs(n, &filter)?));
    }
    let universe = format!("enumerated n=1..={n_max}, {}", filter.describe());
    Ok(run(problem, universe, levels))
}

/// Same search over given graphs, grouped by order. Graphs failing the
/// problem's filter are ignored.
pub fn search_in(problem: Problem, label: &str, graphs: &[Graph]) -> (Option<Graph>, SearchReport) {
    let filter = problem.filter();
    let mut levels: Vec<(usize, Vec<Graph>)> = Vec::new();
    let mut kept: Vec<&Graph> = graphs.iter().filter(|g| filter.accepts(g)).collect();
    kept.sort_by_key(|g| g.n());
    for g in kept {
        match levels.last_mut() {
            Some((n, v)) if *n == g.n() => v.push(g.clone()),
            _ => levels.push((g.n(), vec![g.clone()])),
        }
    }
    run(problem, format!("external: {label}"), levels)
}

fn run(problem: Problem, universe: String, levels: Vec<(usize, Vec<Graph>)>) -> (Option<Graph>, SearchReport) {
    let start = Instant::now();
    let (fast, slow) = (FastOracle::default(), SlowOracle);
    let mut report = SearchReport {
        problem: problem.as_str().to_string(),
        statement: problem.statement().to_string(),
        universe,
        tested: Vec::new(),
        frontier: 0,
        prefilter_rejected: 0,
        unconfirmed: Vec::new(),
        witness: None,
        verdict: String::new(),
        wall_time_ms: None,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let mut witness = None;
    for (n, graphs) in levels {
        let verdicts: Vec<Verdict> = graphs.par_iter().map(|g| examine(problem, g, &fast, &slow)).collect();
        let first = verdicts.iter().position(|v| matches!(v, Verdict::Witness));
        let upto = first.map_or(graphs.len(), |i| i + 1);
        report.tested.push((n, upto));
        for (g, v) in graphs.iter().zip(&verdicts).take(upto) {
            match v {
                Verdict::Rejected => report.prefilter_rejected += 1,
                Verdict::Unconfirmed => report.unconfirmed.push(emit_graph6(g)),
                _ => {}
            }
        }
        if let Some(i) = first {
            report.witness = Some(emit_graph6(&graphs[i]));
            witness = Some(graphs[i].clone());
            break;
        }
        report.frontier = n;
    }
    report.verdict = match &report.witness {
        Some(w) => format!("witness {w}"),
        None => format!("none up to n={}", report.frontier),
    };
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    (witness, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cycle;

    #[test]
    fn prefilter_is_sound() {
        for n in 1..=7 {
            for g in enumerate_graphs(n, &GraphFilter::default()).unwrap() {
                if has_separated_cycle(&g) {
                    assert!(Field::ALL.iter().all(|&f| !slow::is_cohen_macaulay(&g, f)), "{g:?}");
                }
            }
        }
        assert!(has_separated_cycle(&cycle(6).unwrap()));
        assert!(!has_separated_cycle(&cycle(5).unwrap()));
    }

    #[test]
    fn cycles_are_not_witnesses() {
        let cycles: Vec<Graph> = (3..=10).map(|n| cycle(n).unwrap()).collect();
        let (w, r) = search_in(Problem::CNS_CM, "cycles C3..C10", &cycles);
        assert!(w.is_none(), "{r:?}");
        assert!(r.unconfirmed.is_empty());
    }

    /// Pendant 0 at 1, triangle 4-5-6 and the 4-cycle 2-3-5-6. Every
    /// maximal independent set has three vertices; deleting 1, 5, 2, 4 in
    /// turn codismantles it; the only shedding vertices are 1 and 4, and
    /// both leave a C4 behind.
    #[test]
    fn seven_vertex_wccodis_witness() {
        let (w, r) = search_counterexample(Problem::WCCODIS_VD, 7).unwrap();
        let g = w.unwrap();
        let expected = Graph::from_edges(7, &[(0, 1), (1, 4), (2, 3), (2, 6), (3, 5), (4, 5), (4, 6), (5, 6)]).unwrap();
        assert!(crate::graph::are_isomorphic(&g, &expected));
        assert_eq!((r.frontier, r.witness.as_deref()), (6, Some(emit_graph6(&g).as_str())));
    }

    #[test]
    fn searches_are_reproducible() {
        for p in Problem::ALL {
            let (wa, a) = search_counterexample(p, 6).unwrap();
            let (wb, b) = search_counterexample(p, 6).unwrap();
            assert_eq!(wa, wb);
            assert_eq!(a.canonical_json(), b.canonical_json());
            assert!(a.unconfirmed.is_empty());
        }
    }
}
