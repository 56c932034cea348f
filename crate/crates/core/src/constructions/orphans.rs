//! The exceptional connected well-covered graphs of girth at least five.
//!
//! The edge lists live in `data/orphans/` and are checked every time they
//! are loaded. A failed check means the data file is wrong.
//!
//! The link properties checked here hold for both 13-vertex graphs, so they
//! do not tell `P13` from `Q13`; the bundled `P13` is the one of maximum
//! degree three.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::{shedding_vertices, SheddingMode};
use crate::graph::{are_isomorphic, girth, Graph, VertexSet};
use crate::homology::{is_cohen_macaulay, Field};
use crate::independence::is_well_covered;
use crate::io::parse_edgelist;

use super::{complete, cycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orphan {
    C7,
    P10,
    P13,
    Q13,
    P14,
}

impl Orphan {
    pub const ALL: [Orphan; 5] = [Orphan::C7, Orphan::P10, Orphan::P13, Orphan::Q13, Orphan::P14];

    pub fn name(self) -> &'static str {
        match self {
            Orphan::C7 => "C7",
            Orphan::P10 => "P10",
            Orphan::P13 => "P13",
            Orphan::Q13 => "Q13",
            Orphan::P14 => "P14",
        }
    }

    fn data(self) -> &'static str {
        match self {
            Orphan::C7 => include_str!("../../data/orphans/c7.txt"),
            Orphan::P10 => include_str!("../../data/orphans/p10.txt"),
            Orphan::P13 => include_str!("../../data/orphans/p13.txt"),
            Orphan::Q13 => include_str!("../../data/orphans/q13.txt"),
            Orphan::P14 => include_str!("../../data/orphans/p14.txt"),
        }
    }

    fn order(self) -> usize {
        match self {
            Orphan::C7 => 7,
            Orphan::P10 => 10,
            Orphan::P13 | Orphan::Q13 => 13,
            Orphan::P14 => 14,
        }
    }
}

impl fmt::Display for Orphan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Orphan {
    type Err = OrphanError;

    fn from_str(s: &str) -> Result<Self, OrphanError> {
        Orphan::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| OrphanError::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrphanError {
    #[error("unknown orphan {0:?}; expected C7, P10, P13, Q13 or P14")]
    UnknownName(String),
    #[error("bundled data for {0} does not parse: {1}")]
    Parse(Orphan, String),
    #[error("bundled data for {orphan} fails the check: {check}")]
    Check { orphan: Orphan, check: &'static str },
}

/// Loads and validates one bundled graph.
pub fn orphan(which: Orphan) -> Result<Graph, OrphanError> {
    let g = parse_edgelist(which.data()).map_err(|e| OrphanError::Parse(which, e.to_string()))?;
    let fail = |check| Err(OrphanError::Check { orphan: which, check });
    if g.n() != which.order() {
        return fail("vertex count");
    }
    if !g.is_connected() {
        return fail("connected");
    }
    if !is_well_covered(&g) {
        return fail("well-covered");
    }
    if !girth(&g).at_least(5) {
        return fail("girth at least 5");
    }
    if !shedding_vertices(&g, SheddingMode::Definitional).is_empty() {
        return fail("no shedding vertex");
    }
    if is_cohen_macaulay(&g, Field::Gf2) {
        return fail("not Cohen-Macaulay over GF(2)");
    }
    let c7 = cycle(7).unwrap();
    let link_ok = match which {
        Orphan::C7 => are_isomorphic(&g, &c7),
        Orphan::P10 => has_link(&g, 1, &c7),
        Orphan::P13 | Orphan::P14 => has_link(&g, 2, &c7),
        Orphan::Q13 => has_link(&g, 1, &c7.disjoint_union(&complete(2).unwrap())),
    };
    if !link_ok {
        return fail("link isomorphism");
    }
    Ok(g)
}

/// Some independent set of `size` vertices has `G - N[U]` isomorphic to `h`.
fn has_link(g: &Graph, size: usize, h: &Graph) -> bool {
    let n = g.n();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((next, chosen)) = stack.pop() {
        if chosen.len() == size {
            let u = VertexSet::from_vertices(n, chosen).unwrap();
            if are_isomorphic(&g.remove_closed_neighborhood(&u).unwrap().graph, h) {
                return true;
            }
            continue;
        }
        for v in next..n {
            if chosen.iter().all(|&c| !g.has_edge(c, v)) {
                let mut c = chosen.clone();
                c.push(v);
                stack.push((v + 1, c));
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_graphs_validate() {
        for o in Orphan::ALL {
            let g = orphan(o).unwrap_or_else(|e| panic!("{e}"));
            assert_eq!(g.n(), o.order());
        }
        assert!(are_isomorphic(&orphan(Orphan::C7).unwrap(), &cycle(7).unwrap()));
    }

    #[test]
    fn thirteen_vertex_graphs_differ() {
        let p = orphan(Orphan::P13).unwrap();
        let q = orphan(Orphan::Q13).unwrap();
        assert!(!are_isomorphic(&p, &q));
        // Naming convention: P13 is the subcubic one.
        assert_eq!((0..13).map(|v| p.degree(v)).max(), Some(3));
        assert_eq!((0..13).map(|v| q.degree(v)).max(), Some(4));
    }

    #[test]
    fn names_parse() {
        assert_eq!("q13".parse::<Orphan>().unwrap(), Orphan::Q13);
        assert!("P11".parse::<Orphan>().is_err());
    }
}
