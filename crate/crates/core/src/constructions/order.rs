use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("arc {0}->{1} has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("arc {0}->{1} listed twice")]
    Duplicate(usize, usize),
}

/// A loop-free digraph on `0..n`. Enemy sets are computed once here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    #[serde(skip)]
    enemies: Vec<VertexSet>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, DigraphError> {
        let mut out = vec![VertexSet::new(n); n];
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(DigraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(DigraphError::Loop(u));
            }
            if out[u].contains(v) {
                return Err(DigraphError::Duplicate(u, v));
            }
            out[u].insert(v);
        }
        let mut into = vec![VertexSet::new(n); n];
        for &(u, v) in &arcs {
            into[v].insert(u);
        }
        // A(u): everything with a dipath of length >= 1 into u.
        let enemies = (0..n)
            .map(|u| {
                let mut reached = VertexSet::new(n);
                let mut stack: Vec<usize> = into[u].iter().collect();
                while let Some(w) = stack.pop() {
                    if !reached.contains(w) {
                        reached.insert(w);
                        stack.extend(into[w].iter());
                    }
                }
                reached
            })
            .collect();
        Ok(Digraph { n, arcs, enemies })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// `A(u)`.
    pub fn enemies(&self, u: usize) -> &VertexSet {
        &self.enemies[u]
    }

    /// `A[u] = A(u) ∪ {u}`.
    pub fn closed_enemies(&self, u: usize) -> VertexSet {
        let mut s = self.enemies[u].clone();
        s.insert(u);
        s
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.n).all(|u| !self.enemies[u].contains(u))
    }
}

/// `x ~ y` iff `x != y` and `A[x] ∩ A[y]` is nonempty.
pub fn common_enemy(d: &Digraph) -> Graph {
    let closed: Vec<VertexSet> = (0..d.n).map(|u| d.closed_enemies(u)).collect();
    let mut edges = Vec::new();
    for x in 0..d.n {
        for y in x + 1..d.n {
            if !closed[x].is_disjoint(&closed[y]) {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(d.n, &edges).expect("ids in range")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation {0}<{1} has an element outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("the relations force {0} < {0}")]
    Cycle(usize),
}

/// A finite strict order on `0..n`, stored transitively closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `above[x] = {z : x < z}`.
    above: Vec<VertexSet>,
}

impl Poset {
    /// Builds the transitive closure of the pairs `a < b`.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut above = vec![VertexSet::new(n); n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(PosetError::OutOfRange(a, b, n));
            }
            above[a].insert(b);
        }
        for k in 0..n {
            for x in 0..n {
                if above[x].contains(k) {
                    let via = above[k].clone();
                    above[x].union_with(&via);
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| above[x].contains(x)) {
            return Err(PosetError::Cycle(x));
        }
        Ok(Poset { n, above })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// `{z : x <= z}`.
    pub fn upper_set(&self, x: usize) -> VertexSet {
        let mut s = self.above[x].clone();
        s.insert(x);
        s
    }

    /// Pairs `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.above[x].iter() {
                if !self.above[x].iter().any(|z| self.above[z].contains(y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The cover digraph with arcs pointing down, `y -> x` for each cover
    /// `x < y`, so that `A(x)` is the strict upper set of `x`.
    pub fn downward_cover_digraph(&self) -> Digraph {
        let arcs = self.covers().into_iter().map(|(x, y)| (y, x)).collect();
        Digraph::new(self.n, arcs).expect("covers are distinct and loop-free")
    }
}

/// `x ~ y` iff `x != y` and some `z` has `x, y <= z`.
pub fn upper_bound_graph(p: &Poset) -> Graph {
    let ups: Vec<VertexSet> = (0..p.n).map(|x| p.upper_set(x)).collect();
    let mut edges = Vec::new();
    for x in 0..p.n {
        for y in x + 1..p.n {
            if !ups[x].is_disjoint(&ups[y]) {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(p.n, &edges).expect("ids in range")
}
