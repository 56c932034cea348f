//! Graph families and graph-producing operators.
//!
//! Labelings are fixed so that certificates are stable:
//!
//! * `cycle(n)`: edges `i ~ i+1 (mod n)`.
//! * `path(n)`: edges `i ~ i+1`.
//! * `star(m)`: center `0`, leaves `1..=m`.
//! * `double_star(a, b)`: centers `0 ~ 1`, leaves `2..2+a` on `0`, the next
//!   `b` on `1`.
//! * `pan(m)`: the cycle on `0..m` plus the pendant `m` at `0`.
//! * `wheel(n)`: the cycle on `0..n` plus the hub `n`.
//! * `gn_family(n)`: vertex `v_j` of block `i` (both 1-based) is
//!   `12(i-1) + (j-1)`.

mod order;
mod orphans;
mod whisker;

use thiserror::Error;

use crate::graph::{girth, Girth, Graph};

pub use order::{common_enemy, upper_bound_graph, Digraph, DigraphError, Poset, PosetError};
pub use orphans::{orphan, Orphan, OrphanError};
pub use whisker::{clique_whisker, EdgeCliquePartition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{family} needs a parameter of at least {min}, got {value}")]
    OutOfRange { family: &'static str, value: usize, min: usize },
    #[error("{family} takes {expected} parameter(s), got {found}")]
    ParameterCount { family: &'static str, expected: usize, found: usize },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
}

fn at_least(family: &'static str, value: usize, min: usize) -> Result<(), ConstructionError> {
    if value < min {
        return Err(ConstructionError::OutOfRange { family, value, min });
    }
    Ok(())
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("family edges are in range")
}

pub fn cycle(n: usize) -> Result<Graph, ConstructionError> {
    at_least("cycle", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn path(n: usize) -> Result<Graph, ConstructionError> {
    at_least("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph, ConstructionError> {
    at_least("complete", n, 1)?;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(build(n, &edges))
}

/// `K_{1,m}`.
pub fn star(m: usize) -> Result<Graph, ConstructionError> {
    at_least("star", m, 1)?;
    let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    Ok(build(m + 1, &edges))
}

/// Two adjacent centers carrying `a` and `b` leaves.
pub fn double_star(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    at_least("doublestar", a, 1)?;
    at_least("doublestar", b, 1)?;
    let mut edges = vec![(0, 1)];
    edges.extend((2..2 + a).map(|v| (0, v)));
    edges.extend((2 + a..2 + a + b).map(|v| (1, v)));
    Ok(build(2 + a + b, &edges))
}

pub fn pan(m: usize) -> Result<Graph, ConstructionError> {
    at_least("pan", m, 3)?;
    let mut edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    edges.push((0, m));
    Ok(build(m + 1, &edges))
}

pub fn wheel(n: usize) -> Result<Graph, ConstructionError> {
    at_least("wheel", n, 3)?;
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Ok(build(n + 1, &edges))
}

/// Dispatches on a family name as used by the command line: `cycle`,
/// `path`, `complete`, `star`, `doublestar`, `pan`, `wheel`, `gn`.
pub fn named_graph(name: &str, params: &[usize]) -> Result<Graph, ConstructionError> {
    let one = |family: &'static str| match params {
        [p] => Ok(*p),
        _ => Err(ConstructionError::ParameterCount { family, expected: 1, found: params.len() }),
    };
    match name {
        "cycle" => cycle(one("cycle")?),
        "path" => path(one("path")?),
        "complete" => complete(one("complete")?),
        "star" => star(one("star")?),
        "pan" => pan(one("pan")?),
        "wheel" => wheel(one("wheel")?),
        "gn" => gn_family(one("gn")?),
        "doublestar" => match params {
            [a, b] => double_star(*a, *b),
            _ => Err(ConstructionError::ParameterCount { family: "doublestar", expected: 2, found: params.len() }),
        },
        other => Err(ConstructionError::UnknownFamily(other.to_string())),
    }
}

/// Id of `v_j` in block `i` of `G_n` (both 1-based).
pub fn gn_vertex(i: usize, j: usize) -> usize {
    debug_assert!(i >= 1 && (1..=12).contains(&j));
    12 * (i - 1) + (j - 1)
}

/// The connected girth-six graph `G_n`: `n` blocks, each a 10-cycle
/// `v_1..v_10` with pendants `v_11` at `v_1` and `v_12` at `v_2` and the
/// chord `v_2 v_7`, joined by the binding edges `v_5^i v_9^{i+1}`.
pub fn gn_family(n: usize) -> Result<Graph, ConstructionError> {
    at_least("gn", n, 1)?;
    let mut edges = Vec::with_capacity(14 * n - 1);
    for i in 1..=n {
        let v = |j| gn_vertex(i, j);
        edges.extend((1..=10).map(|j| (v(j), v(j % 10 + 1))));
        edges.extend([(v(1), v(11)), (v(2), v(7)), (v(2), v(12))]);
        if i < n {
            edges.push((v(5), gn_vertex(i + 1, 9)));
        }
    }
    let g = build(12 * n, &edges);
    assert_eq!(g.edge_count(), 14 * n - 1);
    assert_eq!(girth(&g), Girth::Finite(6));
    Ok(g)
}

/// The induced matching `{v_1 v_11, v_3 v_4, v_8 v_9}` of every block.
pub fn gn_induced_matching(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| [(1, 11), (3, 4), (8, 9)].map(|(a, b)| (gn_vertex(i, a), gn_vertex(i, b)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.n(), c5.edge_count(), girth(&c5)), (5, 5, Girth::Finite(5)));
        let w4 = wheel(4).unwrap();
        assert_eq!((w4.n(), w4.edge_count(), w4.degree(4)), (5, 8, 4));
        let p4 = pan(4).unwrap();
        assert_eq!((p4.n(), p4.edge_count(), p4.degree(4)), (5, 5, 1));
        let ds = double_star(2, 3).unwrap();
        assert_eq!((ds.n(), ds.edge_count(), ds.degree(0), ds.degree(1)), (7, 6, 3, 4));
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(star(3).unwrap().degree(0), 3);
    }

    #[test]
    fn parameters_are_checked() {
        assert_eq!(cycle(2), Err(ConstructionError::OutOfRange { family: "cycle", value: 2, min: 3 }));
        assert!(gn_family(0).is_err());
        assert!(named_graph("doublestar", &[1]).is_err());
        assert!(matches!(named_graph("petersen", &[]), Err(ConstructionError::UnknownFamily(_))));
        assert_eq!(named_graph("wheel", &[5]).unwrap(), wheel(5).unwrap());
    }

    #[test]
    fn gn_counts() {
        let g1 = gn_family(1).unwrap();
        assert_eq!((g1.n(), g1.edge_count()), (12, 13));
        let g2 = gn_family(2).unwrap();
        assert_eq!((g2.n(), g2.edge_count()), (24, 27));
        assert!(g2.is_connected());
        assert!(g2.has_edge(gn_vertex(1, 5), gn_vertex(2, 9)));
    }

    #[test]
    fn gn_matching_is_induced() {
        for n in 1..=3 {
            let g = gn_family(n).unwrap();
            let m = gn_induced_matching(n);
            assert_eq!(m.len(), 3 * n);
            for (k, &(a, b)) in m.iter().enumerate() {
                assert!(g.has_edge(a, b));
                for &(c, d) in &m[k + 1..] {
                    for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
                        assert!(x != y && !g.has_edge(x, y));
                    }
                }
            }
        }
    }
}
