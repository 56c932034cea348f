use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use super::{Graph, VertexSet};

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(try_from = "GirthRepr")]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

// Reports carry infinity as the string "inf".
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GirthRepr {
    Finite(usize),
    Text(String),
}

impl TryFrom<GirthRepr> for Girth {
    type Error = String;

    fn try_from(r: GirthRepr) -> Result<Girth, String> {
        match r {
            GirthRepr::Finite(g) => Ok(Girth::Finite(g)),
            GirthRepr::Text(t) if t == "inf" => Ok(Girth::Infinite),
            GirthRepr::Text(t) => Err(format!("invalid girth {t:?}")),
        }
    }
}

/// Girth by breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// True iff `g` has no induced cycle whose length is in `lengths`.
pub fn is_induced_cycle_free(g: &Graph, lengths: &[usize]) -> bool {
    let Some(&max_len) = lengths.iter().max() else {
        return true;
    };
    let n = g.n();
    for s in 0..n {
        let mut allowed = VertexSet::new(n);
        for v in s + 1..n {
            allowed.insert(v);
        }
        for p1 in g.neighbors(s).intersection(&allowed).iter() {
            let mut path = vec![s, p1];
            let mut blocked = VertexSet::new(n);
            blocked.insert(s);
            blocked.insert(p1);
            if extend_induced_path(g, &allowed, &mut path, &mut blocked, lengths, max_len) {
                return false;
            }
        }
    }
    true
}

/// `blocked` holds the path plus the neighbors of every interior vertex
/// except the last one. Returns true once a wanted induced cycle closes.
fn extend_induced_path(
    g: &Graph,
    allowed: &VertexSet,
    path: &mut Vec<usize>,
    blocked: &mut VertexSet,
    lengths: &[usize],
    max_len: usize,
) -> bool {
    let s = path[0];
    let k = path.len();
    let v = path[k - 1];
    let mut candidates = g.neighbors(v).intersection(allowed);
    candidates.difference_with(blocked);
    for w in candidates.iter() {
        if g.has_edge(w, s) {
            if lengths.contains(&(k + 1)) {
                return true;
            }
            continue;
        }
        if k + 1 >= max_len {
            continue;
        }
        // v becomes interior: its neighbors are blocked for deeper vertices
        let saved = blocked.clone();
        if k >= 2 {
            blocked.union_with(g.neighbors(v));
        }
        blocked.insert(w);
        path.push(w);
        let found = extend_induced_path(g, allowed, path, blocked, lengths, max_len);
        path.pop();
        *blocked = saved;
        if found {
            return true;
        }
    }
    false
}

/// Maximum cardinality search; returns vertices in visit order.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !visited[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Chordality through a perfect elimination ordering: the reverse of a
/// maximum cardinality search order is one iff the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    let mut position = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        position[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| position[w] > position[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&g.complement())
}

/// Some induced cycle of length at least four, if one exists.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb = g.neighbors(v).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                // shortest a-b path avoiding N[v] except a and b
                let mut banned = g.closed_neighbors(v);
                banned.remove(a);
                banned.remove(b);
                let mut prev = vec![usize::MAX; n];
                prev[a] = a;
                let mut queue = VecDeque::from([a]);
                while let Some(u) = queue.pop_front() {
                    if u == b {
                        break;
                    }
                    for w in g.neighbors(u) {
                        if prev[w] == usize::MAX && !banned.contains(w) {
                            prev[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if prev[b] != usize::MAX {
                    let mut cycle = vec![v];
                    let mut path = vec![b];
                    let mut u = b;
                    while u != a {
                        u = prev[u];
                        path.push(u);
                    }
                    path.reverse();
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Graph::from_edges(m + 1, &edges).unwrap()
    }

    #[test]
    fn girth_cases() {
        assert_eq!(girth(&cycle(5)), Girth::Finite(5));
        assert_eq!(girth(&star(4)), Girth::Infinite);
        assert_eq!(girth(&cycle(3)), Girth::Finite(3));
        let theta = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert_eq!(girth(&theta), Girth::Finite(4));
        assert!(Girth::Infinite > Girth::Finite(100));
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "\"inf\"");
        let back: Girth = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Girth::Infinite);
    }

    #[test]
    fn induced_cycle_cases() {
        assert!(!is_induced_cycle_free(&cycle(4), &[4, 5]));
        assert!(is_induced_cycle_free(&star(5), &[4, 5, 7]));
        // C6 with a long chord has induced C4s but no C5
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert!(is_induced_cycle_free(&g, &[5, 6]));
        assert!(!is_induced_cycle_free(&g, &[4]));
        // wheel: C5 rim is induced
        let mut w: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        w.extend((0..5).map(|i| (i, 5)));
        let w5 = Graph::from_edges(6, &w).unwrap();
        assert!(!is_induced_cycle_free(&w5, &[5]));
        assert!(is_induced_cycle_free(&w5, &[4, 6]));
    }

    #[test]
    fn chordal_cases() {
        assert!(is_chordal(&star(4)));
        assert!(!is_chordal(&cycle(4)));
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        assert!(is_chordal(&diamond));
        assert!(is_cochordal(&star(5)));
        assert!(!is_cochordal(&cycle(5)));
        let c = find_chordless_cycle(&cycle(6)).unwrap();
        assert_eq!(c.len(), 6);
        assert!(find_chordless_cycle(&diamond).is_none());
    }
}
