//! graph6, sparse6 and the line-based edge-list formats.

use thiserror::Error;

use crate::constructions::{Digraph, Poset};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("byte {offset}: {reason}")]
    Encoding { offset: usize, reason: &'static str },
    #[error("line {line}: {kind}")]
    Line { line: usize, kind: LineError },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LineError {
    #[error("missing \"n m\" header")]
    MissingHeader,
    #[error("expected two non-negative integers, got {0:?}")]
    BadPair(String),
    #[error("loop at {0}")]
    Loop(usize),
    #[error("{0}-{1} listed twice")]
    Duplicate(usize, usize),
    #[error("vertex {vertex} is not below n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("header announces {expected} lines but {found} follow")]
    Count { expected: usize, found: usize },
    #[error("relation {0}<{1} closes a cycle")]
    Cycle(usize, usize),
}

const BIAS: u8 = 63;

fn encoding(offset: usize, reason: &'static str) -> ParseError {
    ParseError::Encoding { offset, reason }
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258048 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + BIAS));
    }
}

/// Reads `N(n)` starting at `at`; returns `n` and the offset after it.
fn read_size(bytes: &[u8], at: usize) -> Result<(usize, usize), ParseError> {
    let digit = |i: usize| -> Result<usize, ParseError> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - BIAS) as usize),
            Some(_) => Err(encoding(i, "byte outside 63..=126")),
            None => Err(encoding(i, "truncated vertex count")),
        }
    };
    match bytes.get(at) {
        Some(126) if bytes.get(at + 1) == Some(&126) => {
            let n = (0..6).try_fold(0, |acc, k| Ok::<_, ParseError>((acc << 6) | digit(at + 2 + k)?))?;
            Ok((n, at + 8))
        }
        Some(126) => {
            let n = (0..3).try_fold(0, |acc, k| Ok::<_, ParseError>((acc << 6) | digit(at + 1 + k)?))?;
            Ok((n, at + 4))
        }
        _ => Ok((digit(at)?, at + 1)),
    }
}

fn strip_header<'a>(text: &'a str, header: &str) -> (&'a [u8], usize) {
    let t = text.trim_end_matches(['\n', '\r']);
    match t.strip_prefix(header) {
        Some(rest) => (rest.as_bytes(), header.len()),
        None => (t.as_bytes(), 0),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + BIAS);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + BIAS);
    }
    String::from_utf8(out).expect("printable ASCII")
}

/// Parses one graph6 string, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let (bytes, shift) = strip_header(text, ">>graph6<<");
    let at = |e: ParseError| match e {
        ParseError::Encoding { offset, reason } => encoding(offset + shift, reason),
        other => other,
    };
    let (n, start) = read_size(bytes, 0).map_err(at)?;
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[start.min(bytes.len())..];
    let need = bits.div_ceil(6);
    if body.len() != need {
        let reason = if body.len() < need { "too few adjacency bytes" } else { "trailing bytes" };
        return Err(encoding(shift + start + body.len().min(need), reason));
    }
    let mut adj = vec![VertexSet::new(n); n];
    let (mut i, mut j) = (0, 1);
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(encoding(shift + start + k, "byte outside 63..=126"));
        }
        let v = b - BIAS;
        for bit in (0..6).rev() {
            let set = (v >> bit) & 1 == 1;
            if 6 * k + (5 - bit) >= bits {
                if set {
                    return Err(encoding(shift + start + k, "nonzero padding bits"));
                }
                continue;
            }
            if set {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded ids are in range"))
}

/// Parses one sparse6 string (leading `:`). Loops and repeated edges are
/// rejected since graphs here are simple.
pub fn parse_sparse6(text: &str) -> Result<Graph, ParseError> {
    let (bytes, shift) = strip_header(text, ">>sparse6<<");
    if bytes.first() != Some(&b':') {
        return Err(encoding(shift, "sparse6 must start with ':'"));
    }
    let at = |e: ParseError| match e {
        ParseError::Encoding { offset, reason } => encoding(offset + shift, reason),
        other => other,
    };
    let (n, start) = read_size(bytes, 1).map_err(at)?;
    let k = usize::BITS as usize - n.saturating_sub(1).leading_zeros() as usize;
    let body = &bytes[start.min(bytes.len())..];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(encoding(shift + start + i, "byte outside 63..=126"));
        }
    }
    let total = 6 * body.len();
    let bit = |p: usize| ((body[p / 6] - BIAS) >> (5 - p % 6)) & 1;
    let mut adj = vec![VertexSet::new(n); n];
    let (mut pos, mut v) = (0, 0usize);
    while pos + 1 + k <= total {
        let b = bit(pos);
        let x = (0..k).fold(0usize, |acc, t| (acc << 1) | bit(pos + 1 + t) as usize);
        let unit = shift + start + pos / 6;
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(encoding(unit, "loop"));
        } else {
            if adj[x].contains(v) {
                return Err(encoding(unit, "repeated edge"));
            }
            adj[x].insert(v);
            adj[v].insert(x);
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded ids are in range"))
}

/// graph6 or sparse6, chosen by the leading byte.
pub fn parse_graph6_or_sparse6(text: &str) -> Result<Graph, ParseError> {
    if text.starts_with(':') || text.starts_with(">>sparse6<<") {
        parse_sparse6(text)
    } else {
        parse_graph6(text)
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn pair(line: usize, l: &str) -> Result<(usize, usize), ParseError> {
    let bad = || ParseError::Line { line, kind: LineError::BadPair(l.to_string()) };
    let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(bad()),
    }
}

/// Header `n m`, then `m` pairs, each checked against `n`.
/// `(line, u, v)` for each listed pair.
type Pairs = Vec<(usize, usize, usize)>;

fn pairs(text: &str) -> Result<(usize, Pairs), ParseError> {
    let mut lines = content_lines(text);
    let (hl, h) = lines.next().ok_or(ParseError::Line { line: 1, kind: LineError::MissingHeader })?;
    let (n, m) = pair(hl, h)?;
    let mut out = Vec::with_capacity(m);
    let mut last = hl;
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::Line { line, kind: LineError::OutOfRange { vertex, n } });
            }
        }
        if u == v {
            return Err(ParseError::Line { line, kind: LineError::Loop(u) });
        }
        out.push((line, u, v));
        last = line;
    }
    if out.len() != m {
        return Err(ParseError::Line { line: last, kind: LineError::Count { expected: m, found: out.len() } });
    }
    Ok((n, out))
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let (n, list) = pairs(text)?;
    let mut g = vec![VertexSet::new(n); n];
    for (line, u, v) in list {
        if g[u].contains(v) {
            return Err(ParseError::Line { line, kind: LineError::Duplicate(u.min(v), u.max(v)) });
        }
        g[u].insert(v);
        g[v].insert(u);
    }
    Ok(Graph::from_adjacency(g).expect("checked"))
}

pub fn emit_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Ordered pairs `u v` for arcs `u -> v`. Directed cycles are accepted.
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let (n, list) = pairs(text)?;
    let mut seen = vec![VertexSet::new(n); n];
    for &(line, u, v) in &list {
        if seen[u].contains(v) {
            return Err(ParseError::Line { line, kind: LineError::Duplicate(u, v) });
        }
        seen[u].insert(v);
    }
    Ok(Digraph::new(n, list.into_iter().map(|(_, u, v)| (u, v)).collect()).expect("checked"))
}

/// Relations `a b` meaning `a < b`, usually the covers; the order is their
/// transitive closure. The first line that closes a cycle is reported.
pub fn parse_poset(text: &str) -> Result<Poset, ParseError> {
    let (n, list) = pairs(text)?;
    // up[x] = {z : x <= z}, kept closed as relations arrive.
    let mut up: Vec<VertexSet> = (0..n).map(|x| VertexSet::from_vertices(n, [x]).unwrap()).collect();
    for &(line, a, b) in &list {
        if up[b].contains(a) {
            return Err(ParseError::Line { line, kind: LineError::Cycle(a, b) });
        }
        let gained = up[b].clone();
        for set in up.iter_mut().filter(|s| s.contains(a)) {
            set.union_with(&gained);
        }
    }
    let rel: Vec<_> = list.into_iter().map(|(_, a, b)| (a, b)).collect();
    Ok(Poset::from_relations(n, &rel).expect("acyclic"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path, upper_bound_graph};
    use crate::graph::are_isomorphic;
    use proptest::prelude::*;

    /// Bit-by-bit graph6 encoder written from the format description.
    fn graph6_oracle(g: &Graph) -> String {
        let n = g.n();
        assert!(n < 63);
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(g.has_edge(i, j));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn known_strings() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(emit_graph6(&cycle(5).unwrap()), "Dhc");
        let p = parse_graph6(">>graph6<<Dhc\n").unwrap();
        assert_eq!(p, cycle(5).unwrap());
        let k = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(parse_sparse6(":An").unwrap(), k);
    }

    #[test]
    fn large_vertex_count_header() {
        let g = Graph::from_edges(70, &[(0, 69), (3, 4)]).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 6]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_graph6_reports_offsets() {
        assert_eq!(parse_graph6("Dh"), Err(encoding(2, "too few adjacency bytes")));
        assert_eq!(parse_graph6("Dhcc"), Err(encoding(3, "trailing bytes")));
        assert_eq!(parse_graph6("B~").unwrap_err(), encoding(1, "nonzero padding bits"));
        assert_eq!(parse_graph6(">>graph6<<D h"), Err(encoding(11, "byte outside 63..=126")));
        assert!(matches!(parse_graph6(""), Err(ParseError::Encoding { offset: 0, .. })));
    }

    #[test]
    fn sparse6_reference_example() {
        // The example from the format description: n = 7, edges
        // 0-1 0-2 1-2 5-6.
        let g = parse_sparse6(":Fa@x^").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
    }

    #[test]
    fn line_formats() {
        assert_eq!(parse_edgelist("3 2\n0 1\n1 2").unwrap(), path(3).unwrap());
        let v = parse_poset("3 2\n0 2\n1 2").unwrap();
        assert!(v.less(0, 2) && v.less(1, 2) && !v.less(0, 1));
        assert_eq!(upper_bound_graph(&v).edge_count(), 3);
        let d = parse_digraph("2 2\n0 1\n1 0\n").unwrap();
        assert!(!d.is_acyclic());

        let err = |t: &str| match parse_edgelist(t) {
            Err(ParseError::Line { line, kind }) => (line, kind),
            other => panic!("{other:?}"),
        };
        assert_eq!(err("3 2\n0 1\n# c\n1 1\n"), (4, LineError::Loop(1)));
        assert_eq!(err("3 2\n0 1\n1 0\n"), (3, LineError::Duplicate(0, 1)));
        assert_eq!(err("3 1\n0 3\n"), (2, LineError::OutOfRange { vertex: 3, n: 3 }));
        assert_eq!(err("3 2\n0 1\n"), (2, LineError::Count { expected: 2, found: 1 }));
        assert_eq!(err("\n\n"), (1, LineError::MissingHeader));
        assert_eq!(err("3 1\n0 x\n"), (2, LineError::BadPair("0 x".into())));
        assert_eq!(
            parse_poset("3 3\n0 1\n1 2\n2 0\n").unwrap_err(),
            ParseError::Line { line: 4, kind: LineError::Cycle(2, 0) }
        );
        assert!(matches!(parse_digraph("2 2\n0 1\n0 1"), Err(ParseError::Line { line: 3, .. })));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph(14)) {
            let s = emit_graph6(&g);
            prop_assert_eq!(&s, &graph6_oracle(&g));
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert!(are_isomorphic(&parse_edgelist(&emit_edgelist(&g)).unwrap(), &g));
        }
    }
}
