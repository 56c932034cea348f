//! Canonical labeling by partition refinement with individualization.
//!
//! Disconnected graphs are labeled component by component (components
//! sorted by their own canonical keys), and connected graphs whose
//! complement is disconnected are labeled through the complement. What is
//! left goes to an individualization/refinement search that prunes sibling
//! branches using automorphisms found at equal leaves.

use super::{Graph, VertexSet};

/// Isomorphism-invariant key: vertex count followed by the packed upper
/// triangle of the canonically relabeled adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Vertex count of the graph the key was computed from.
    pub fn order(&self) -> usize {
        u32::from_le_bytes(self.0[..4].try_into().unwrap()) as usize
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let order = canonical_labeling(g);
    encode(g, &order)
}

/// Canonical form together with the labeling that produced it.
pub fn canonical_form_and_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let order = canonical_labeling(g);
    (encode(g, &order), order)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

fn encode(g: &Graph, order: &[usize]) -> CanonicalForm {
    let n = g.n();
    let mut bytes = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    bytes.extend_from_slice(&(n as u32).to_le_bytes());
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for &oi in &order[..j] {
            acc = (acc << 1) | g.has_edge(oi, order[j]) as u8;
            k += 1;
            if k == 8 {
                bytes.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        bytes.push(acc << (8 - k));
    }
    CanonicalForm(bytes)
}

/// Returns `order` with `order[i]` the vertex placed at canonical position
/// `i`; `g.permuted(&order)` is identical for all graphs isomorphic to `g`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut parts: Vec<(CanonicalForm, Vec<usize>)> = comps
            .iter()
            .map(|c| {
                let sub = g.induced(c);
                let lab = labeling_connected(&sub.graph);
                let key = encode(&sub.graph, &lab);
                (key, lab.into_iter().map(|i| sub.original[i]).collect())
            })
            .collect();
        parts.sort();
        return parts.into_iter().flat_map(|(_, o)| o).collect();
    }
    labeling_connected(g)
}

fn labeling_connected(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let co = g.complement();
    if !co.is_connected() {
        return canonical_labeling(&co);
    }
    let mut search = Search { adj: g.adjacency(), n, first: None, best: None, automorphisms: Vec::new() };
    let unit: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut prefix = Vec::new();
    search.visit(unit, &mut prefix);
    search.best.unwrap().1
}

struct Search<'a> {
    adj: &'a [VertexSet],
    n: usize,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                let splitter =
                    VertexSet::from_vertices(self.n, cells[s].iter().copied()).expect("cell members are vertices");
                let mut next = Vec::with_capacity(cells.len());
                for cell in cells.drain(..) {
                    if cell.len() == 1 {
                        next.push(cell);
                        continue;
                    }
                    let mut keyed: Vec<(usize, usize)> =
                        cell.iter().map(|&v| (self.adj[v].intersection_len(&splitter), v)).collect();
                    keyed.sort_unstable();
                    if keyed.first().unwrap().0 == keyed.last().unwrap().0 {
                        next.push(cell);
                        continue;
                    }
                    changed = true;
                    let mut group = Vec::new();
                    let mut current = keyed[0].0;
                    for (k, v) in keyed {
                        if k != current {
                            next.push(std::mem::take(&mut group));
                            current = k;
                        }
                        group.push(v);
                    }
                    next.push(group);
                }
                cells = next;
                s += 1;
            }
            if !changed {
                return cells;
            }
        }
    }

    fn leaf_bits(&self, order: &[usize]) -> Vec<u64> {
        let n = self.n;
        let total = n * (n - 1) / 2;
        let mut bits = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for j in 1..n {
            let row = &self.adj[order[j]];
            for &oi in &order[..j] {
                if row.contains(oi) {
                    bits[k >> 6] |= 1 << (63 - (k & 63));
                }
                k += 1;
            }
        }
        bits
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut perm = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        if perm.iter().enumerate().any(|(i, &p)| i != p) {
            self.automorphisms.push(perm);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let bits = self.leaf_bits(&order);
        let Some(first) = &self.first else {
            self.first = Some((bits.clone(), order.clone()));
            self.best = Some((bits, order));
            return;
        };
        if bits == first.0 {
            let to = first.1.clone();
            self.record_automorphism(&order, &to);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match bits.cmp(&best.0) {
            std::cmp::Ordering::Greater => self.best = Some((bits, order)),
            std::cmp::Ordering::Equal => {
                let to = best.1.clone();
                self.record_automorphism(&order, &to);
            }
            std::cmp::Ordering::Less => {}
        }
    }

    /// Orbit representatives under automorphisms fixing `prefix` pointwise.
    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for perm in &self.automorphisms {
            if prefix.iter().any(|&p| perm[p] != p) {
                continue;
            }
            for (v, &w) in perm.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn visit(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        let target =
            cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut candidates = cells[t].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for w in candidates {
            if !tried.is_empty() && !self.automorphisms.is_empty() {
                let roots = self.orbit_roots(prefix);
                if tried.iter().any(|&u| roots[u] == roots[w]) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..t].iter().cloned());
            next.push(vec![w]);
            next.push(cells[t].iter().copied().filter(|&v| v != w).collect());
            next.extend(cells[t + 1..].iter().cloned());
            prefix.push(w);
            self.visit(next, prefix);
            prefix.pop();
            tried.push(w);
        }
    }
}
