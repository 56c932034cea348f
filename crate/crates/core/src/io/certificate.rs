use serde::{Deserialize, Serialize};

use crate::decomposition::{CdCertificate, CdStep, DecompositionTrace};
use crate::graph::{Graph, VertexSet};
use crate::matching::{is_dominating, CochordalClass, CochordalCover, EdgeSet};

/// A recorded invariant value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Count(usize),
}

/// One class of a co-chordal cover, by endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverClass {
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<(usize, usize)>,
}

/// Evidence for one invariant value, in the labels of the reported graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Two maximal independent sets of different sizes: not well-covered.
    UnequalMaximalSets {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },
    /// `N[by] ⊆ N[vertex]`: not CNS.
    Codominated {
        vertex: usize,
        by: usize,
    },
    Codismantling {
        certificate: CdCertificate,
    },
    Decomposition {
        trace: DecompositionTrace,
    },
    IndependentSet {
        vertices: Vec<usize>,
    },
    Matching {
        edges: Vec<(usize, usize)>,
    },
    InducedMatching {
        edges: Vec<(usize, usize)>,
    },
    DominatingSet {
        vertices: Vec<usize>,
    },
    CochordalCover {
        classes: Vec<CoverClass>,
    },
}

fn sorted_edge(map: &[usize], (u, v): (usize, usize)) -> (usize, usize) {
    let (a, b) = (map[u], map[v]);
    (a.min(b), a.max(b))
}

fn relabel_trace(t: &DecompositionTrace, map: &[usize]) -> DecompositionTrace {
    let sorted = |vs: &[usize]| {
        let mut out: Vec<usize> = vs.iter().map(|&v| map[v]).collect();
        out.sort_unstable();
        out
    };
    match t {
        DecompositionTrace::Edgeless { vertices } => DecompositionTrace::Edgeless { vertices: sorted(vertices) },
        DecompositionTrace::Shed { vertex, deletion, link } => DecompositionTrace::Shed {
            vertex: map[*vertex],
            deletion: Box::new(relabel_trace(deletion, map)),
            link: Box::new(relabel_trace(link, map)),
        },
        DecompositionTrace::Disjoint { parts } => {
            DecompositionTrace::Disjoint { parts: parts.iter().map(|p| relabel_trace(p, map)).collect() }
        }
    }
}

fn vertex_set(g: &Graph, vs: &[usize]) -> Result<VertexSet, String> {
    VertexSet::from_vertices(g.n(), vs.iter().copied()).map_err(|e| e.to_string())
}

fn independent(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

fn maximal_independent(g: &Graph, vs: &[usize]) -> Result<bool, String> {
    let s = vertex_set(g, vs)?;
    Ok(independent(g, vs) && g.closed_neighborhood(&s).map_err(|e| e.to_string())?.len() == g.n())
}

fn matching_ok(g: &Graph, edges: &[(usize, usize)], induced: bool) -> bool {
    let mut seen = VertexSet::new(g.n());
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || seen.contains(u) || seen.contains(v) {
            return false;
        }
        seen.insert(u);
        seen.insert(v);
    }
    !induced
        || edges.iter().enumerate().all(|(i, &(a, b))| {
            edges[i + 1..]
                .iter()
                .all(|&(c, d)| [(a, c), (a, d), (b, c), (b, d)].iter().all(|&(x, y)| !g.has_edge(x, y)))
        })
}

impl Certificate {
    /// Renames every vertex `v` to `map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Certificate {
        let vs = |vs: &[usize]| {
            let mut out: Vec<usize> = vs.iter().map(|&v| map[v]).collect();
            out.sort_unstable();
            out
        };
        let es = |es: &[(usize, usize)]| {
            let mut out: Vec<_> = es.iter().map(|&e| sorted_edge(map, e)).collect();
            out.sort_unstable();
            out
        };
        match self {
            Certificate::UnequalMaximalSets { smaller, larger } => {
                Certificate::UnequalMaximalSets { smaller: vs(smaller), larger: vs(larger) }
            }
            Certificate::Codominated { vertex, by } => Certificate::Codominated { vertex: map[*vertex], by: map[*by] },
            Certificate::Codismantling { certificate } => Certificate::Codismantling {
                certificate: CdCertificate {
                    steps: certificate
                        .steps
                        .iter()
                        .map(|s| CdStep { vertex: map[s.vertex], witness: map[s.witness] })
                        .collect(),
                    residual: vs(&certificate.residual),
                },
            },
            Certificate::Decomposition { trace } => Certificate::Decomposition { trace: relabel_trace(trace, map) },
            Certificate::IndependentSet { vertices } => Certificate::IndependentSet { vertices: vs(vertices) },
            Certificate::Matching { edges } => Certificate::Matching { edges: es(edges) },
            Certificate::InducedMatching { edges } => Certificate::InducedMatching { edges: es(edges) },
            Certificate::DominatingSet { vertices } => Certificate::DominatingSet { vertices: vs(vertices) },
            Certificate::CochordalCover { classes } => Certificate::CochordalCover {
                classes: classes
                    .iter()
                    .map(|c| CoverClass { edges: es(&c.edges), center: c.center.map(|e| sorted_edge(map, e)) })
                    .collect(),
            },
        }
    }

    /// Replays the certificate on `g` and checks that it supports `value`.
    pub fn check(&self, g: &Graph, value: Value) -> Result<(), String> {
        let n = g.n();
        let in_range = |vs: &[usize]| vs.iter().all(|&v| v < n);
        let expect = |want: Value| {
            if value == want {
                Ok(())
            } else {
                Err(format!("certificate shows {want:?}, report says {value:?}"))
            }
        };
        match self {
            Certificate::UnequalMaximalSets { smaller, larger } => {
                if !in_range(smaller) || !in_range(larger) || smaller.len() >= larger.len() {
                    return Err("sets out of range or not of different sizes".into());
                }
                if !maximal_independent(g, smaller)? || !maximal_independent(g, larger)? {
                    return Err("a set is not maximal independent".into());
                }
                expect(Value::Bool(false))
            }
            Certificate::Codominated { vertex, by } => {
                if *vertex >= n || *by >= n || vertex == by {
                    return Err("vertices out of range".into());
                }
                if !g.closed_neighbors(*by).is_subset(&g.closed_neighbors(*vertex)) {
                    return Err(format!("N[{by}] is not inside N[{vertex}]"));
                }
                expect(Value::Bool(false))
            }
            Certificate::Codismantling { certificate } => {
                certificate.verify(g).map_err(|e| e.to_string())?;
                expect(Value::Bool(true))
            }
            Certificate::Decomposition { trace } => {
                trace.replay(g).map_err(|e| e.to_string())?;
                expect(Value::Bool(true))
            }
            Certificate::IndependentSet { vertices } => {
                if !in_range(vertices) || !independent(g, vertices) {
                    return Err("not an independent set".into());
                }
                expect(Value::Count(vertices.len()))
            }
            Certificate::Matching { edges } | Certificate::InducedMatching { edges } => {
                let induced = matches!(self, Certificate::InducedMatching { .. });
                if !matching_ok(g, edges, induced) {
                    return Err(format!("not {} matching", if induced { "an induced" } else { "a" }));
                }
                expect(Value::Count(edges.len()))
            }
            Certificate::DominatingSet { vertices } => {
                if !is_dominating(g, &vertex_set(g, vertices)?) {
                    return Err("not a dominating set".into());
                }
                expect(Value::Count(vertices.len()))
            }
            Certificate::CochordalCover { classes } => {
                let cover = CochordalCover {
                    classes: classes
                        .iter()
                        .map(|c| {
                            EdgeSet::from_edges(g, &c.edges)
                                .map(|edges| CochordalClass { edges, center: c.center })
                                .ok_or_else(|| "class edge is not an edge of the graph".to_string())
                        })
                        .collect::<Result<_, _>>()?,
                };
                cover.verify(g)?;
                expect(Value::Count(classes.len()))
            }
        }
    }
}

impl Certificate {
    pub fn from_cover(g: &Graph, cover: &CochordalCover) -> Self {
        let edges = g.edges();
        Certificate::CochordalCover {
            classes: cover
                .classes
                .iter()
                .map(|k| CoverClass { edges: k.edges.endpoints(&edges), center: k.center })
                .collect(),
        }
    }
}
