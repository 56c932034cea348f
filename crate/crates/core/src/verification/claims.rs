//! Claim identifiers, their statements and their predicates.
//!
//! A predicate assumes its graph already passed the claim's base filter and
//! checks any remaining hypotheses itself, answering `Vacuous` when they
//! fail. `Err` means the route could not evaluate the graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{clique_whisker, gn_family, orphan, EdgeCliquePartition, Orphan};
use crate::graph::{is_chordal, Graph, VertexSet};
use crate::homology::Field;
use crate::matching::is_dominating;

use super::random::{random_clique_partition, random_dag, random_graph, random_poset};
use super::{slow, GraphFilter, Oracle};

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    COR_2_3,
    PROP_2_4,
    LEM_2_5,
    THM_2_6,
    PROP_2_7,
    COR_2_8,
    LEM_2_11,
    COR_EXTEN,
    PROP_LNK,
    PROP_WC_CNS,
    COR_CM_CNS,
    THM_TRI_UNMIXED,
    THM_GIRTH3_6,
    COR_BIP_VD,
    COR_VWC_VD,
    PROP_ORPHANS,
    THM_GI5,
    LEM_3_3,
    THM_3_4,
    COR_3_5,
    LEM_KR,
    PROP_IM_M,
    THM_3_8,
    PROP_DOUBLE_STAR,
    THM_CD_DOM,
    COR_CD_DOM,
    COR_ALLAN_LASKAR,
    PROP_REG_CD,
    THM_4_2,
    COR_4_3,
    THM_4_5,
    COR_4_6,
    BOUND_KATZMAN,
    BOUND_HVT,
    BOUND_WOODROOFE,
}

use ClaimId::*;

impl ClaimId {
    pub const ALL: [ClaimId; 35] = [
        COR_2_3,
        PROP_2_4,
        LEM_2_5,
        THM_2_6,
        PROP_2_7,
        COR_2_8,
        LEM_2_11,
        COR_EXTEN,
        PROP_LNK,
        PROP_WC_CNS,
        COR_CM_CNS,
        THM_TRI_UNMIXED,
        THM_GIRTH3_6,
        COR_BIP_VD,
        COR_VWC_VD,
        PROP_ORPHANS,
        THM_GI5,
        LEM_3_3,
        THM_3_4,
        COR_3_5,
        LEM_KR,
        PROP_IM_M,
        THM_3_8,
        PROP_DOUBLE_STAR,
        THM_CD_DOM,
        COR_CD_DOM,
        COR_ALLAN_LASKAR,
        PROP_REG_CD,
        THM_4_2,
        COR_4_3,
        THM_4_5,
        COR_4_6,
        BOUND_KATZMAN,
        BOUND_HVT,
        BOUND_WOODROOFE,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            COR_2_3 => "COR_2_3",
            PROP_2_4 => "PROP_2_4",
            LEM_2_5 => "LEM_2_5",
            THM_2_6 => "THM_2_6",
            PROP_2_7 => "PROP_2_7",
            COR_2_8 => "COR_2_8",
            LEM_2_11 => "LEM_2_11",
            COR_EXTEN => "COR_EXTEN",
            PROP_LNK => "PROP_LNK",
            PROP_WC_CNS => "PROP_WC_CNS",
            COR_CM_CNS => "COR_CM_CNS",
            THM_TRI_UNMIXED => "THM_TRI_UNMIXED",
            THM_GIRTH3_6 => "THM_GIRTH3_6",
            COR_BIP_VD => "COR_BIP_VD",
            COR_VWC_VD => "COR_VWC_VD",
            PROP_ORPHANS => "PROP_ORPHANS",
            THM_GI5 => "THM_GI5",
            LEM_3_3 => "LEM_3_3",
            THM_3_4 => "THM_3_4",
            COR_3_5 => "COR_3_5",
            LEM_KR => "LEM_KR",
            PROP_IM_M => "PROP_IM_M",
            THM_3_8 => "THM_3_8",
            PROP_DOUBLE_STAR => "PROP_DOUBLE_STAR",
            THM_CD_DOM => "THM_CD_DOM",
            COR_CD_DOM => "COR_CD_DOM",
            COR_ALLAN_LASKAR => "COR_ALLAN_LASKAR",
            PROP_REG_CD => "PROP_REG_CD",
            THM_4_2 => "THM_4_2",
            COR_4_3 => "COR_4_3",
            THM_4_5 => "THM_4_5",
            COR_4_6 => "COR_4_6",
            BOUND_KATZMAN => "BOUND_KATZMAN",
            BOUND_HVT => "BOUND_HVT",
            BOUND_WOODROOFE => "BOUND_WOODROOFE",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            COR_2_3 => "every chordal graph is codismantlable",
            PROP_2_4 => "a cd-set of a codismantlable graph is a minimal vertex cover",
            LEM_2_5 => "every codominated vertex is a shedding vertex",
            THM_2_6 => "in a (C4,C5)-free graph a vertex is shedding iff it is codominated",
            PROP_2_7 => "in a C5-free graph a shedding vertex with independent neighborhood is codominated",
            COR_2_8 => "a (C4,C5)-free vertex decomposable graph is codismantlable",
            LEM_2_11 => "if G is well-covered then so are G - N[I] for independent I and G - x for codominated x",
            COR_EXTEN => {
                "in a (C4,C5)-free well-covered graph, x is codominated iff no independent I in G - N[x] \
                 isolates x in G - N[I]"
            }
            PROP_LNK => "a (C4,C5,C7)-free well-covered G with G - N[x] codismantlable for some x is codismantlable",
            PROP_WC_CNS => "a (C4,C5,C7)-free CNS graph with an edge is not well-covered",
            COR_CM_CNS => "a (C4,C5,C7)-free CNS graph with an edge is not Cohen-Macaulay",
            THM_TRI_UNMIXED => "a (C4,C5,C7)-free well-covered codismantlable graph is vertex decomposable",
            THM_GIRTH3_6 => {
                "for (C4,C5,C7)-free well-covered graphs: vertex decomposable iff codismantlable iff Cohen-Macaulay"
            }
            COR_BIP_VD => "a bipartite vertex decomposable graph is codismantlable",
            COR_VWC_VD => {
                "for very well-covered graphs on 2n vertices of height n: vertex decomposable iff codismantlable \
                 iff Cohen-Macaulay"
            }
            PROP_ORPHANS => "C7, P10, P13, Q13 and P14 are not Cohen-Macaulay",
            THM_GI5 => "a well-covered graph of girth at least 5 is vertex decomposable iff Cohen-Macaulay",
            LEM_3_3 => "for codominated x: im(G - x) <= im(G) and im(G - N[x]) < im(G)",
            THM_3_4 => "a (C4,C5)-free vertex decomposable graph has reg = im",
            COR_3_5 => "a chordal graph has reg = im",
            LEM_KR => {
                "if G is connected with im = m > 1, every edge of a maximum induced matching is a pendant or \
                 triangle edge"
            }
            PROP_IM_M => "if im(G) = m(G) and y is a leaf at x, then im(G - x) = m(G - x) = im(G) - 1",
            THM_3_8 => "a graph with im = reg = m is codismantlable",
            PROP_DOUBLE_STAR => "a co-chordal subgraph of a graph of girth at least 5 is a star or a double star",
            THM_CD_DOM => {
                "for connected G of girth at least 5, the double stars on a set D of center edges cover E(G) \
                 iff D dominates L(G)"
            }
            COR_CD_DOM => "a connected graph of girth at least 5 has cochord = domination number of its line graph",
            COR_ALLAN_LASKAR => {
                "a connected graph of girth at least 5 with well-covered line graph has cochord = matching number"
            }
            PROP_REG_CD => "the girth-six graph G_n has cochord = reg + n",
            THM_4_2 => "the common-enemy graph of an acyclic digraph is vertex decomposable and codismantlable",
            COR_4_3 => "the upper-bound graph of a poset is vertex decomposable and codismantlable",
            THM_4_5 => "every clique-whiskering is vertex decomposable and codismantlable",
            COR_4_6 => "a clique-whiskering of a (C4,C5)-free graph has reg = im",
            BOUND_KATZMAN => "im <= reg",
            BOUND_HVT => "reg <= m",
            BOUND_WOODROOFE => "reg <= cochord",
        }
    }

    pub(crate) fn spec(self) -> ClaimSpec {
        let enumerated = |filter: GraphFilter, max_n: usize, predicate: Predicate| ClaimSpec {
            source: Source::Enumerated { filter, max_n },
            predicate,
        };
        let free = GraphFilter::free_of;
        let girth5 = || GraphFilter::default().with_min_girth(5);
        match self {
            COR_2_3 => enumerated(GraphFilter::default(), 7, cor_2_3),
            PROP_2_4 => enumerated(GraphFilter::default(), 7, prop_2_4),
            LEM_2_5 => enumerated(GraphFilter::default(), 7, lem_2_5),
            THM_2_6 => enumerated(free(&[4, 5]), 7, thm_2_6),
            PROP_2_7 => enumerated(free(&[5]), 7, prop_2_7),
            COR_2_8 => enumerated(free(&[4, 5]), 7, cor_2_8),
            LEM_2_11 => enumerated(GraphFilter::default().with_well_covered(), 7, lem_2_11),
            COR_EXTEN => enumerated(free(&[4, 5]).with_well_covered(), 7, cor_exten),
            PROP_LNK => enumerated(free(&[4, 5, 7]).with_well_covered(), 8, prop_lnk),
            PROP_WC_CNS => enumerated(free(&[4, 5, 7]), 7, prop_wc_cns),
            COR_CM_CNS => enumerated(free(&[4, 5, 7]), 7, cor_cm_cns),
            THM_TRI_UNMIXED => enumerated(free(&[4, 5, 7]).with_well_covered(), 8, thm_tri_unmixed),
            THM_GIRTH3_6 => enumerated(free(&[4, 5, 7]).with_well_covered().with_connected(), 8, thm_girth3_6),
            COR_BIP_VD => enumerated(free(&[3, 5, 7, 9]), 8, cor_bip_vd),
            COR_VWC_VD => enumerated(GraphFilter::default().with_well_covered().with_min_degree(1), 8, cor_vwc_vd),
            PROP_ORPHANS => ClaimSpec { source: Source::Fixed(orphan_items), predicate: prop_orphans },
            THM_GI5 => enumerated(girth5().with_well_covered().with_connected(), 9, thm_gi5),
            LEM_3_3 => enumerated(GraphFilter::default(), 7, lem_3_3),
            THM_3_4 => enumerated(free(&[4, 5]), 7, thm_3_4),
            COR_3_5 => enumerated(GraphFilter::default(), 7, cor_3_5),
            LEM_KR => enumerated(GraphFilter::connected(), 7, lem_kr),
            PROP_IM_M => enumerated(GraphFilter::default(), 7, prop_im_m),
            THM_3_8 => enumerated(GraphFilter::default(), 7, thm_3_8),
            PROP_DOUBLE_STAR => enumerated(girth5(), 9, prop_double_star),
            THM_CD_DOM => enumerated(girth5().with_connected(), 9, thm_cd_dom),
            COR_CD_DOM => enumerated(girth5().with_connected(), 9, cor_cd_dom),
            COR_ALLAN_LASKAR => enumerated(girth5().with_connected(), 9, cor_allan_laskar),
            PROP_REG_CD => ClaimSpec { source: Source::Fixed(gn_items), predicate: prop_reg_cd },
            THM_4_2 => ClaimSpec {
                source: Source::Sampled { kind: SampleKind::AcyclicDigraph, count: 1000, max_n: 12 },
                predicate: vd_and_cd,
            },
            COR_4_3 => ClaimSpec {
                source: Source::Sampled { kind: SampleKind::Poset, count: 1000, max_n: 10 },
                predicate: vd_and_cd,
            },
            THM_4_5 => ClaimSpec {
                source: Source::Sampled { kind: SampleKind::Whiskering, count: 500, max_n: 8 },
                predicate: vd_and_cd,
            },
            COR_4_6 => enumerated(free(&[4, 5]), 6, cor_4_6),
            BOUND_KATZMAN => enumerated(GraphFilter::default(), 7, bound_katzman),
            BOUND_HVT => enumerated(GraphFilter::default(), 7, bound_hvt),
            BOUND_WOODROOFE => enumerated(GraphFilter::default(), 7, bound_woodroofe),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown claim id {0:?}")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, UnknownClaim> {
        ClaimId::ALL.into_iter().find(|c| c.as_str().eq_ignore_ascii_case(s)).ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Vacuous,
    Holds,
    Violated(String),
}

/// `Err` carries the reason a route could not evaluate the graph.
pub type Check = Result<Outcome, String>;

pub(crate) type Predicate = fn(&Graph, &dyn Oracle) -> Check;

pub(crate) struct ClaimSpec {
    pub source: Source,
    pub predicate: Predicate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SampleKind {
    AcyclicDigraph,
    Poset,
    Whiskering,
}

pub(crate) enum Source {
    Enumerated { filter: GraphFilter, max_n: usize },
    Sampled { kind: SampleKind, count: usize, max_n: usize },
    Fixed(fn() -> Vec<Item>),
}

/// A graph of a universe with a note on where it came from.
#[derive(Clone, Debug)]
pub(crate) struct Item {
    pub graph: Graph,
    pub origin: Option<String>,
}

impl SampleKind {
    pub fn describe(self) -> &'static str {
        match self {
            SampleKind::AcyclicDigraph => "common-enemy graphs of random acyclic digraphs",
            SampleKind::Poset => "upper-bound graphs of random posets",
            SampleKind::Whiskering => "random clique-whiskerings G^Pi",
        }
    }

    pub fn sample<R: rand::Rng>(self, rng: &mut R, max_n: usize) -> Item {
        use crate::constructions::{common_enemy, upper_bound_graph};
        match self {
            SampleKind::AcyclicDigraph => {
                let d = random_dag(rng, max_n);
                Item { graph: common_enemy(&d), origin: Some(format!("digraph n={} arcs={:?}", d.n(), d.arcs())) }
            }
            SampleKind::Poset => {
                let p = random_poset(rng, max_n);
                Item {
                    graph: upper_bound_graph(&p),
                    origin: Some(format!("poset n={} covers={:?}", p.n(), p.covers())),
                }
            }
            SampleKind::Whiskering => {
                let n = rng.gen_range(1..=max_n);
                let p = rng.gen_range(0.2..0.8);
                let g = random_graph(rng, n, p);
                let pi = random_clique_partition(rng, &g);
                Item {
                    graph: clique_whisker(&g, &pi),
                    origin: Some(format!("host n={n} edges={:?} classes={:?}", g.edges(), pi.classes())),
                }
            }
        }
    }
}

fn orphan_items() -> Vec<Item> {
    Orphan::ALL
        .into_iter()
        .map(|o| Item { graph: orphan(o).expect("bundled data validates"), origin: Some(o.name().to_string()) })
        .collect()
}

/// `G_1` only: the regularity of `G_2` is beyond the Betti cap.
fn gn_items() -> Vec<Item> {
    vec![Item { graph: gn_family(1).expect("n >= 1"), origin: Some("G_1".to_string()) }]
}

fn verdict(ok: bool, why: impl FnOnce() -> String) -> Check {
    Ok(if ok { Outcome::Holds } else { Outcome::Violated(why()) })
}

fn vacuous() -> Check {
    Ok(Outcome::Vacuous)
}

fn reg(o: &dyn Oracle, g: &Graph, field: Field) -> Result<usize, String> {
    o.regularity(g, field).ok_or_else(|| format!("regularity over {field} beyond the cap"))
}

fn cochord(o: &dyn Oracle, g: &Graph) -> Result<usize, String> {
    o.cochord(g).ok_or_else(|| "cochord beyond this route's limit".to_string())
}

/// Drops `N[set]`; empty results are reported as `None`.
fn link(g: &Graph, set: &[usize]) -> Option<Graph> {
    let u = VertexSet::from_vertices(g.n(), set.iter().copied()).expect("ids in range");
    let h = g.remove_closed_neighborhood(&u).expect("ids in range").graph;
    (h.n() > 0).then_some(h)
}

fn delete(g: &Graph, x: usize) -> Option<Graph> {
    let h = g.remove_vertex(x).expect("id in range").graph;
    (h.n() > 0).then_some(h)
}

fn codominated(g: &Graph, o: &dyn Oracle) -> Vec<usize> {
    (0..g.n()).filter(|&x| o.codominated(g, x)).collect()
}

fn is_cns(g: &Graph, o: &dyn Oracle) -> bool {
    codominated(g, o).is_empty()
}

/// Every `(name, value)` pair carries the same value.
fn all_equal(values: &[(&str, bool)]) -> Check {
    verdict(values.iter().all(|v| v.1 == values[0].1), || {
        values.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
    })
}

fn cm_both(g: &Graph, o: &dyn Oracle) -> [(&'static str, bool); 2] {
    [("cm_gf2", o.cohen_macaulay(g, Field::Gf2)), ("cm_q", o.cohen_macaulay(g, Field::Rational))]
}

fn cor_2_3(g: &Graph, o: &dyn Oracle) -> Check {
    if !is_chordal(g) {
        return vacuous();
    }
    verdict(o.codismantlable(g), || "chordal but not codismantlable".into())
}

fn prop_2_4(g: &Graph, o: &dyn Oracle) -> Check {
    match o.cd_set(g) {
        None => vacuous(),
        Some(s) => {
            verdict(slow::is_minimal_vertex_cover(g, &s), || format!("cd-set {s:?} is not a minimal vertex cover"))
        }
    }
}

fn lem_2_5(g: &Graph, o: &dyn Oracle) -> Check {
    let cod = codominated(g, o);
    if cod.is_empty() {
        return vacuous();
    }
    let bad: Vec<_> = cod.into_iter().filter(|&x| !o.shedding(g, x)).collect();
    verdict(bad.is_empty(), || format!("codominated but not shedding: {bad:?}"))
}

fn thm_2_6(g: &Graph, o: &dyn Oracle) -> Check {
    let bad: Vec<_> = (0..g.n()).filter(|&x| o.shedding(g, x) != o.codominated(g, x)).collect();
    verdict(bad.is_empty(), || format!("shedding and codominated differ at {bad:?}"))
}

fn prop_2_7(g: &Graph, o: &dyn Oracle) -> Check {
    let cands: Vec<usize> = (0..g.n())
        .filter(|&x| {
            let nx: Vec<usize> = g.neighbors(x).iter().collect();
            nx.iter().all(|&a| nx.iter().all(|&b| !g.has_edge(a, b))) && o.shedding(g, x)
        })
        .collect();
    if cands.is_empty() {
        return vacuous();
    }
    let bad: Vec<_> = cands.into_iter().filter(|&x| !o.codominated(g, x)).collect();
    verdict(bad.is_empty(), || format!("shedding, independent neighborhood, not codominated: {bad:?}"))
}

fn cor_2_8(g: &Graph, o: &dyn Oracle) -> Check {
    if !o.vertex_decomposable(g) {
        return vacuous();
    }
    verdict(o.codismantlable(g), || "vertex decomposable but not codismantlable".into())
}

fn lem_2_11(g: &Graph, o: &dyn Oracle) -> Check {
    for i in slow::independent_sets(g) {
        if let Some(h) = link(g, &i) {
            if !o.well_covered(&h) {
                return verdict(false, || format!("G - N[{i:?}] is not well-covered"));
            }
        }
    }
    for x in codominated(g, o) {
        if let Some(h) = delete(g, x) {
            if !o.well_covered(&h) {
                return verdict(false, || format!("G - {x} is not well-covered for codominated {x}"));
            }
        }
    }
    Ok(Outcome::Holds)
}

fn cor_exten(g: &Graph, o: &dyn Oracle) -> Check {
    let n = g.n();
    let sets = slow::independent_sets(g);
    for x in 0..n {
        let nx = g.closed_neighbors(x);
        let open = g.neighbors(x);
        let isolating = sets.iter().any(|i| {
            if i.iter().any(|&v| nx.contains(v)) {
                return false;
            }
            let mut reach = VertexSet::new(n);
            for &v in i {
                reach.union_with(g.neighbors(v));
            }
            open.is_subset(&reach)
        });
        if o.codominated(g, x) == isolating {
            return verdict(false, || {
                format!("vertex {x}: codominated={} isolating set exists={isolating}", !isolating)
            });
        }
    }
    Ok(Outcome::Holds)
}

fn prop_lnk(g: &Graph, o: &dyn Oracle) -> Check {
    let witness = (0..g.n()).find(|&x| link(g, &[x]).is_none_or(|h| o.codismantlable(&h)));
    match witness {
        None => vacuous(),
        Some(x) => verdict(o.codismantlable(g), || format!("G - N[{x}] is codismantlable but G is not")),
    }
}

fn prop_wc_cns(g: &Graph, o: &dyn Oracle) -> Check {
    if g.edge_count() == 0 || !is_cns(g, o) {
        return vacuous();
    }
    verdict(!o.well_covered(g), || "CNS with an edge and well-covered".into())
}

fn cor_cm_cns(g: &Graph, o: &dyn Oracle) -> Check {
    if g.edge_count() == 0 || !is_cns(g, o) {
        return vacuous();
    }
    let cm = cm_both(g, o);
    verdict(cm.iter().all(|c| !c.1), || format!("CNS with an edge and Cohen-Macaulay: {cm:?}"))
}

fn thm_tri_unmixed(g: &Graph, o: &dyn Oracle) -> Check {
    if !o.codismantlable(g) {
        return vacuous();
    }
    verdict(o.vertex_decomposable(g), || "codismantlable but not vertex decomposable".into())
}

fn vd_cd_cm(g: &Graph, o: &dyn Oracle) -> Check {
    let [gf2, q] = cm_both(g, o);
    all_equal(&[("vd", o.vertex_decomposable(g)), ("cd", o.codismantlable(g)), gf2, q])
}

fn thm_girth3_6(g: &Graph, o: &dyn Oracle) -> Check {
    vd_cd_cm(g, o)
}

fn cor_bip_vd(g: &Graph, o: &dyn Oracle) -> Check {
    if !g.is_bipartite() {
        return vacuous();
    }
    cor_2_8(g, o)
}

fn cor_vwc_vd(g: &Graph, o: &dyn Oracle) -> Check {
    let n = g.n();
    let very = n.is_multiple_of(2)
        && (0..n).all(|v| g.degree(v) > 0)
        && o.well_covered(g)
        && slow::independence_number(g) * 2 == n;
    if !very {
        return vacuous();
    }
    vd_cd_cm(g, o)
}

fn prop_orphans(g: &Graph, o: &dyn Oracle) -> Check {
    let cm = cm_both(g, o);
    verdict(cm.iter().all(|c| !c.1), || format!("Cohen-Macaulay: {cm:?}"))
}

fn thm_gi5(g: &Graph, o: &dyn Oracle) -> Check {
    let [gf2, q] = cm_both(g, o);
    all_equal(&[("vd", o.vertex_decomposable(g)), gf2, q])
}

fn lem_3_3(g: &Graph, o: &dyn Oracle) -> Check {
    let cod = codominated(g, o);
    if cod.is_empty() {
        return vacuous();
    }
    let im = o.induced_matching_number(g);
    let im_of = |h: Option<Graph>| h.map_or(0, |h| o.induced_matching_number(&h));
    for x in cod {
        let (a, b) = (im_of(delete(g, x)), im_of(link(g, &[x])));
        if a > im || b >= im {
            return verdict(false, || format!("x={x}: im(G)={im}, im(G-x)={a}, im(G-N[x])={b}"));
        }
    }
    Ok(Outcome::Holds)
}

fn reg_equals_im(g: &Graph, o: &dyn Oracle) -> Check {
    let im = o.induced_matching_number(g);
    for field in Field::ALL {
        let r = reg(o, g, field)?;
        if r != im {
            return verdict(false, || format!("reg over {field} is {r}, im is {im}"));
        }
    }
    Ok(Outcome::Holds)
}

fn thm_3_4(g: &Graph, o: &dyn Oracle) -> Check {
    if !o.vertex_decomposable(g) {
        return vacuous();
    }
    reg_equals_im(g, o)
}

fn cor_3_5(g: &Graph, o: &dyn Oracle) -> Check {
    if !is_chordal(g) {
        return vacuous();
    }
    reg_equals_im(g, o)
}

fn lem_kr(g: &Graph, o: &dyn Oracle) -> Check {
    let im = o.induced_matching_number(g);
    if im <= 1 || im != o.matching_number(g) {
        return vacuous();
    }
    for (u, v) in g.edges() {
        // The edge extends to a maximum one iff im(G - N[u] - N[v]) = im - 1.
        let mut closed = g.closed_neighbors(u);
        closed.union_with(&g.closed_neighbors(v));
        let rest = g.induced(&closed.complement()).graph;
        let in_maximum = 1 + if rest.n() == 0 { 0 } else { o.induced_matching_number(&rest) } == im;
        if !in_maximum {
            continue;
        }
        let pendant = g.degree(u) == 1 || g.degree(v) == 1;
        let triangle = g.neighbors(u).iter().any(|w| g.has_edge(v, w));
        if !pendant && !triangle {
            return verdict(false, || format!("edge {u}-{v} lies in a maximum induced matching"));
        }
    }
    Ok(Outcome::Holds)
}

fn prop_im_m(g: &Graph, o: &dyn Oracle) -> Check {
    let im = o.induced_matching_number(g);
    if im != o.matching_number(g) {
        return vacuous();
    }
    let supports: Vec<usize> = (0..g.n()).filter(|&x| g.neighbors(x).iter().any(|y| g.degree(y) == 1)).collect();
    if supports.is_empty() {
        return vacuous();
    }
    for x in supports {
        let h = delete(g, x);
        let (a, b) = h.map_or((0, 0), |h| (o.induced_matching_number(&h), o.matching_number(&h)));
        if a != b || a + 1 != im {
            return verdict(false, || format!("x={x}: im(G)={im}, im(G-x)={a}, m(G-x)={b}"));
        }
    }
    Ok(Outcome::Holds)
}

fn thm_3_8(g: &Graph, o: &dyn Oracle) -> Check {
    let (im, m) = (o.induced_matching_number(g), o.matching_number(g));
    if im != m {
        return vacuous();
    }
    let mut applies = false;
    for field in Field::ALL {
        applies |= reg(o, g, field)? == im;
    }
    if !applies {
        return vacuous();
    }
    verdict(o.codismantlable(g), || format!("im = reg = m = {im} but not codismantlable"))
}

/// Edge subsets of `g` as masks over `g.edges()`; at most 16 edges.
fn edge_subsets(g: &Graph) -> Result<(Vec<(usize, usize)>, u32), String> {
    let edges = g.edges();
    if edges.len() > 16 {
        return Err(format!("{} edges; subsets are enumerated up to 16", edges.len()));
    }
    let count = 1u32 << edges.len();
    Ok((edges, count))
}

fn spanning(g: &Graph, edges: &[(usize, usize)], mask: u32) -> Graph {
    let sub: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
    Graph::from_edges(g.n(), &sub).expect("ids in range")
}

fn is_star_or_double_star(edges: &[(usize, usize)]) -> bool {
    let touches = |e: &(usize, usize), v: usize| e.0 == v || e.1 == v;
    let star = |c: usize| edges.iter().all(|e| touches(e, c));
    let (a, b) = edges[0];
    star(a) || star(b) || edges.iter().any(|&(u, v)| edges.iter().all(|e| touches(e, u) || touches(e, v)))
}

fn prop_double_star(g: &Graph, _: &dyn Oracle) -> Check {
    let (edges, count) = edge_subsets(g)?;
    for mask in 1..count {
        let h = spanning(g, &edges, mask);
        if is_chordal(&h.complement()) {
            let e = h.edges();
            if !is_star_or_double_star(&e) {
                return verdict(false, || format!("co-chordal subgraph {e:?}"));
            }
        }
    }
    Ok(Outcome::Holds)
}

fn thm_cd_dom(g: &Graph, _: &dyn Oracle) -> Check {
    let (edges, count) = edge_subsets(g)?;
    let m = edges.len();
    let line = g.line_graph();
    // The double star on center edge i, as a mask of edges.
    let stars: Vec<u32> = edges
        .iter()
        .map(|&(a, b)| {
            (0..m).filter(|&j| [a, b].contains(&edges[j].0) || [a, b].contains(&edges[j].1)).fold(0, |s, j| s | 1 << j)
        })
        .collect();
    for (i, &s) in stars.iter().enumerate() {
        if !is_chordal(&spanning(g, &edges, s).complement()) {
            return verdict(false, || format!("double star on {:?} is not co-chordal", edges[i]));
        }
    }
    for d in 0..count {
        let cover = (0..m).filter(|i| d >> i & 1 == 1).fold(0u32, |acc, i| acc | stars[i]) == count - 1;
        let set = VertexSet::from_vertices(m, (0..m).filter(|i| d >> i & 1 == 1)).expect("ids in range");
        if cover != is_dominating(&line.graph, &set) {
            return verdict(false, || format!("center edges {set:?}: cover={cover}, dominating={}", !cover));
        }
    }
    Ok(Outcome::Holds)
}

fn gamma_of_line(g: &Graph, o: &dyn Oracle) -> usize {
    o.domination_number(&g.line_graph().graph)
}

fn cor_cd_dom(g: &Graph, o: &dyn Oracle) -> Check {
    if g.edge_count() == 0 {
        return vacuous();
    }
    let c = cochord(o, g)?;
    let gamma = gamma_of_line(g, o);
    let second = o.cochord_girth5(g);
    verdict(c == gamma && second.is_none_or(|s| s == c), || {
        format!("cochord={c}, girth-five engine={second:?}, gamma(L(G))={gamma}")
    })
}

fn cor_allan_laskar(g: &Graph, o: &dyn Oracle) -> Check {
    if g.edge_count() == 0 || !o.well_covered(&g.line_graph().graph) {
        return vacuous();
    }
    let (c, m) = (cochord(o, g)?, o.matching_number(g));
    verdict(c == m, || format!("cochord={c}, m={m}"))
}

fn prop_reg_cd(g: &Graph, o: &dyn Oracle) -> Check {
    let n = g.n() / 12;
    let c = cochord(o, g)?;
    for field in Field::ALL {
        let r = reg(o, g, field)?;
        if c != r + n {
            return verdict(false, || format!("cochord={c}, reg over {field}={r}, n={n}"));
        }
    }
    Ok(Outcome::Holds)
}

fn vd_and_cd(g: &Graph, o: &dyn Oracle) -> Check {
    let (vd, cd) = (o.vertex_decomposable(g), o.codismantlable(g));
    verdict(vd && cd, || format!("vd={vd}, cd={cd}"))
}

/// Whiskerings larger than this are left out of the default universe.
const WHISKER_LIMIT: usize = 16;

/// Partitions tried per host: `E(G)` and one greedy maximal-clique
/// partition, kept when the whiskering has at most `WHISKER_LIMIT` vertices.
fn host_partitions(g: &Graph) -> Vec<EdgeCliquePartition> {
    let mut out = vec![EdgeCliquePartition::edges_of(g)];
    let mut remaining = g.edges();
    let mut classes = Vec::new();
    while let Some(&(u, v)) = remaining.first() {
        let mut clique = vec![u, v];
        for w in 0..g.n() {
            if !clique.contains(&w) && clique.iter().all(|&c| remaining.contains(&(c.min(w), c.max(w)))) {
                clique.push(w);
            }
        }
        remaining.retain(|&(a, b)| !(clique.contains(&a) && clique.contains(&b)));
        clique.sort_unstable();
        classes.push(clique);
    }
    let greedy = EdgeCliquePartition::new(g, classes).expect("greedy classes partition the edges");
    if greedy != out[0] {
        out.push(greedy);
    }
    out.retain(|pi| g.n() + pi.len() <= WHISKER_LIMIT);
    out
}

fn cor_4_6(g: &Graph, o: &dyn Oracle) -> Check {
    let parts = host_partitions(g);
    if parts.is_empty() {
        return vacuous();
    }
    for pi in parts {
        let w = clique_whisker(g, &pi);
        if let Ok(Outcome::Violated(d)) = reg_equals_im(&w, o) {
            return verdict(false, || format!("classes {:?}: {d}", pi.classes()));
        }
        reg_equals_im(&w, o)?;
    }
    Ok(Outcome::Holds)
}

fn bound_katzman(g: &Graph, o: &dyn Oracle) -> Check {
    let im = o.induced_matching_number(g);
    for field in Field::ALL {
        let r = reg(o, g, field)?;
        if im > r {
            return verdict(false, || format!("im={im} > reg over {field}={r}"));
        }
    }
    Ok(Outcome::Holds)
}

fn bound_hvt(g: &Graph, o: &dyn Oracle) -> Check {
    let m = o.matching_number(g);
    for field in Field::ALL {
        let r = reg(o, g, field)?;
        if r > m {
            return verdict(false, || format!("reg over {field}={r} > m={m}"));
        }
    }
    Ok(Outcome::Holds)
}

fn bound_woodroofe(g: &Graph, o: &dyn Oracle) -> Check {
    let c = cochord(o, g)?;
    for field in Field::ALL {
        let r = reg(o, g, field)?;
        if r > c {
            return verdict(false, || format!("reg over {field}={r} > cochord={c}"));
        }
    }
    Ok(Outcome::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path, star};
    use crate::verification::{FastOracle, SlowOracle};

    #[test]
    fn ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.as_str()));
            assert!(!c.statement().is_empty());
        }
        assert!("THM_9_9".parse::<ClaimId>().is_err());
    }

    #[test]
    fn shapes() {
        assert!(is_star_or_double_star(&star(4).unwrap().edges()));
        assert!(is_star_or_double_star(&path(4).unwrap().edges()));
        assert!(!is_star_or_double_star(&path(5).unwrap().edges()));
        assert!(!is_star_or_double_star(&[(0, 1), (2, 3)]));
    }

    #[test]
    fn predicates_fire_on_known_graphs() {
        let (fast, slow) = (FastOracle::default(), SlowOracle);
        let c6 = cycle(6).unwrap();
        for o in [&fast as &dyn Oracle, &slow] {
            // C6 is CNS with an edge and not Cohen-Macaulay.
            assert_eq!(cor_cm_cns(&c6, o), Ok(Outcome::Holds));
            assert_eq!(cor_2_3(&c6, o), Ok(Outcome::Vacuous));
            assert_eq!(cor_2_3(&path(5).unwrap(), o), Ok(Outcome::Holds));
            assert_eq!(lem_kr(&path(2).unwrap(), o), Ok(Outcome::Vacuous));
        }
    }
}
