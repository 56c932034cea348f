use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::decomposition::{codominated_vertices, DecompositionEngine};
use crate::graph::{canonical_form_and_labeling, girth, Girth, Graph};
use crate::homology::{Field, HomologyEngine, DEFAULT_BETTI_CAP};
use crate::independence::{independence_complex, is_very_well_covered, maximal_independent_sets};
use crate::matching::{
    cochordal_cover_number, maximum_independent_set, maximum_induced_matching, maximum_matching, minimum_dominating_set,
};

use super::cache::{CacheKey, ResultCache};
use super::certificate::{Certificate, Value};
use super::{emit_graph6, parse_graph6};

/// Bumped whenever a field of [`InvariantReport`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    WellCovered,
    VeryWellCovered,
    Cns,
    Codismantlable,
    VertexDecomposable,
    CohenMacaulay,
    SequentiallyCm,
    Alpha,
    Matching,
    InducedMatching,
    Domination,
    Cochord,
    Regularity,
}

impl Invariant {
    pub const ALL: [Invariant; 13] = [
        Invariant::WellCovered,
        Invariant::VeryWellCovered,
        Invariant::Cns,
        Invariant::Codismantlable,
        Invariant::VertexDecomposable,
        Invariant::CohenMacaulay,
        Invariant::SequentiallyCm,
        Invariant::Alpha,
        Invariant::Matching,
        Invariant::InducedMatching,
        Invariant::Domination,
        Invariant::Cochord,
        Invariant::Regularity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::WellCovered => "well_covered",
            Invariant::VeryWellCovered => "very_well_covered",
            Invariant::Cns => "cns",
            Invariant::Codismantlable => "codismantlable",
            Invariant::VertexDecomposable => "vertex_decomposable",
            Invariant::CohenMacaulay => "cohen_macaulay",
            Invariant::SequentiallyCm => "sequentially_cm",
            Invariant::Alpha => "alpha",
            Invariant::Matching => "matching",
            Invariant::InducedMatching => "induced_matching",
            Invariant::Domination => "domination",
            Invariant::Cochord => "cochord",
            Invariant::Regularity => "regularity",
        }
    }

    pub fn per_field(self) -> bool {
        matches!(self, Invariant::CohenMacaulay | Invariant::SequentiallyCm | Invariant::Regularity)
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown invariant {0:?}")]
pub struct UnknownInvariant(pub String);

impl FromStr for Invariant {
    type Err = UnknownInvariant;

    fn from_str(s: &str) -> Result<Self, UnknownInvariant> {
        let s = s.trim().replace('-', "_");
        match s.as_str() {
            "im" => return Ok(Invariant::InducedMatching),
            "reg" => return Ok(Invariant::Regularity),
            "cm" => return Ok(Invariant::CohenMacaulay),
            "scm" => return Ok(Invariant::SequentiallyCm),
            "vd" => return Ok(Invariant::VertexDecomposable),
            "cd" => return Ok(Invariant::Codismantlable),
            "wc" => return Ok(Invariant::WellCovered),
            _ => {}
        }
        Invariant::ALL.into_iter().find(|i| i.name() == s).ok_or(UnknownInvariant(s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputId {
    /// SHA-256 of the canonical form, hex.
    pub hash: String,
    pub graph6: String,
}

/// Everything computed for one graph. Absent entries were not requested or
/// could not be computed (see `skipped`); per-field entries are keyed by
/// field tag.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub input: InputId,
    pub n: usize,
    /// Number of edges.
    pub m: usize,
    pub girth: Girth,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub well_covered: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub very_well_covered: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cns: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codismantlable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_decomposable: Option<bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cohen_macaulay: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sequentially_cm: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    /// Matching number.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub induced_matching: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domination: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cochord: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub regularity: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub certificates: BTreeMap<String, Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub timings_ms: BTreeMap<String, f64>,
    pub version: String,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub fields: Vec<Field>,
    /// `None` computes everything.
    pub only: Option<Vec<Invariant>>,
    pub betti_cap: usize,
    /// Replay certificates of cache hits before using them.
    pub paranoid: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { fields: Field::ALL.to_vec(), only: None, betti_cap: DEFAULT_BETTI_CAP, paranoid: false }
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Hash of the canonical form and the map from input labels to canonical
/// positions.
pub fn canonical_id(g: &Graph) -> (String, Vec<usize>) {
    let (form, order) = canonical_form_and_labeling(g);
    let mut to_canon = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        to_canon[v] = pos;
    }
    (hex(&Sha256::digest(form.as_bytes())), to_canon)
}

struct Computed {
    value: Value,
    certificate: Option<Certificate>,
}

struct Engines {
    decomposition: DecompositionEngine,
    homology: BTreeMap<&'static str, HomologyEngine>,
}

fn compute(g: &Graph, inv: Invariant, field: Option<Field>, cap: usize, e: &Engines) -> Result<Computed, String> {
    let plain = |value| Ok(Computed { value, certificate: None });
    let with = |value, c| Ok(Computed { value, certificate: Some(c) });
    let homology = || &e.homology[field.expect("per-field invariant").tag()];
    match inv {
        Invariant::WellCovered => {
            let sets = maximal_independent_sets(g);
            let small = sets.iter().min_by_key(|s| s.len());
            let large = sets.iter().max_by_key(|s| s.len());
            match (small, large) {
                (Some(a), Some(b)) if a.len() < b.len() => with(
                    Value::Bool(false),
                    Certificate::UnequalMaximalSets { smaller: a.iter().collect(), larger: b.iter().collect() },
                ),
                _ => plain(Value::Bool(true)),
            }
        }
        Invariant::VeryWellCovered => plain(Value::Bool(is_very_well_covered(g))),
        Invariant::Cns => match codominated_vertices(g).first() {
            Some(&(vertex, by)) => with(Value::Bool(false), Certificate::Codominated { vertex, by }),
            None => plain(Value::Bool(true)),
        },
        Invariant::Codismantlable => match e.decomposition.codismantle(g) {
            Some(certificate) => with(Value::Bool(true), Certificate::Codismantling { certificate }),
            None => plain(Value::Bool(false)),
        },
        Invariant::VertexDecomposable => match e.decomposition.vertex_decomposition(g) {
            Some(trace) => with(Value::Bool(true), Certificate::Decomposition { trace }),
            None => plain(Value::Bool(false)),
        },
        Invariant::CohenMacaulay => plain(Value::Bool(homology().is_cohen_macaulay(g))),
        Invariant::SequentiallyCm => plain(Value::Bool(homology().is_sequentially_cm(g))),
        Invariant::Alpha => {
            let s: Vec<usize> = maximum_independent_set(g).iter().collect();
            with(Value::Count(s.len()), Certificate::IndependentSet { vertices: s })
        }
        Invariant::Matching => {
            let m = maximum_matching(g);
            with(Value::Count(m.len()), Certificate::Matching { edges: m })
        }
        Invariant::InducedMatching => {
            let m = maximum_induced_matching(g);
            with(Value::Count(m.len()), Certificate::InducedMatching { edges: m })
        }
        Invariant::Domination => {
            let d: Vec<usize> = minimum_dominating_set(g).iter().collect();
            with(Value::Count(d.len()), Certificate::DominatingSet { vertices: d })
        }
        Invariant::Cochord => {
            let (k, cover) = cochordal_cover_number(g);
            with(Value::Count(k), Certificate::from_cover(g, &cover))
        }
        Invariant::Regularity => match homology().regularity(g, cap) {
            Ok(r) => plain(Value::Count(r)),
            Err(e) => Err(e.to_string()),
        },
    }
}

impl InvariantReport {
    fn empty(g: &Graph, hash: String) -> Self {
        InvariantReport {
            schema: SCHEMA_VERSION,
            input: InputId { hash, graph6: emit_graph6(g) },
            n: g.n(),
            m: g.edge_count(),
            girth: girth(g),
            well_covered: None,
            very_well_covered: None,
            cns: None,
            codismantlable: None,
            vertex_decomposable: None,
            cohen_macaulay: BTreeMap::new(),
            sequentially_cm: BTreeMap::new(),
            alpha: None,
            matching: None,
            induced_matching: None,
            domination: None,
            cochord: None,
            regularity: BTreeMap::new(),
            certificates: BTreeMap::new(),
            skipped: Vec::new(),
            timings_ms: BTreeMap::new(),
            version: VERSION.to_string(),
        }
    }

    fn record(&mut self, inv: Invariant, field: Option<Field>, value: Value) {
        let tag = || field.expect("per-field invariant").tag().to_string();
        match (inv, value) {
            (Invariant::WellCovered, Value::Bool(b)) => self.well_covered = Some(b),
            (Invariant::VeryWellCovered, Value::Bool(b)) => self.very_well_covered = Some(b),
            (Invariant::Cns, Value::Bool(b)) => self.cns = Some(b),
            (Invariant::Codismantlable, Value::Bool(b)) => self.codismantlable = Some(b),
            (Invariant::VertexDecomposable, Value::Bool(b)) => self.vertex_decomposable = Some(b),
            (Invariant::CohenMacaulay, Value::Bool(b)) => {
                self.cohen_macaulay.insert(tag(), b);
            }
            (Invariant::SequentiallyCm, Value::Bool(b)) => {
                self.sequentially_cm.insert(tag(), b);
            }
            (Invariant::Alpha, Value::Count(k)) => self.alpha = Some(k),
            (Invariant::Matching, Value::Count(k)) => self.matching = Some(k),
            (Invariant::InducedMatching, Value::Count(k)) => self.induced_matching = Some(k),
            (Invariant::Domination, Value::Count(k)) => self.domination = Some(k),
            (Invariant::Cochord, Value::Count(k)) => self.cochord = Some(k),
            (Invariant::Regularity, Value::Count(k)) => {
                self.regularity.insert(tag(), k);
            }
            (inv, v) => panic!("{inv} cannot hold {v:?}"),
        }
    }

    /// The recorded value of a field-free invariant.
    pub fn value(&self, inv: Invariant) -> Option<Value> {
        match inv {
            Invariant::WellCovered => self.well_covered.map(Value::Bool),
            Invariant::VeryWellCovered => self.very_well_covered.map(Value::Bool),
            Invariant::Cns => self.cns.map(Value::Bool),
            Invariant::Codismantlable => self.codismantlable.map(Value::Bool),
            Invariant::VertexDecomposable => self.vertex_decomposable.map(Value::Bool),
            Invariant::Alpha => self.alpha.map(Value::Count),
            Invariant::Matching => self.matching.map(Value::Count),
            Invariant::InducedMatching => self.induced_matching.map(Value::Count),
            Invariant::Domination => self.domination.map(Value::Count),
            Invariant::Cochord => self.cochord.map(Value::Count),
            Invariant::CohenMacaulay | Invariant::SequentiallyCm | Invariant::Regularity => None,
        }
    }

    /// JSON without timings; cold and warm cache runs agree on it.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timings_ms.clear();
        serde_json::to_string_pretty(&r).expect("reports serialize")
    }
}

/// Computes the requested invariants of `g`, reading and filling `cache`
/// when given. Certificates are in the labels of `g` and the same for
/// every labeling up to the relabeling itself.
pub fn invariant_report(g: &Graph, options: &ReportOptions, cache: Option<&ResultCache>) -> InvariantReport {
    let (hash, to_canon) = canonical_id(g);
    let mut from_canon = vec![0; g.n()];
    for (v, &c) in to_canon.iter().enumerate() {
        from_canon[c] = v;
    }
    let engines = Engines {
        decomposition: DecompositionEngine::default(),
        homology: options.fields.iter().map(|&f| (f.tag(), HomologyEngine::new(f))).collect(),
    };
    // Work on the canonical relabeling so certificates do not depend on
    // whether they came from the cache.
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (to_canon[u], to_canon[v])).collect();
    let canon = Graph::from_edges(g.n(), &edges).expect("relabeling keeps edges valid");
    let mut report = InvariantReport::empty(g, hash.clone());
    let wanted: Vec<Invariant> = match &options.only {
        Some(list) => Invariant::ALL.into_iter().filter(|i| list.contains(i)).collect(),
        None => Invariant::ALL.to_vec(),
    };
    for inv in wanted {
        let fields: Vec<Option<Field>> =
            if inv.per_field() { options.fields.iter().map(|&f| Some(f)).collect() } else { vec![None] };
        for field in fields {
            let label = match field {
                Some(f) => format!("{inv}/{}", f.tag()),
                None => inv.name().to_string(),
            };
            let key = CacheKey::new(&hash, inv, field);
            let cached = cache.and_then(|c| c.get(&key)).and_then(|entry| {
                let cert = entry.certificate;
                let valid = !options.paranoid || cert.as_ref().is_none_or(|c| c.check(&canon, entry.value).is_ok());
                valid.then_some(Computed { value: entry.value, certificate: cert })
            });
            let start = Instant::now();
            let computed = match cached {
                Some(c) => Ok(c),
                None => {
                    let fresh = compute(&canon, inv, field, options.betti_cap, &engines);
                    if let (Ok(c), Some(cache)) = (&fresh, cache) {
                        // A failed write only costs a recomputation later.
                        let _ = cache.put(&key, c.value, c.certificate.clone());
                    }
                    fresh
                }
            };
            report.timings_ms.insert(label.clone(), start.elapsed().as_secs_f64() * 1e3);
            match computed {
                Ok(c) => {
                    report.record(inv, field, c.value);
                    if let Some(cert) = c.certificate {
                        report.certificates.insert(inv.name().to_string(), cert.relabel(&from_canon));
                    }
                }
                Err(reason) => report.skipped.push(format!("{label}: {reason}")),
            }
        }
    }
    report
}

/// Cross-invariant consistency of a report. Returns the failed checks.
pub fn sanity_check(g: &Graph, r: &InvariantReport) -> Vec<String> {
    let mut bad = Vec::new();
    let mut need = |ok: bool, what: String| {
        if !ok {
            bad.push(what);
        }
    };
    if let (Some(im), Some(m)) = (r.induced_matching, r.matching) {
        need(im <= m, format!("im={im} > matching={m}"));
    }
    for (tag, &reg) in &r.regularity {
        if let Some(im) = r.induced_matching {
            need(im <= reg, format!("im={im} > reg/{tag}={reg}"));
        }
        if let Some(m) = r.matching {
            need(reg <= m, format!("reg/{tag}={reg} > matching={m}"));
        }
        if let Some(c) = r.cochord {
            need(reg <= c, format!("reg/{tag}={reg} > cochord={c}"));
        }
    }
    if let Some(wc) = r.well_covered {
        need(wc == independence_complex(g).is_pure(), format!("well_covered={wc} disagrees with complex purity"));
    }
    for (tag, &cm) in &r.cohen_macaulay {
        if cm {
            need(r.well_covered != Some(false), format!("cohen_macaulay/{tag} but not well-covered"));
            need(r.sequentially_cm.get(tag) != Some(&false), format!("cohen_macaulay/{tag} but not sequentially CM"));
        }
    }
    if r.very_well_covered == Some(true) {
        need(r.well_covered != Some(false), "very well-covered but not well-covered".to_string());
    }
    bad
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("report input does not parse: {0}")]
    Input(String),
    #[error("report hash {found} does not match the graph ({expected})")]
    Hash { expected: String, found: String },
    #[error("{0}")]
    Mismatch(String),
}

/// Replays every certificate of a report and reruns the sanity suite.
/// Returns the number of certificates checked.
pub fn verify_report(r: &InvariantReport) -> Result<usize, Vec<VerifyError>> {
    let g = parse_graph6(&r.input.graph6).map_err(|e| vec![VerifyError::Input(e.to_string())])?;
    let mut errors = Vec::new();
    let (hash, _) = canonical_id(&g);
    if hash != r.input.hash {
        errors.push(VerifyError::Hash { expected: hash, found: r.input.hash.clone() });
    }
    if (g.n(), g.edge_count(), girth(&g)) != (r.n, r.m, r.girth) {
        errors.push(VerifyError::Mismatch("n, m or girth differ from the graph".to_string()));
    }
    for (name, cert) in &r.certificates {
        let value = name.parse::<Invariant>().ok().and_then(|inv| r.value(inv));
        match value {
            None => errors.push(VerifyError::Mismatch(format!("certificate for {name} has no recorded value"))),
            Some(v) => {
                if let Err(e) = cert.check(&g, v) {
                    errors.push(VerifyError::Mismatch(format!("{name}: {e}")));
                }
            }
        }
    }
    for problem in sanity_check(&g, r) {
        errors.push(VerifyError::Mismatch(format!("sanity: {problem}")));
    }
    if errors.is_empty() {
        Ok(r.certificates.len())
    } else {
        Err(errors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, gn_family, path};

    #[test]
    fn six_cycle() {
        let r = invariant_report(&cycle(6).unwrap(), &ReportOptions::default(), None);
        assert_eq!(r.vertex_decomposable, Some(false));
        assert_eq!(r.cns, Some(true));
        assert_eq!(r.well_covered, Some(false));
        assert_eq!((r.n, r.m, r.girth), (6, 6, Girth::Finite(6)));
        assert_eq!(verify_report(&r).unwrap(), r.certificates.len());
    }

    #[test]
    fn gn_one() {
        let opts = ReportOptions { fields: vec![Field::Gf2], ..Default::default() };
        let r = invariant_report(&gn_family(1).unwrap(), &opts, None);
        assert_eq!((r.induced_matching, r.matching, r.cochord), (Some(3), Some(6), Some(4)));
        assert_eq!(r.regularity.get("gf2"), Some(&3));
        assert_eq!(r.vertex_decomposable, Some(true));
        assert!(verify_report(&r).is_ok());
    }

    #[test]
    fn tampering_is_caught() {
        let mut r = invariant_report(&path(5).unwrap(), &ReportOptions::default(), None);
        assert!(verify_report(&r).is_ok());
        r.induced_matching = Some(3);
        assert!(verify_report(&r).is_err());
        let json = serde_json::to_string(&r).unwrap();
        let back: InvariantReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.canonical_json(), r.canonical_json());
    }

    #[test]
    fn only_and_names() {
        let opts =
            ReportOptions { only: Some(vec!["im".parse().unwrap(), "alpha".parse().unwrap()]), ..Default::default() };
        let r = invariant_report(&path(3).unwrap(), &opts, None);
        assert_eq!((r.induced_matching, r.alpha, r.cochord), (Some(1), Some(2), None));
        assert!("girthh".parse::<Invariant>().is_err());
        let json = serde_json::to_value(invariant_report(&path(1).unwrap(), &ReportOptions::default(), None)).unwrap();
        assert_eq!(json["girth"], "inf");
    }
}
