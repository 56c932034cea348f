use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::io::emit_graph6;

use super::claims::{ClaimId, Item, Outcome, Source};
use super::{enumerate_graphs, EnumerationError, FastOracle, Oracle, SlowOracle};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Which graphs a claim runs on. Unset fields fall back to the claim's
/// defaults.
#[derive(Clone, Debug, Default)]
pub struct Universe {
    /// Largest order for enumerated claims, largest sample order otherwise.
    pub max_n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    /// Replaces the built-in universe; the claim's base filter still applies.
    pub external: Option<(String, Vec<Graph>)>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub max_graphs: Option<usize>,
    pub max_time: Option<Duration>,
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub universe: Universe,
    pub budget: Budget,
    /// Evaluate every graph on the definitional route too.
    pub cross_check: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationStatus {
    /// Both routes report the violation.
    BothRoutes,
    /// Only the engines report it; the definitional route disagrees.
    FastPathOnly,
    /// Only the definitional route reports it.
    SlowPathOnly,
    /// Neither reports a violation but they disagree on whether the
    /// hypotheses hold.
    RoutesDisagree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<String>,
    pub detail: String,
    pub status: ViolationStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub subject: String,
    pub statement: String,
    pub universe: String,
    pub tested: usize,
    /// Graphs on which the hypotheses held.
    pub applicable: usize,
    /// Graphs the engines could not evaluate.
    pub skipped: usize,
    pub cross_checked: bool,
    pub violations: Vec<Violation>,
    pub complete: bool,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub version: String,
}

impl VerdictReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }

    /// JSON without the wall time, so equal runs give equal bytes.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.wall_time_ms = None;
        serde_json::to_string_pretty(&r).expect("reports serialize")
    }

    pub(crate) fn verdict_text(violations: &[Violation], complete: bool) -> String {
        match (violations.is_empty(), complete) {
            (true, true) => "consistent".to_string(),
            (true, false) => "partial: consistent on the evaluated graphs".to_string(),
            (false, _) => "suspected implementation bug: see violations".to_string(),
        }
    }
}

/// Builds the universe, evaluates every graph in parallel and collects
/// violations in universe order.
pub fn check_claim(id: ClaimId, options: &CheckOptions) -> Result<VerdictReport, CheckError> {
    let start = Instant::now();
    let spec = id.spec();
    let u = &options.universe;
    let cap = options.budget.max_graphs.unwrap_or(usize::MAX);
    let mut truncated = false;
    let (items, universe) = match (&u.external, &spec.source) {
        (Some((label, graphs)), source) => {
            let keep = |g: &Graph| match source {
                Source::Enumerated { filter, .. } => filter.accepts(g),
                _ => true,
            };
            let items: Vec<Item> =
                graphs.iter().filter(|g| keep(g)).map(|g| Item { graph: g.clone(), origin: None }).collect();
            (items, format!("external: {label}"))
        }
        (None, Source::Enumerated { filter, max_n }) => {
            let max_n = u.max_n.unwrap_or(*max_n);
            let mut items = Vec::new();
            for n in 1..=max_n {
                for g in enumerate_graphs(n, filter)? {
                    items.push(Item { graph: g, origin: None });
                }
            }
            (items, format!("enumerated n=1..={max_n}, {}", filter.describe()))
        }
        (None, Source::Sampled { kind, count, max_n }) => {
            let (count, max_n) = (u.samples.unwrap_or(*count), u.max_n.unwrap_or(*max_n));
            let seed = u.seed.unwrap_or(DEFAULT_SEED);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let items = (0..count.min(cap)).map(|_| kind.sample(&mut rng, max_n)).collect();
            truncated = count > cap;
            (items, format!("{count} {}, n<={max_n}, seed={seed}", kind.describe()))
        }
        (None, Source::Fixed(make)) => {
            let items = make();
            let names: Vec<String> = items.iter().filter_map(|i| i.origin.clone()).collect();
            (items, format!("fixed: {}", names.join(", ")))
        }
    };
    let mut items = items;
    if items.len() > cap {
        items.truncate(cap);
        truncated = true;
    }
    let deadline = options.budget.max_time.map(|d| start + d);
    let fast = FastOracle::default();
    let slow = SlowOracle;
    let results: Vec<Evaluation> =
        items.par_iter().map(|item| evaluate(id, item, &fast, &slow, options.cross_check, deadline)).collect();
    let mut report = VerdictReport {
        subject: id.as_str().to_string(),
        statement: id.statement().to_string(),
        universe,
        tested: 0,
        applicable: 0,
        skipped: 0,
        cross_checked: options.cross_check,
        violations: Vec::new(),
        complete: !truncated,
        verdict: String::new(),
        wall_time_ms: None,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    for (item, r) in items.iter().zip(results) {
        match r {
            Evaluation::Skipped => report.skipped += 1,
            Evaluation::Done { applicable, violation } => {
                report.tested += 1;
                report.applicable += usize::from(applicable);
                if let Some((detail, status)) = violation {
                    report.violations.push(Violation {
                        graph6: emit_graph6(&item.graph),
                        origin: item.origin.clone(),
                        detail,
                        status,
                    });
                }
            }
        }
    }
    report.complete &= report.skipped == 0;
    report.verdict = VerdictReport::verdict_text(&report.violations, report.complete);
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

enum Evaluation {
    Skipped,
    Done { applicable: bool, violation: Option<(String, ViolationStatus)> },
}

fn evaluate(
    id: ClaimId,
    item: &Item,
    fast: &dyn Oracle,
    slow: &dyn Oracle,
    cross_check: bool,
    deadline: Option<Instant>,
) -> Evaluation {
    let g = &item.graph;
    if g.n() > 64 || deadline.is_some_and(|d| Instant::now() > d) {
        return Evaluation::Skipped;
    }
    let predicate = id.spec().predicate;
    let first = match predicate(g, fast) {
        Ok(o) => o,
        Err(_) => return Evaluation::Skipped,
    };
    let applicable = first != Outcome::Vacuous;
    let violation = match first {
        Outcome::Violated(detail) => {
            // Re-run on the definitional route before reporting.
            let status = match predicate(g, slow) {
                Ok(Outcome::Violated(_)) => ViolationStatus::BothRoutes,
                _ => ViolationStatus::FastPathOnly,
            };
            Some((detail, status))
        }
        other if cross_check => match predicate(g, slow) {
            Ok(Outcome::Violated(detail)) => Some((detail, ViolationStatus::SlowPathOnly)),
            Ok(second) if second != other => {
                Some((format!("engines: {other:?}, definitions: {second:?}"), ViolationStatus::RoutesDisagree))
            }
            _ => None,
        },
        _ => None,
    };
    Evaluation::Done { applicable, violation }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(max_n: usize) -> CheckOptions {
        CheckOptions { universe: Universe { max_n: Some(max_n), ..Default::default() }, ..Default::default() }
    }

    #[test]
    fn small_checks_are_consistent_and_stable() {
        for id in [ClaimId::THM_2_6, ClaimId::LEM_2_5, ClaimId::BOUND_HVT] {
            let a = check_claim(id, &quick(5)).unwrap();
            assert!(a.consistent() && a.complete, "{}", a.canonical_json());
            assert!(a.tested > 0);
            let b = check_claim(id, &quick(5)).unwrap();
            assert_eq!(a.canonical_json(), b.canonical_json());
        }
    }

    #[test]
    fn budget_truncates() {
        let mut o = quick(6);
        o.budget.max_graphs = Some(10);
        let r = check_claim(ClaimId::COR_2_3, &o).unwrap();
        assert_eq!(r.tested, 10);
        assert!(!r.complete);
        assert!(r.verdict.starts_with("partial"));
    }

    #[test]
    fn external_graphs_pass_through_the_filter() {
        let c4 = crate::constructions::cycle(4).unwrap();
        let c6 = crate::constructions::cycle(6).unwrap();
        let o = CheckOptions {
            universe: Universe { external: Some(("two cycles".into(), vec![c4, c6])), ..Default::default() },
            cross_check: true,
            ..Default::default()
        };
        let r = check_claim(ClaimId::THM_2_6, &o).unwrap();
        assert_eq!(r.tested, 1);
        assert!(r.consistent());
    }

    #[test]
    fn samples_are_seeded() {
        let mut o = CheckOptions::default();
        o.universe.samples = Some(20);
        let a = check_claim(ClaimId::THM_4_5, &o).unwrap();
        let b = check_claim(ClaimId::THM_4_5, &o).unwrap();
        assert_eq!(a.canonical_json(), b.canonical_json());
        assert!(a.consistent() && a.tested == 20);
    }
}
