//! Exhaustive enumeration, claim checks and counterexample search.
mod check;
mod claims;
mod enumerate;
mod oracle;
pub mod random;
mod search;
pub mod slow;

pub use check::{
    check_claim, Budget, CheckError, CheckOptions, Universe, VerdictReport, Violation, ViolationStatus, DEFAULT_SEED,
};
pub use claims::{ClaimId, Outcome, UnknownClaim};
pub use enumerate::{enumerate_graphs, enumerate_range, EnumerationError, GraphFilter, MAX_BUILTIN_N, MAX_SPARSE_N};
pub use oracle::{FastOracle, Oracle, SlowOracle, REGULARITY_CAP};
pub use search::{has_separated_cycle, search_counterexample, search_in, Problem, SearchReport, UnknownProblem};
