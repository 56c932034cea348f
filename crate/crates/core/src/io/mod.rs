//! File formats, invariant reports and the on-disk result cache.

mod cache;
mod certificate;
mod formats;
mod report;

pub use cache::{CacheEntry, CacheKey, ResultCache, CACHE_ENV};
pub use certificate::{Certificate, CoverClass, Value};
pub use formats::{
    emit_edgelist, emit_graph6, parse_digraph, parse_edgelist, parse_graph6, parse_graph6_or_sparse6, parse_poset,
    parse_sparse6, LineError, ParseError,
};
pub use report::{
    canonical_id, invariant_report, sanity_check, verify_report, InputId, Invariant, InvariantReport, ReportOptions,
    UnknownInvariant, VerifyError, SCHEMA_VERSION, VERSION,
};
