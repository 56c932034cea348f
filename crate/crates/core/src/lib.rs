pub mod cli;
pub mod constructions;
pub mod decomposition;
pub mod graph;
pub mod homology;
pub mod independence;
pub mod io;
pub mod matching;
pub mod memo;
pub mod verification;

pub use graph::{Graph, VertexSet};
