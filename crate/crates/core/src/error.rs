use thiserror::Error;

use crate::patterns::PatternWitness;

/// Errors raised by the library. Absence of a structure (no cotree, no
/// embedding) is reported as `Option::None`, never as an error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),

    #[error("graph is not bipartite with respect to the given sides: edge {0}-{1} inside a side")]
    NotBipartite(usize, usize),

    #[error("search cap exceeded: {what} has size {size}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("excluded pattern {pattern} found")]
    PatternFound {
        pattern: String,
        witness: PatternWitness,
    },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
