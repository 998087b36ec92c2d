use thiserror::Error;

/// Errors produced by the library.
///
/// Variants are grouped by the exit code the `sandtile` binary maps them to:
/// parse failures exit with 3, everything else with 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("invalid shifting vector: {0}")]
    InvalidShifting(String),

    #[error("vector {vector} lies on hyperplane with normal {normal}")]
    OnHyperplane { vector: String, normal: String },

    #[error("enumeration of {requested} elements exceeds budget {budget}")]
    Budget { requested: String, budget: u64 },

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("edge {edge} {problem}")]
    EdgeDomain { edge: usize, problem: &'static str },

    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Json(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
