use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Syntax problem in a case file.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Well-formed input that violates a model invariant.
    #[error("{0}")]
    Semantic(String),

    #[error("invalid cost model: {0}")]
    CostModel(String),

    #[error("simulation graph has no components, c_max is undefined")]
    NoComponents,

    #[error("edge ({u}, {v}) references a node outside 0..{n_vars}")]
    InvalidEdge { u: usize, v: usize, n_vars: usize },

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("variable count mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error(
        "{n_vars} variables exceed the exhaustive solver limit of {limit}; use the annealing solver"
    )]
    TooManyVariables { n_vars: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sampled energy {sampled} lies below the reference optimum {optimum}")]
    Integrity { optimum: f64, sampled: f64 },

    #[error("sample set is empty")]
    EmptySampleSet,

    #[error("sub-network {0} cannot be split")]
    Unsplittable(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
