use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix entry count {got} does not match {rows}x{cols}")]
    EntryCount {
        rows: usize,
        cols: usize,
        got: usize,
    },

    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("weight must be nonzero")]
    ZeroWeight,

    #[error("operator does not satisfy the Rota-Baxter identity")]
    NotRotaBaxter,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid support: {0}")]
    InvalidSupport(String),

    #[error("invalid subalgebra decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("not a rooted tree: {0}")]
    NotATree(String),

    #[error("digraph precondition violated: {0}")]
    GraphPrecondition(String),

    #[error("associativity check failed at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Whether the error comes from reading or parsing input rather than
    /// from a failed mathematical check.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Json(_)
                | Error::Csv(_)
                | Error::Io(_)
                | Error::ParseRational(_)
                | Error::Malformed(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
