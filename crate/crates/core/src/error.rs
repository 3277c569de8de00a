use thiserror::Error;

/// Errors raised while building or evaluating constrained expressions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TfcError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimensionMismatch { context: &'static str, left: usize, right: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("support matrix is singular: no admissible pivot in column {column}")]
    SingularSupport { column: usize },

    #[error("expected one support function per constraint, got {constraints} constraints and {supports} supports")]
    CountMismatch { constraints: usize, supports: usize },

    #[error("a constraint needs at least one term")]
    EmptyConstraint,

    #[error("index {index} out of range for {len} entries")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension {dimension}: {source}")]
    InDimension {
        dimension: usize,
        #[source]
        source: Box<TfcError>,
    },

    #[error("unknown example `{0}` (expected one of matrix_r2x3, string_c2, gf4, multivariate)")]
    UnknownExample(String),
}

pub type Result<T, E = TfcError> = std::result::Result<T, E>;
