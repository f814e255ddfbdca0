use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at θ = {theta}: denominator {denominator} vanishes")]
    Pole { theta: String, denominator: String },

    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error(
        "symbolic computation of dimension {dim} exceeds the cap {cap}; \
         use a specialized θ (--theta p/q) or raise the cap"
    )]
    SymbolicCapExceeded { dim: usize, cap: usize },

    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    #[error("singular triangular system at θ = {theta}: {detail}")]
    Singular { theta: String, detail: String },

    #[error("eigenvalue collision prevents a unique extension: {0}")]
    EigenvalueCollision(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}
