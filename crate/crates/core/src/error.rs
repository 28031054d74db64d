use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    #[error("subspace is not closed under the product")]
    NotSubalgebra,

    #[error("ideal does not left-annihilate the algebra (A·L != 0)")]
    IdealDoesNotAnnihilate,

    #[error("structure constants violate the left Leibniz identity ({0} violations)")]
    InvalidAlgebra(usize),

    #[error("module violates the Leibniz module axioms ({0} violations)")]
    InvalidModule(usize),

    #[error("map is not an algebra morphism: {0}")]
    NotMultiplicative(String),

    #[error("not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A construction failed its own post-verification. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
