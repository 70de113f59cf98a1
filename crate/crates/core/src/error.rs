use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {n} for {context}")]
    UnsupportedDimension { n: usize, context: &'static str },

    #[error("basis is singular (columns are linearly dependent)")]
    SingularBasis,

    #[error("matrix is not positive definite (leading minor {minor} is {value:e})")]
    NotPositiveDefinite { minor: usize, value: f64 },

    #[error("positive definiteness is indeterminate (leading minor {minor} within tolerance of zero)")]
    IndeterminateDefiniteness { minor: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("form is not reduced: {0}")]
    NotReduced(String),

    #[error("outside operation domain: {0}")]
    Domain(String),

    #[error("angle {index} = {value} outside [0, π/2]")]
    AngleOutOfRange { index: usize, value: f64 },

    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),

    #[error("diagonal must be positive and sorted ascending")]
    UnsortedDiagonal,

    #[error("invalid pairwise angles: {0}")]
    InvalidAngles(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
