use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {0} exceeds the supported maximum of 16")]
    DimensionTooLarge(usize),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("metric is not positive definite")]
    NotPositiveDefinite,

    #[error("no rational {degree}-th root of {value}")]
    IrrationalRoot { value: String, degree: u32 },

    #[error("not a G2-form: {0}")]
    NotG2Form(String),

    #[error("torus generators do not commute (generators {0} and {1})")]
    NonCommuting(usize, usize),

    #[error("torus action has non-integer rotation rates: {0}")]
    NonIntegerRates(String),

    #[error("not a Lie algebra: {0}")]
    InvalidLieAlgebra(String),

    #[error("not a representation: {0}")]
    InvalidRepresentation(String),

    #[error("complement is not reductive: {0}")]
    NotReductive(String),

    #[error("form is not basic: {0}")]
    NotBasic(String),

    #[error("no invariant G2-structure: {0}")]
    NoInvariantStructure(String),

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
