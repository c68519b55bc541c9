use alloc::string::String;

/// Failure modes shared by every geometric operation in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("direction has (near) zero length")]
    ZeroDirection,
    #[error("body is not full-dimensional")]
    LowerDimensional,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported dimension {0} (only 2 and 3 are handled)")]
    UnsupportedDimension(usize),
    #[error("operation requires dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("intersection is empty")]
    EmptyBody,
    #[error("halfspace normals do not positively span the space")]
    Unbounded,
    #[error("Steiner fit inconsistent: W_n = {fitted}, vol(E) = {expected}")]
    FitInconsistent { fitted: f64, expected: f64 },
    #[error("parameter {value} outside admissible range (> {min})")]
    OutOfRange { value: f64, min: f64 },
    #[error("direction set does not determine the body")]
    NotDetermining,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = core::result::Result<T, Error>;
