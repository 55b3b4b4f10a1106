use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a proper elimination: {0}")]
    NotProperElimination(String),
    #[error("affine map with zero slope is not invertible")]
    NotInvertible,
    #[error("inner degree {inner} does not divide degree {degree}")]
    DegreeNotDivisible { degree: usize, inner: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
