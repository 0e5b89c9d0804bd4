use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QsymError {
    /// Malformed or out-of-range input (bad JSON, zero parts, cyclic relations).
    #[error("input error: {0}")]
    Input(String),
    /// Input is well-formed but outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The element is not symmetric; carries a pair of compositions with equal
    /// sorted type but different coefficients.
    #[error("not symmetric: coefficients of {0} and {1} differ")]
    NotSymmetric(String, String),
}

pub type Result<T> = std::result::Result<T, QsymError>;
