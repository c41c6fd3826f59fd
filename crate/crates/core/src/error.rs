//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by evaluators, operator constructors and verifiers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside its admissible range (bad α, β, grid size, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested evaluation point lies outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An intermediate quantity left the representable floating-point range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A sample grid is malformed (non-uniform, too short, mismatched length).
    #[error("grid error: {0}")]
    Grid(String),

    /// A matrix input violates a structural requirement (asymmetry, size cap).
    #[error("matrix error: {0}")]
    Matrix(String),

    /// An iterative scheme failed to converge within its sweep budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Data violates the a-priori admissibility assumptions of a theorem.
    #[error("admissibility violation: {0}")]
    Admissibility(String),

    /// Serialization or deserialization of an interchange format failed.
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
