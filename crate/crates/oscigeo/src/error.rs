//! Error taxonomy shared across the crate.
//!
//! Three broad classes, mirrored by the CLI exit codes: input errors
//! (malformed algebras, non-unit fields, bad parameters), numeric errors
//! (singular metrics, quantities a scalar domain cannot express), and
//! domain errors (an operation applied outside its mathematical domain).

use thiserror::Error;

/// Everything that can go wrong while building algebras or running the
/// geometry pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Structure constants or metric violate a Lie-algebra axiom.
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    /// The metric matrix is not invertible (or not positive definite).
    #[error("singular or non-positive-definite metric")]
    SingularMetric,

    /// A field that must have unit length does not.
    #[error("field is not unit length: |v|^2 = {norm_sq}")]
    NotUnit { norm_sq: String },

    /// The zero vector was supplied where a direction is required.
    #[error("zero vector cannot be normalized")]
    ZeroVector,

    /// The exact scalar path was asked for a value (typically a square root)
    /// that is not representable in its domain.
    #[error("value not representable on the exact path: {0}")]
    NotRepresentable(String),

    /// An operation was applied outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed run configuration or user input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An iterative numeric routine failed to converge.
    #[error("numeric routine failed to converge: {0}")]
    NoConvergence(String),
}
