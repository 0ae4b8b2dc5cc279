//! Extrinsic geometry of left-invariant unit vector fields on oscillator
//! and Heisenberg groups.
//!
//! A left-invariant unit vector field V on a Lie group G with left-invariant
//! metric g defines a map into the unit tangent bundle T₁G equipped with the
//! Sasaki metric. This crate computes the objects controlling the extrinsic
//! geometry of that map:
//!
//! - the Nomizu operator A_V X = −∇_X V and its singular frames,
//! - the vector-field Hessian and the curvature-coupling tensor Hm_V,
//! - the rough Laplacian Δ̄V and the harmonicity / harmonic-map criteria,
//! - the mean-curvature vector of the submanifold V(G) ⊂ T₁G and the
//!   totally-geodesic residual,
//!
//! and classifies fields as minimal / harmonic / harmonic-map generating /
//! totally geodesic. Everything is algebraic: for left-invariant data the
//! Levi-Civita connection and curvature reduce to structure-constant
//! arithmetic, so the whole pipeline runs either over exact rationals
//! (when all inputs are rational) or over `f64`.
//!
//! The built-in families are the oscillator groups Gₙ(λ₁,…,λₙ) and their
//! Heisenberg subgroups H(n,1), including the almost-contact operators
//! (φ, ξ, η, θ) and closed forms specific to those groups: the Nomizu block
//! matrix, the invariant curvature expression, the singular-value polynomial,
//! and the minimality / harmonic-map predicates for fields orthogonal to ξ
//! and ζ.
//!
//! # Layout
//!
//! - [`scalar`] — the dual scalar path: exact [`scalar::Rat`] or `f64`.
//! - [`algebra`] — metric Lie algebras, Koszul connection, curvature tensor.
//! - [`field`] — unit fields, Nomizu data, singular frames, Sasaki lifts,
//!   residuals and the [`field::GeometryReport`] classifier.
//! - [`oscillator`] — the Gₙ(λ) / H(n,1) constructors and closed forms.
//! - [`contact`] — almost-contact operators, trans-Sasakian residuals, Reeb
//!   field criteria.
//! - [`report`] — run configuration, sphere sampling, JSON/CSV serialization
//!   used by the `oscigeo` binary (`describe`, `check`, `scan`).
//!
//! Runnable walkthroughs for each capability live in `examples/`; start with
//! `cargo run --example connection_table`.

pub mod algebra;
pub mod contact;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oscillator;
pub mod report;
pub mod scalar;

pub use algebra::{AlgebraVector, ConnectionTable, CurvatureTensor, MetricLieAlgebra};
pub use error::Error;
pub use field::{AmbientGeometry, GeometryReport, NomizuData, SingularFrame, UnitField};
pub use oscillator::OscillatorSpec;
pub use report::{
    CheckConfig, FamilyConfig, ReportDocument, ScanConfig, ScanDocument, Subspace,
};
pub use scalar::{Rat, Scalar};

/// Convenience alias for results carrying [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
