//! The dual scalar path.
//!
//! Brackets, the Koszul connection, curvature, the Nomizu operator and all
//! residual tensors are rational functions of the inputs, so when the
//! structure constants, metric and field coefficients are rational the whole
//! pipeline can run over exact rationals ([`Rat`]) and identity tests can
//! assert literal zero. Singular values need radicals, so the spectral layer
//! (Jacobi eigensolver, singular frames, mean curvature) runs over `f64`;
//! on the exact path a square root is only taken when it exists in ℚ.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::traits::{Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};

/// Exact rational scalar with arbitrary-precision integer parts.
pub type Rat = Ratio<BigInt>;

/// Field operations shared by the exact ([`Rat`]) and floating (`f64`) paths.
///
/// `Signed` brings the full `Num` arithmetic surface (+, −, ×, ÷, abs,
/// signum) for both implementors; this trait adds construction from small
/// integers and ratios, an *exact* square root that may fail, and the
/// tolerance appropriate to the path (literal zero for rationals, `1e-12`
/// for floats).
pub trait Scalar: Clone + Debug + Display + PartialOrd + Signed {
    /// True on the exact-rational path.
    const EXACT: bool;

    /// Embed a machine integer.
    fn from_int(value: i64) -> Self;

    /// Embed the fraction `numer / denom`. Panics if `denom == 0`.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Square root when one exists in the scalar domain: always for
    /// non-negative floats, only for perfect rational squares on the exact
    /// path. Returns `None` for negative inputs and inexpressible roots.
    fn try_sqrt(&self) -> Option<Self>;

    /// Lossy conversion for display and reporting.
    fn to_f64(&self) -> f64;

    /// Absolute tolerance for algebraic identity checks on this path.
    fn identity_tolerance() -> Self;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(value: i64) -> Self {
        value as f64
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        numer as f64 / denom as f64
    }

    fn try_sqrt(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(self.sqrt())
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn identity_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn from_int(value: i64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn try_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Ratio is kept reduced with a positive denominator, so a rational
        // square root exists iff numerator and denominator are both squares.
        let sqrt_numer = self.numer().sqrt();
        let sqrt_denom = self.denom().sqrt();
        if &(&sqrt_numer * &sqrt_numer) == self.numer()
            && &(&sqrt_denom * &sqrt_denom) == self.denom()
        {
            Some(Ratio::new(sqrt_numer, sqrt_denom))
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn identity_tolerance() -> Self {
        Self::zero()
    }
}
