//! Almost-contact data on the oscillator and Heisenberg layouts.
//!
//! Both layouts carry the endomorphism φ rotating the e-blocks into each
//! other, φ(e_i) = e_{n+i}, φ(e_{n+i}) = −e_i, φ(ξ) = φ(ζ) = 0, together
//! with the dual forms η = ⟨·, ξ⟩ and θ = ⟨·, ζ⟩ (θ ≡ 0 when the layout
//! has no ζ). They satisfy φ² = −id + η⊗ξ + θ⊗ζ and make the Heisenberg
//! algebra an α-Sasakian manifold with α = ½:
//!
//! ```text
//! (∇_X φ)Y = α(⟨X, Y⟩ξ − η(Y)X) + β(⟨φX, Y⟩ξ − η(Y)φX),  (α, β) = (½, 0).
//! ```
//!
//! The residual of that identity, the totally-geodesic test for the Reeb
//! field ξ of a structure with constant coefficients, and the closed
//! formula for the Reeb field's mean-curvature magnitude live here.

use crate::algebra::{AlgebraVector, MetricLieAlgebra};
use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// Which frame layout the contact operators act on: block size n, with or
/// without the trailing ζ direction.
#[derive(Debug, Clone, Copy)]
pub struct ContactData {
    n: usize,
    has_zeta: bool,
}

impl ContactData {
    /// The 2n+2 layout e_1 … e_2n, ξ, ζ.
    pub fn oscillator(n: usize) -> Self {
        Self { n, has_zeta: true }
    }

    /// The 2n+1 layout e_1 … e_2n, ξ.
    pub fn heisenberg(n: usize) -> Self {
        Self { n, has_zeta: false }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 1 + usize::from(self.has_zeta)
    }

    pub fn has_zeta(&self) -> bool {
        self.has_zeta
    }

    /// Index of ξ in the frame.
    pub fn xi_index(&self) -> usize {
        2 * self.n
    }

    /// The Reeb direction ξ as a coefficient vector.
    pub fn xi<S: Scalar>(&self) -> AlgebraVector<S> {
        AlgebraVector::basis(self.dim(), self.xi_index())
    }

    /// The ζ direction, when the layout has one.
    pub fn zeta<S: Scalar>(&self) -> Option<AlgebraVector<S>> {
        self.has_zeta
            .then(|| AlgebraVector::basis(self.dim(), 2 * self.n + 1))
    }

    /// φ(v): rotate the e-blocks, kill ξ and ζ.
    pub fn phi<S: Scalar>(&self, v: &AlgebraVector<S>) -> Result<AlgebraVector<S>> {
        self.check_dim(v)?;
        let mut coeffs = vec![S::zero(); self.dim()];
        for i in 0..self.n {
            coeffs[i] = -v[self.n + i].clone();
            coeffs[self.n + i] = v[i].clone();
        }
        Ok(AlgebraVector::new(coeffs))
    }

    /// η(v), the ξ-coefficient on the orthonormal frame.
    pub fn eta<S: Scalar>(&self, v: &AlgebraVector<S>) -> Result<S> {
        self.check_dim(v)?;
        Ok(v[2 * self.n].clone())
    }

    /// θ(v), the ζ-coefficient (zero on the ζ-free layout).
    pub fn theta<S: Scalar>(&self, v: &AlgebraVector<S>) -> Result<S> {
        self.check_dim(v)?;
        Ok(if self.has_zeta {
            v[2 * self.n + 1].clone()
        } else {
            S::zero()
        })
    }

    fn check_dim<S: Scalar>(&self, v: &AlgebraVector<S>) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }
}

/// Constant coefficients (α, β) of a trans-Sasakian structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransSasakianCoeffs<S> {
    pub alpha: S,
    pub beta: S,
}

/// Largest defect norm of the trans-Sasakian identity over frame pairs,
///
/// ```text
/// (∇_X φ)Y − α(⟨X, Y⟩ξ − η(Y)X) − β(⟨φX, Y⟩ξ − η(Y)φX),
/// ```
///
/// with X, Y running over the non-ζ frame directions (on the 2n+2 layout
/// the identity concerns the structure induced on ker θ). The algebra must
/// use the orthonormal frame the contact operators assume. Exact scalars
/// fail with `NotRepresentable` if the largest defect norm is irrational.
pub fn trans_sasakian_residual<S: Scalar>(
    alg: &MetricLieAlgebra<S>,
    contact: &ContactData,
    coeffs: &TransSasakianCoeffs<S>,
) -> Result<S> {
    if alg.dim() != contact.dim() {
        return Err(Error::DimensionMismatch {
            expected: contact.dim(),
            found: alg.dim(),
        });
    }
    let conn = alg.koszul_connection()?;
    let xi = contact.xi::<S>();
    let span = 2 * contact.n() + 1; // e-blocks and ξ, never ζ
    let mut worst_sq = S::zero();
    for i in 0..span {
        let x = AlgebraVector::basis(alg.dim(), i);
        for j in 0..span {
            let y = AlgebraVector::basis(alg.dim(), j);
            let phi_y = contact.phi(&y)?;
            // (∇_X φ)Y = ∇_X(φY) − φ(∇_X Y)
            let mut defect = conn
                .covariant_derivative(&x, &phi_y)
                .sub(&contact.phi(&conn.covariant_derivative(&x, &y))?);
            // − α(⟨X,Y⟩ξ − η(Y)X)
            let g_xy = alg.inner(&x, &y);
            let eta_y = contact.eta(&y)?;
            defect.add_scaled(&xi, &-(coeffs.alpha.clone() * g_xy));
            defect.add_scaled(&x, &(coeffs.alpha.clone() * eta_y.clone()));
            // − β(⟨φX,Y⟩ξ − η(Y)φX)
            let phi_x = contact.phi(&x)?;
            let g_phix_y = alg.inner(&phi_x, &y);
            defect.add_scaled(&xi, &-(coeffs.beta.clone() * g_phix_y));
            defect.add_scaled(&phi_x, &(coeffs.beta.clone() * eta_y));
            let norm_sq = alg.norm_sq(&defect);
            if norm_sq > worst_sq {
                worst_sq = norm_sq;
            }
        }
    }
    worst_sq
        .try_sqrt()
        .ok_or_else(|| Error::NotRepresentable("sqrt of residual".into()))
}

/// Whether the Reeb field of a trans-Sasakian structure with constant
/// coefficients is totally geodesic: β = 0 and α ∈ {0, 1}.
pub fn reeb_tg_condition(coeffs: &TransSasakianCoeffs<f64>, tol: f64) -> bool {
    coeffs.beta.abs() <= tol && (coeffs.alpha.abs() <= tol || (coeffs.alpha - 1.0).abs() <= tol)
}

/// Mean-curvature magnitude of the Reeb field for a (2n+1)-dimensional
/// trans-Sasakian structure with constant coefficients.
///
/// * dim = 3: zero (constant coefficients force a minimal Reeb field).
/// * β = 0 (α-Sasakian): zero in any dimension.
/// * α = 0, β ≠ 0 (β-Kenmotsu): the magnitude is
///
///   ```text
///   (1 + (2n−1)β²) / ((2n+1)(1+β²)^{3/2}) · ‖Δ̄φ‖,
///   ```
///
///   so the caller must supply `phi_laplacian_norm`; `Domain` otherwise.
/// * αβ ≠ 0 in dimension > 3: not a constant-coefficient structure
///   (`Domain`).
pub fn reeb_mean_curvature_formula(
    dim: usize,
    coeffs: &TransSasakianCoeffs<f64>,
    phi_laplacian_norm: Option<f64>,
) -> Result<f64> {
    if dim < 3 || dim % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "trans-Sasakian structures live in odd dimension ≥ 3, got {dim}"
        )));
    }
    if dim == 3 {
        return Ok(0.0);
    }
    let n = (dim - 1) / 2;
    if coeffs.beta == 0.0 {
        return Ok(0.0);
    }
    if coeffs.alpha != 0.0 {
        return Err(Error::Domain(
            "constant coefficients in dimension > 3 force α β = 0".into(),
        ));
    }
    let norm = phi_laplacian_norm.ok_or_else(|| {
        Error::Domain("β-Kenmotsu case needs the norm of the rough Laplacian of φ".into())
    })?;
    let b2 = coeffs.beta * coeffs.beta;
    let nf = n as f64;
    let prefactor = (1.0 + (2.0 * nf - 1.0) * b2)
        / ((2.0 * nf + 1.0) * (1.0 + b2).powf(1.5));
    Ok(prefactor * norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::{heisenberg_algebra, oscillator_algebra, OscillatorSpec};
    use crate::scalar::Rat;
    use num::Zero;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn phi_squares_to_minus_identity_off_the_kernel() {
        let contact = ContactData::oscillator(2);
        let dim = contact.dim();
        let xi = contact.xi::<Rat>();
        let zeta = contact.zeta::<Rat>().unwrap();
        for k in 0..dim {
            let v = AlgebraVector::<Rat>::basis(dim, k);
            let twice = contact.phi(&contact.phi(&v).unwrap()).unwrap();
            // φ²v = −v + η(v)ξ + θ(v)ζ
            let mut expected = v.neg();
            expected.add_scaled(&xi, &contact.eta(&v).unwrap());
            expected.add_scaled(&zeta, &contact.theta(&v).unwrap());
            assert_eq!(twice, expected);
        }
    }

    #[test]
    fn phi_is_skew_and_compatible_with_the_metric() {
        let contact = ContactData::heisenberg(2);
        let dim = contact.dim();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let x = AlgebraVector::new((0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect());
            let y = AlgebraVector::new((0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect());
            let dot = |a: &AlgebraVector<f64>, b: &AlgebraVector<f64>| -> f64 {
                (0..dim).map(|i| a[i] * b[i]).sum()
            };
            let phi_x = contact.phi(&x).unwrap();
            let phi_y = contact.phi(&y).unwrap();
            assert!((dot(&phi_x, &y) + dot(&x, &phi_y)).abs() < 1e-12);
            let compat = dot(&phi_x, &phi_y)
                - (dot(&x, &y)
                    - contact.eta(&x).unwrap() * contact.eta(&y).unwrap());
            assert!(compat.abs() < 1e-12);
        }
    }

    #[test]
    fn heisenberg_satisfies_the_half_sasakian_identity_exactly() {
        for n in [1usize, 2, 3] {
            let alg = heisenberg_algebra::<Rat>(n).unwrap();
            let contact = ContactData::heisenberg(n);
            let coeffs = TransSasakianCoeffs {
                alpha: rat(1, 2),
                beta: rat(0, 1),
            };
            let residual = trans_sasakian_residual(&alg, &contact, &coeffs).unwrap();
            assert!(residual.is_zero(), "n = {n}: residual {residual}");
        }
    }

    #[test]
    fn wrong_coefficient_leaves_a_visible_residual() {
        let alg = heisenberg_algebra::<Rat>(1).unwrap();
        let contact = ContactData::heisenberg(1);
        let coeffs = TransSasakianCoeffs {
            alpha: rat(1, 1),
            beta: rat(0, 1),
        };
        let residual = trans_sasakian_residual(&alg, &contact, &coeffs).unwrap();
        assert_eq!(residual, rat(1, 2));
    }

    #[test]
    fn oscillator_restricted_to_ker_theta_is_half_sasakian() {
        let spec = OscillatorSpec::new(2, vec![rat(1, 1), rat(-3, 1)]).unwrap();
        let alg = oscillator_algebra(&spec).unwrap();
        let contact = ContactData::oscillator(2);
        let coeffs = TransSasakianCoeffs {
            alpha: rat(1, 2),
            beta: rat(0, 1),
        };
        let residual = trans_sasakian_residual(&alg, &contact, &coeffs).unwrap();
        assert!(residual.is_zero());
    }

    #[test]
    fn reeb_total_geodesy_needs_alpha_zero_or_one() {
        let tol = 1e-12;
        let case = |alpha, beta| TransSasakianCoeffs { alpha, beta };
        assert!(reeb_tg_condition(&case(0.0, 0.0), tol));
        assert!(reeb_tg_condition(&case(1.0, 0.0), tol));
        assert!(!reeb_tg_condition(&case(0.5, 0.0), tol));
        assert!(!reeb_tg_condition(&case(0.0, 1.0), tol));
        assert!(!reeb_tg_condition(&case(1.0, 0.3), tol));
    }

    #[test]
    fn reeb_mean_curvature_table() {
        let sasakian = TransSasakianCoeffs {
            alpha: 2.0,
            beta: 0.0,
        };
        let kenmotsu = TransSasakianCoeffs {
            alpha: 0.0,
            beta: 2.0,
        };
        let mixed = TransSasakianCoeffs {
            alpha: 1.0,
            beta: 1.0,
        };

        assert!(matches!(
            reeb_mean_curvature_formula(4, &sasakian, None),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(reeb_mean_curvature_formula(3, &mixed, None).unwrap(), 0.0);
        assert_eq!(reeb_mean_curvature_formula(7, &sasakian, None).unwrap(), 0.0);

        // dim 7 ⇒ n = 3; β = 2 ⇒ (1 + 5·4)/((7)(5)^{3/2}) · 3.
        let value = reeb_mean_curvature_formula(7, &kenmotsu, Some(3.0)).unwrap();
        let expected = 21.0 / (7.0 * 5.0f64.powf(1.5)) * 3.0;
        assert!((value - expected).abs() < 1e-15);

        assert!(matches!(
            reeb_mean_curvature_formula(7, &kenmotsu, None),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            reeb_mean_curvature_formula(7, &mixed, Some(1.0)),
            Err(Error::Domain(_))
        ));
    }
}
