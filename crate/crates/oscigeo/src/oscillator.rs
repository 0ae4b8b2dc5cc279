//! The oscillator family of metric Lie algebras and its closed forms.
//!
//! For n ≥ 1 and nonzero parameters λ = (λ_1, …, λ_n) the algebra has
//! dimension 2n + 2 with orthonormal frame ordered as
//!
//! ```text
//! e_1, …, e_n,  e_{n+1}, …, e_{2n},  ξ,  ζ
//! ```
//!
//! and nonzero brackets
//!
//! ```text
//! [e_i, e_{n+i}] = ξ,   [ζ, e_i] = λ_i e_{n+i},   [ζ, e_{n+i}] = −λ_i e_i.
//! ```
//!
//! Dropping ζ leaves the (2n+1)-dimensional Heisenberg algebra with
//! [e_i, e_{n+i}] = ξ as its only relation.
//!
//! Besides the family constructors this module carries the structure the
//! family makes explicit: the shape operator of a left-invariant field as a
//! closed matrix, the curvature tensor as a five-term invariant expression,
//! the quadratic whose roots are the nontrivial squared singular values of
//! a field tangent to the e-block, and closed-form classifiers for
//! minimality and the harmonic-map property on that block.

use crate::algebra::{AlgebraVector, MetricLieAlgebra};
use crate::contact::ContactData;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::Result;

/// Parameters of one member of the oscillator family.
#[derive(Debug, Clone)]
pub struct OscillatorSpec<S> {
    n: usize,
    lambda: Vec<S>,
}

impl<S: Scalar> OscillatorSpec<S> {
    /// Validate n ≥ 1, exactly n parameters, all nonzero.
    pub fn new(n: usize, lambda: Vec<S>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "oscillator family needs n ≥ 1".into(),
            ));
        }
        if lambda.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {n} frequency parameters, got {}",
                lambda.len()
            )));
        }
        if lambda.iter().any(|l| l.is_zero()) {
            return Err(Error::InvalidInput(
                "frequency parameters must be nonzero".into(),
            ));
        }
        Ok(Self { n, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &[S] {
        &self.lambda
    }

    /// Algebra dimension 2n + 2.
    pub fn dim(&self) -> usize {
        2 * self.n + 2
    }

    /// Frame labels e1, …, e2n, ξ, ζ.
    pub fn frame_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..=2 * self.n).map(|i| format!("e{i}")).collect();
        names.push("ξ".into());
        names.push("ζ".into());
        names
    }

    /// Split a vector into its two e-blocks and the ξ/ζ coefficients.
    pub fn decompose(&self, v: &AlgebraVector<S>) -> Result<FieldDecomposition<S>> {
        FieldDecomposition::split(v, self.n, true)
    }

    /// Apply E_λ = diag(λ_1..λ_n, λ_1..λ_n, 0, 0).
    pub fn e_lambda(&self, v: &AlgebraVector<S>) -> Result<AlgebraVector<S>> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        let mut coeffs = vec![S::zero(); self.dim()];
        for i in 0..self.n {
            coeffs[i] = self.lambda[i].clone() * v[i].clone();
            coeffs[self.n + i] = self.lambda[i].clone() * v[self.n + i].clone();
        }
        Ok(AlgebraVector::new(coeffs))
    }

    /// Per-block masses m_i = v_i² + v_{n+i}².
    pub fn block_masses(&self, v: &AlgebraVector<S>) -> Result<Vec<S>> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                v[i].clone() * v[i].clone()
                    + v[self.n + i].clone() * v[self.n + i].clone()
            })
            .collect())
    }
}

/// Frame labels e1, …, e2n, ξ for the Heisenberg algebra.
pub fn heisenberg_frame_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=2 * n).map(|i| format!("e{i}")).collect();
    names.push("ξ".into());
    names
}

/// A vector split along the frame blocks: x-block, y-block, ξ- and
/// ζ-coefficients (θ = 0 on the Heisenberg layout, which has no ζ).
#[derive(Debug, Clone)]
pub struct FieldDecomposition<S> {
    pub x: Vec<S>,
    pub y: Vec<S>,
    pub eta: S,
    pub theta: S,
}

impl<S: Scalar> FieldDecomposition<S> {
    /// Split for block size n; `has_zeta` selects the 2n+2 oscillator
    /// layout over the 2n+1 Heisenberg one.
    pub fn split(v: &AlgebraVector<S>, n: usize, has_zeta: bool) -> Result<Self> {
        let dim = 2 * n + 1 + usize::from(has_zeta);
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
        Ok(Self {
            x: (0..n).map(|i| v[i].clone()).collect(),
            y: (0..n).map(|i| v[n + i].clone()).collect(),
            eta: v[2 * n].clone(),
            theta: if has_zeta { v[2 * n + 1].clone() } else { S::zero() },
        })
    }
}

/// Build the oscillator algebra for a parameter set (orthonormal frame).
pub fn oscillator_algebra<S: Scalar>(spec: &OscillatorSpec<S>) -> Result<MetricLieAlgebra<S>> {
    let n = spec.n;
    let dim = spec.dim();
    let mut entries = Vec::with_capacity(3 * n);
    for i in 0..n {
        entries.push((i, n + i, 2 * n, S::one()));
        entries.push((2 * n + 1, i, n + i, spec.lambda[i].clone()));
        entries.push((2 * n + 1, n + i, i, -spec.lambda[i].clone()));
    }
    MetricLieAlgebra::new(dim, &entries, None)
}

/// Build the Heisenberg algebra of dimension 2n + 1 (orthonormal frame).
pub fn heisenberg_algebra<S: Scalar>(n: usize) -> Result<MetricLieAlgebra<S>> {
    if n == 0 {
        return Err(Error::InvalidInput("Heisenberg family needs n ≥ 1".into()));
    }
    let dim = 2 * n + 1;
    let entries: Vec<(usize, usize, usize, S)> =
        (0..n).map(|i| (i, n + i, 2 * n, S::one())).collect();
    MetricLieAlgebra::new(dim, &entries, None)
}

/// Shape operator A_V = −∇V of a left-invariant field in closed form,
/// as a matrix whose j-th column is A_V e_j:
///
/// ```text
/// A_V Z = ½η(V)φZ + ½η(Z)φV − θ(Z)E_λφV + ½⟨φV, Z⟩ξ.
/// ```
///
/// Linear in V, so no unit-length requirement; valid on the orthonormal
/// oscillator frame.
pub fn closed_nomizu<S: Scalar>(
    spec: &OscillatorSpec<S>,
    v: &AlgebraVector<S>,
) -> Result<Matrix<S>> {
    let dim = spec.dim();
    if v.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.dim(),
        });
    }
    let contact = ContactData::oscillator(spec.n);
    let parts = spec.decompose(v)?;
    let phi_v = contact.phi(v)?;
    let e_phi_v = spec.e_lambda(&phi_v)?;
    let half = S::from_ratio(1, 2);

    let mut columns: Vec<AlgebraVector<S>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let e_j = AlgebraVector::basis(dim, j);
        let mut col = contact.phi(&e_j)?.scale(&(half.clone() * parts.eta.clone()));
        if j == 2 * spec.n {
            // η(e_j) = 1
            col.add_scaled(&phi_v, &half);
        }
        if j == 2 * spec.n + 1 {
            // θ(e_j) = 1
            col.add_scaled(&e_phi_v, &-S::one());
        }
        // ⟨φV, e_j⟩ is the j-th coefficient on the orthonormal frame.
        let mut xi_coeff = AlgebraVector::zero(dim);
        let w = half.clone() * phi_v[j].clone();
        if !w.is_zero() {
            xi_coeff.add_scaled(&AlgebraVector::basis(dim, 2 * spec.n), &w);
        }
        columns.push(col.add(&xi_coeff));
    }

    let mut matrix = vec![vec![S::zero(); dim]; dim];
    for (j, col) in columns.iter().enumerate() {
        for i in 0..dim {
            matrix[i][j] = col[i].clone();
        }
    }
    Ok(matrix)
}

/// Curvature of the oscillator metric as an invariant expression in the
/// contact data (φ, η, θ, ξ, ζ) rather than frame components:
///
/// ```text
/// R(X,Y)Z = −[ ½⟨φX,Y⟩φZ + ¼(⟨φX,Z⟩φY − ⟨φY,Z⟩φX)
///            + ¼(η(Y)X − η(X)Y)η(Z)
///            + ¼(η(X)⟨Y,Z⟩ − η(Y)⟨X,Z⟩)ξ
///            + ¼(η(X)θ(Y) − η(Y)θ(X))(η(Z)ζ − θ(Z)ξ) ].
/// ```
///
/// The ζ-legs of the last bracket cancel against the other terms, so the
/// result agrees with the frame-component table everywhere.
pub fn closed_curvature<S: Scalar>(
    spec: &OscillatorSpec<S>,
    x: &AlgebraVector<S>,
    y: &AlgebraVector<S>,
    z: &AlgebraVector<S>,
) -> Result<AlgebraVector<S>> {
    let dim = spec.dim();
    for v in [x, y, z] {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
    }
    let contact = ContactData::oscillator(spec.n);
    let quarter = S::from_ratio(1, 4);
    let half = S::from_ratio(1, 2);

    let phi_x = contact.phi(x)?;
    let phi_y = contact.phi(y)?;
    let phi_z = contact.phi(z)?;
    let eta_x = contact.eta(x)?;
    let eta_y = contact.eta(y)?;
    let eta_z = contact.eta(z)?;
    let theta_x = contact.theta(x)?;
    let theta_y = contact.theta(y)?;
    let theta_z = contact.theta(z)?;
    let dot = |a: &AlgebraVector<S>, b: &AlgebraVector<S>| -> S {
        let mut sum = S::zero();
        for i in 0..dim {
            sum = sum + a[i].clone() * b[i].clone();
        }
        sum
    };

    let mut total = AlgebraVector::zero(dim);
    // ½⟨φX, Y⟩ φZ
    total.add_scaled(&phi_z, &(half * dot(&phi_x, y)));
    // ¼(⟨φX, Z⟩ φY − ⟨φY, Z⟩ φX)
    total.add_scaled(&phi_y, &(quarter.clone() * dot(&phi_x, z)));
    total.add_scaled(&phi_x, &-(quarter.clone() * dot(&phi_y, z)));
    // ¼(η(Y)X − η(X)Y) η(Z)
    total.add_scaled(x, &(quarter.clone() * eta_y.clone() * eta_z.clone()));
    total.add_scaled(y, &-(quarter.clone() * eta_x.clone() * eta_z.clone()));
    // ¼(η(X)⟨Y,Z⟩ − η(Y)⟨X,Z⟩) ξ
    let xi = contact.xi();
    total.add_scaled(
        &xi,
        &(quarter.clone() * (eta_x.clone() * dot(y, z) - eta_y.clone() * dot(x, z))),
    );
    // ¼(η(X)θ(Y) − η(Y)θ(X)) (η(Z)ζ − θ(Z)ξ)
    let pair = eta_x * theta_y - eta_y * theta_x;
    if !pair.is_zero() {
        let zeta = contact.zeta().expect("oscillator layout has ζ");
        let mut tail = zeta.scale(&eta_z);
        tail.add_scaled(&xi, &-theta_z);
        total.add_scaled(&tail, &(quarter * pair));
    }
    Ok(total.neg())
}

/// The quadratic μ² + linear·μ + constant whose roots are the two squared
/// singular values of the shape operator not forced by the layout.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularPolynomial<S> {
    pub linear: S,
    pub constant: S,
}

impl<S: Scalar> SingularPolynomial<S> {
    pub fn eval(&self, mu: &S) -> S {
        mu.clone() * mu.clone() + self.linear.clone() * mu.clone() + self.constant.clone()
    }

    /// Roots on the float path, larger first. The roots are squared
    /// singular values, hence nonnegative; rounding can push the
    /// discriminant or the smaller root slightly below zero, so both are
    /// clamped.
    pub fn roots_f64(&self) -> (f64, f64) {
        let b = self.linear.to_f64();
        let c = self.constant.to_f64();
        let disc = (b * b - 4.0 * c).max(0.0);
        let s = disc.sqrt();
        (((-b + s) / 2.0).max(0.0), ((-b - s) / 2.0).max(0.0))
    }

    /// The full squared-singular-value multiset of a unit e-block field on
    /// the 2n+2 layout, descending: the two roots, ¼, and 2n−1 zeros.
    pub fn sigma_sq_spectrum(&self, n: usize) -> Vec<f64> {
        let (hi, lo) = self.roots_f64();
        let mut out = vec![hi, lo, 0.25];
        out.extend(std::iter::repeat(0.0).take(2 * n - 1));
        out.sort_by(|a, b| b.partial_cmp(a).unwrap());
        out
    }
}

/// Closed form for the squared singular values of a **unit** field tangent
/// to the e-block (η = θ = 0): with s₁ = Σλ_i m_i and s₂ = Σλ_i² m_i over
/// block masses m_i, the two nontrivial values solve
///
/// ```text
/// μ² − (¼ + s₂) μ + ¼ (s₂ − s₁²) = 0,
/// ```
///
/// and the rest of the multiset is {¼} ∪ {0, …} (2n−1 zeros).
pub fn singular_poly<S: Scalar>(
    spec: &OscillatorSpec<S>,
    v: &AlgebraVector<S>,
) -> Result<SingularPolynomial<S>> {
    let parts = spec.decompose(v)?;
    let tol = S::identity_tolerance();
    if parts.eta.abs() > tol || parts.theta.abs() > tol {
        return Err(Error::InvalidInput(
            "singular polynomial needs a field tangent to the e-block (η = θ = 0)".into(),
        ));
    }
    let masses = spec.block_masses(v)?;
    let mut total_mass = S::zero();
    let mut s1 = S::zero();
    let mut s2 = S::zero();
    for (m, l) in masses.iter().zip(spec.lambda()) {
        total_mass = total_mass + m.clone();
        s1 = s1 + l.clone() * m.clone();
        s2 = s2 + l.clone() * l.clone() * m.clone();
    }
    if (total_mass.clone() - S::one()).abs() > tol {
        return Err(Error::NotUnit {
            norm_sq: format!("{total_mass}"),
        });
    }
    let quarter = S::from_ratio(1, 4);
    Ok(SingularPolynomial {
        linear: -(quarter.clone() + s2.clone()),
        constant: quarter * (s2 - s1.clone() * s1),
    })
}

/// Closed-form minimality test for a unit field tangent to the e-block.
///
/// With support s = {i : m_i > tol}, the field is minimal exactly when the
/// λ_i² agree on s and either the λ_i share one sign on s or Σλ_i m_i = 0.
/// Blocks carrying no mass place no constraint, so one-block fields pass
/// regardless of the other parameters.
pub fn classify_minimal_xy(
    spec: &OscillatorSpec<f64>,
    v: &AlgebraVector<f64>,
    tol: f64,
) -> Result<bool> {
    let parts = spec.decompose(v)?;
    if parts.eta.abs() > tol || parts.theta.abs() > tol {
        return Err(Error::InvalidInput(
            "minimality classifier needs a field tangent to the e-block".into(),
        ));
    }
    let masses = spec.block_masses(v)?;
    let support: Vec<usize> = (0..spec.n()).filter(|&i| masses[i] > tol).collect();
    if support.is_empty() {
        return Err(Error::ZeroVector);
    }
    let lam = spec.lambda();
    let sq_ref = lam[support[0]] * lam[support[0]];
    let squares_agree = support
        .iter()
        .all(|&i| (lam[i] * lam[i] - sq_ref).abs() <= tol);
    if !squares_agree {
        return Ok(false);
    }
    let same_sign = support.iter().all(|&i| lam[i] > 0.0)
        || support.iter().all(|&i| lam[i] < 0.0);
    if same_sign {
        return Ok(true);
    }
    let s1: f64 = support.iter().map(|&i| lam[i] * masses[i]).sum();
    Ok(s1.abs() <= tol)
}

/// Membership in the closed-form harmonic-map family:
/// ±ξ, ±ζ, and the unit e-block fields whose mass support meets only one
/// λ²-level (m_i m_j = 0 whenever λ_i² ≠ λ_j²).
pub fn harmonic_map_family_contains(
    spec: &OscillatorSpec<f64>,
    v: &AlgebraVector<f64>,
    tol: f64,
) -> Result<bool> {
    let dim = spec.dim();
    if v.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.dim(),
        });
    }
    let contact = ContactData::oscillator(spec.n());
    let xi = contact.xi();
    let zeta = contact.zeta().expect("oscillator layout has ζ");
    for pole in [&xi, &zeta] {
        if v.sub(pole).max_abs() <= tol || v.add(pole).max_abs() <= tol {
            return Ok(true);
        }
    }
    let parts = spec.decompose(v)?;
    if parts.eta.abs() > tol || parts.theta.abs() > tol {
        return Ok(false);
    }
    let masses = spec.block_masses(v)?;
    let support: Vec<usize> = (0..spec.n()).filter(|&i| masses[i] > tol).collect();
    if support.is_empty() {
        return Err(Error::ZeroVector);
    }
    let lam = spec.lambda();
    let sq_ref = lam[support[0]] * lam[support[0]];
    Ok(support
        .iter()
        .all(|&i| (lam[i] * lam[i] - sq_ref).abs() <= tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use num::Zero;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn osc1_rat() -> (OscillatorSpec<Rat>, MetricLieAlgebra<Rat>) {
        let spec = OscillatorSpec::new(1, vec![rat(1, 1)]).unwrap();
        let alg = oscillator_algebra(&spec).unwrap();
        (spec, alg)
    }

    #[test]
    fn spec_validation() {
        assert!(OscillatorSpec::<f64>::new(0, vec![]).is_err());
        assert!(OscillatorSpec::new(2, vec![1.0]).is_err());
        assert!(OscillatorSpec::new(2, vec![1.0, 0.0]).is_err());
        assert!(OscillatorSpec::new(2, vec![1.0, -2.0]).is_ok());
    }

    #[test]
    fn closed_nomizu_matches_connection() {
        // Exact agreement with −∇V column by column, n = 1 and n = 2.
        for (n, lambda) in [(1, vec![rat(2, 1)]), (2, vec![rat(1, 1), rat(-3, 2)])] {
            let spec = OscillatorSpec::new(n, lambda).unwrap();
            let alg = oscillator_algebra(&spec).unwrap();
            let conn = alg.koszul_connection().unwrap();
            let dim = spec.dim();
            // A dense test vector touching every block.
            let v = AlgebraVector::new(
                (0..dim).map(|i| rat(i as i64 + 1, 3)).collect::<Vec<_>>(),
            );
            let a = closed_nomizu(&spec, &v).unwrap();
            for j in 0..dim {
                let e_j = AlgebraVector::basis(dim, j);
                let expected = conn.covariant_derivative(&e_j, &v).neg();
                for i in 0..dim {
                    assert_eq!(a[i][j], expected[i], "column {j}, row {i}");
                }
            }
        }
    }

    #[test]
    fn closed_nomizu_frozen_columns() {
        // n = 1, λ = 1, V = e1: columns are (0, ½ξ, ½e2, −e2).
        let (spec, _) = osc1_rat();
        let v = AlgebraVector::basis(4, 0);
        let a = closed_nomizu(&spec, &v).unwrap();
        let col = |j: usize| AlgebraVector::new((0..4).map(|i| a[i][j].clone()).collect::<Vec<_>>());
        assert!(col(0).is_zero());
        assert_eq!(col(1), AlgebraVector::basis(4, 2).scale(&rat(1, 2)));
        assert_eq!(col(2), AlgebraVector::basis(4, 1).scale(&rat(1, 2)));
        assert_eq!(col(3), AlgebraVector::basis(4, 1).neg());
    }

    #[test]
    fn nomizu_of_the_distinguished_fields() {
        let (spec, _) = osc1_rat();
        let contact = ContactData::oscillator(1);
        // A_ξ = ½φ.
        let a = closed_nomizu(&spec, &contact.xi()).unwrap();
        for j in 0..4 {
            let e_j = AlgebraVector::basis(4, j);
            let expected = contact.phi(&e_j).unwrap().scale(&rat(1, 2));
            for i in 0..4 {
                assert_eq!(a[i][j], expected[i]);
            }
        }
        // A_ζ = 0.
        let a = closed_nomizu(&spec, &contact.zeta().unwrap()).unwrap();
        assert!(a.iter().flatten().all(|c| c.is_zero()));
    }

    #[test]
    fn closed_curvature_matches_tensor_exactly() {
        // Random small-rational triples: both routes are exact, so compare
        // with assert_eq.
        let spec = OscillatorSpec::new(2, vec![rat(1, 1), rat(-5, 2)]).unwrap();
        let alg = oscillator_algebra(&spec).unwrap();
        let cur = alg.curvature(&alg.koszul_connection().unwrap());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let dim = spec.dim();
        for _ in 0..40 {
            let mut pick = || {
                AlgebraVector::new(
                    (0..dim)
                        .map(|_| rat(rng.gen_range(-3i64..=3), 1))
                        .collect::<Vec<_>>(),
                )
            };
            let (x, y, z) = (pick(), pick(), pick());
            let via_table = cur.evaluate(&x, &y, &z);
            let via_form = closed_curvature(&spec, &x, &y, &z).unwrap();
            assert_eq!(via_table, via_form);
        }
    }

    #[test]
    fn closed_curvature_frozen_values() {
        let (spec, _) = osc1_rat();
        let e1 = AlgebraVector::<Rat>::basis(4, 0);
        let e2 = AlgebraVector::<Rat>::basis(4, 1);
        let xi = AlgebraVector::<Rat>::basis(4, 2);
        let zeta = AlgebraVector::<Rat>::basis(4, 3);
        // R(e1, ξ)ξ = −¼ e1.
        assert_eq!(
            closed_curvature(&spec, &e1, &xi, &xi).unwrap(),
            e1.scale(&rat(-1, 4))
        );
        // R(ξ, e2)e1 = 0 even though R(ξ, e2)ξ = ¼ e2.
        assert!(closed_curvature(&spec, &xi, &e2, &e1).unwrap().is_zero());
        assert_eq!(
            closed_curvature(&spec, &xi, &e2, &xi).unwrap(),
            e2.scale(&rat(1, 4))
        );
        // The ζ-legs cancel: R(ζ, ξ)ξ = 0.
        assert!(closed_curvature(&spec, &zeta, &xi, &xi).unwrap().is_zero());
        assert!(closed_curvature(&spec, &zeta, &xi, &zeta).unwrap().is_zero());
    }

    #[test]
    fn singular_polynomial_frozen_cases() {
        // n = 1, λ = 1, V = e1: μ² − (5/4)μ, roots {5/4, 0},
        // spectrum {5/4, ¼, 0, 0}.
        let (spec, _) = osc1_rat();
        let poly = singular_poly(&spec, &AlgebraVector::basis(4, 0)).unwrap();
        assert_eq!(poly.linear, rat(-5, 4));
        assert_eq!(poly.constant, rat(0, 1));
        let spectrum = poly.sigma_sq_spectrum(1);
        let expected = [1.25, 0.25, 0.0, 0.0];
        for (a, b) in spectrum.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }

        // n = 2, λ = (1, −1), balanced masses: roots {1, ¼}, double ¼.
        let spec = OscillatorSpec::new(2, vec![1.0, -1.0]).unwrap();
        let h = 0.5f64.sqrt();
        let v = AlgebraVector::new(vec![h, h, 0.0, 0.0, 0.0, 0.0]);
        let poly = singular_poly(&spec, &v).unwrap();
        let (hi, lo) = poly.roots_f64();
        assert!((hi - 1.0).abs() < 1e-12 && (lo - 0.25).abs() < 1e-12);
        let spectrum = poly.sigma_sq_spectrum(2);
        let expected = [1.0, 0.25, 0.25, 0.0, 0.0, 0.0];
        for (a, b) in spectrum.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_polynomial_rejects_bad_fields() {
        let (spec, _) = osc1_rat();
        // Not tangent to the e-block.
        let v = AlgebraVector::<Rat>::basis(4, 2);
        assert!(matches!(
            singular_poly(&spec, &v),
            Err(Error::InvalidInput(_))
        ));
        // Not unit.
        let v = AlgebraVector::new(vec![rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert!(matches!(singular_poly(&spec, &v), Err(Error::NotUnit { .. })));
    }

    #[test]
    fn minimality_classifier_cases() {
        let tol = 1e-9;
        // Same-sign equal λ: every unit e-block field is minimal.
        let spec = OscillatorSpec::new(2, vec![1.0, 1.0]).unwrap();
        let h = 0.5f64.sqrt();
        let v = AlgebraVector::new(vec![h, 0.0, 0.0, h, 0.0, 0.0]);
        assert!(classify_minimal_xy(&spec, &v, tol).unwrap());

        // Opposite signs: balanced masses pass, unbalanced fail.
        let spec = OscillatorSpec::new(2, vec![1.0, -1.0]).unwrap();
        let v = AlgebraVector::new(vec![h, h, 0.0, 0.0, 0.0, 0.0]);
        assert!(classify_minimal_xy(&spec, &v, tol).unwrap());
        let (a, b) = (0.55f64.sqrt(), 0.45f64.sqrt());
        let v = AlgebraVector::new(vec![a, b, 0.0, 0.0, 0.0, 0.0]);
        assert!(!classify_minimal_xy(&spec, &v, tol).unwrap());

        // Distinct λ²: mass in both blocks fails, one block passes.
        let spec = OscillatorSpec::new(2, vec![1.0, 2.0]).unwrap();
        let v = AlgebraVector::new(vec![h, h, 0.0, 0.0, 0.0, 0.0]);
        assert!(!classify_minimal_xy(&spec, &v, tol).unwrap());
        let v = AlgebraVector::new(vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(classify_minimal_xy(&spec, &v, tol).unwrap());

        // Mixed with ξ: not an e-block field.
        let v = AlgebraVector::new(vec![h, 0.0, 0.0, 0.0, h, 0.0]);
        assert!(classify_minimal_xy(&spec, &v, 1e-9).is_err());
    }

    #[test]
    fn harmonic_map_family_cases() {
        let tol = 1e-9;
        let spec = OscillatorSpec::new(2, vec![1.0, 2.0]).unwrap();
        let contact = ContactData::oscillator(2);
        let xi = contact.xi();
        let zeta = contact.zeta().unwrap();
        assert!(harmonic_map_family_contains(&spec, &xi, tol).unwrap());
        assert!(harmonic_map_family_contains(&spec, &xi.neg(), tol).unwrap());
        assert!(harmonic_map_family_contains(&spec, &zeta, tol).unwrap());

        let h = 0.5f64.sqrt();
        // Mass on both λ²-levels of (1, 2): excluded.
        let v = AlgebraVector::new(vec![h, h, 0.0, 0.0, 0.0, 0.0]);
        assert!(!harmonic_map_family_contains(&spec, &v, tol).unwrap());
        // One block only: included.
        let v = AlgebraVector::new(vec![0.0, h, 0.0, h, 0.0, 0.0]);
        assert!(harmonic_map_family_contains(&spec, &v, tol).unwrap());
        // ξ/ζ mixture: excluded.
        let v = AlgebraVector::new(vec![0.0, 0.0, 0.0, 0.0, h, h]);
        assert!(!harmonic_map_family_contains(&spec, &v, tol).unwrap());
        // Equal λ² with either sign pattern: every e-block field included.
        let spec = OscillatorSpec::new(2, vec![1.0, -1.0]).unwrap();
        let v = AlgebraVector::new(vec![0.6, 0.0, 0.0, 0.8, 0.0, 0.0]);
        assert!(harmonic_map_family_contains(&spec, &v, tol).unwrap());
    }

    #[test]
    fn random_xy_fields_match_spectrum_via_gram_matrix() {
        // Cross-check the polynomial against the eigenvalues of AᵗA built
        // from the closed shape operator.
        let spec = OscillatorSpec::new(2, vec![0.9, -1.7]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let mut raw = [0.0f64; 4];
            for r in raw.iter_mut() {
                *r = rng.gen_range(-1.0..1.0);
            }
            let norm = raw.iter().map(|a| a * a).sum::<f64>().sqrt();
            if norm < 1e-3 {
                continue;
            }
            let v = AlgebraVector::new(vec![
                raw[0] / norm,
                raw[1] / norm,
                raw[2] / norm,
                raw[3] / norm,
                0.0,
                0.0,
            ]);
            let a = closed_nomizu(&spec, &v).unwrap();
            let dim = 6;
            let mut gram = vec![vec![0.0f64; dim]; dim];
            for i in 0..dim {
                for j in 0..dim {
                    gram[i][j] = (0..dim).map(|k| a[k][i] * a[k][j]).sum();
                }
            }
            let (eigvals, _) = crate::linalg::jacobi_eigen_sym(&gram).unwrap();
            let closed = singular_poly(&spec, &v).unwrap().sigma_sq_spectrum(2);
            for (have, want) in eigvals.iter().zip(&closed) {
                assert!(
                    (have - want).abs() < 1e-9,
                    "spectrum mismatch: {eigvals:?} vs {closed:?}"
                );
            }
        }
    }
}
