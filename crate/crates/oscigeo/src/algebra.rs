//! Metric Lie algebras and their left-invariant Levi-Civita calculus.
//!
//! A left-invariant metric on a Lie group is a positive-definite inner
//! product on its Lie algebra; left-invariant vector fields are constant
//! coefficient vectors in a fixed frame. The Koszul formula then has no
//! derivative terms,
//!
//! ```text
//! 2 g(∇_X Y, Z) = g([X,Y], Z) − g([Y,Z], X) + g([Z,X], Y),
//! ```
//!
//! so the connection is a finite table ∇_{e_i} e_j and the curvature tensor
//! is plain structure-constant arithmetic. Everything in this module is
//! generic over the scalar path: exact rationals or `f64`.
//!
//! Curvature convention: this crate uses
//!
//! ```text
//! R(X, Y)Z = ∇_Y ∇_X Z − ∇_X ∇_Y Z + ∇_{[X,Y]} Z,
//! ```
//!
//! the sign under which the oscillator components come out as
//! R(e_i, ξ)ξ = −¼ e_i; the acceptance suite pins that normalization.

use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use crate::Result;
use serde::Deserialize;

/// Element of a Lie algebra, stored as coefficients in the defining frame.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraVector<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> AlgebraVector<S> {
    /// Wrap a coefficient vector.
    pub fn new(coeffs: Vec<S>) -> Self {
        Self { coeffs }
    }

    /// The zero vector of dimension `dim`.
    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: vec![S::zero(); dim],
        }
    }

    /// The frame vector e_index (0-based).
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut coeffs = vec![S::zero(); dim];
        coeffs[index] = S::one();
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|a| a.clone() * factor.clone())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }

    /// In-place `self += factor · other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &S) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.clone() + factor.clone() * b.clone();
        }
    }

    /// Largest coefficient magnitude (frame-dependent residual measure).
    pub fn max_abs(&self) -> S {
        let mut best = S::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lossy conversion onto the float path.
    pub fn to_f64(&self) -> AlgebraVector<f64> {
        AlgebraVector::new(self.coeffs.iter().map(|c| c.to_f64()).collect())
    }

    /// Human-readable linear combination, e.g. `1/2 ξ − 2 e1`.
    pub fn display_in_frame(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.dim());
        let mut out = String::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag.is_one() {
                out.push_str(name);
            } else {
                out.push_str(&format!("{} {}", mag, name));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<S: Scalar> std::ops::Index<usize> for AlgebraVector<S> {
    type Output = S;
    fn index(&self, index: usize) -> &S {
        &self.coeffs[index]
    }
}

/// External JSON document for a custom algebra: structure constants as
/// 1-based sparse entries `[i, j, k, value]` meaning `[e_i, e_j] ∋ value·e_k`,
/// plus an optional dense row-major metric (identity when absent).
#[derive(Debug, Deserialize)]
struct AlgebraDocument {
    dim: usize,
    structure: Vec<(usize, usize, usize, f64)>,
    #[serde(default)]
    metric: Option<Vec<Vec<f64>>>,
}

/// A Lie algebra with an inner product: structure constants c_ij^k in a
/// fixed frame plus a positive-definite metric on that frame.
///
/// Construction validates antisymmetry, the Jacobi identity, and metric
/// symmetry/positive-definiteness at the tolerance of the scalar path
/// (exactly zero for rationals, `1e-12` for floats).
#[derive(Debug, Clone)]
pub struct MetricLieAlgebra<S> {
    dim: usize,
    structure: Vec<Vec<Vec<S>>>,
    metric: Matrix<S>,
    metric_inv: Matrix<S>,
}

impl<S: Scalar> MetricLieAlgebra<S> {
    /// Build from 0-based sparse structure entries `(i, j, k, value)` with
    /// `[e_i, e_j] ∋ value·e_k`. When only one orientation of a bracket is
    /// given, the antisymmetric mirror is filled in automatically; when both
    /// are given they must already be antisymmetric. `metric` defaults to
    /// the identity (orthonormal frame).
    pub fn new(
        dim: usize,
        entries: &[(usize, usize, usize, S)],
        metric: Option<Matrix<S>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        let mut structure = vec![vec![vec![S::zero(); dim]; dim]; dim];
        let mut given = vec![vec![false; dim]; dim];
        for (i, j, k, value) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "structure index ({i}, {j}, {k}) out of range for dim {dim}"
                )));
            }
            structure[*i][*j][*k] = structure[*i][*j][*k].clone() + value.clone();
            given[*i][*j] = true;
        }
        for i in 0..dim {
            for j in 0..dim {
                if given[i][j] && !given[j][i] {
                    for k in 0..dim {
                        structure[j][i][k] = -structure[i][j][k].clone();
                    }
                    given[j][i] = true;
                }
            }
        }

        let metric = metric.unwrap_or_else(|| linalg::identity::<S>(dim));
        if metric.len() != dim || metric.iter().any(|row| row.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: metric.len(),
            });
        }

        let tol = S::identity_tolerance();

        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let defect =
                        (structure[i][j][k].clone() + structure[j][i][k].clone()).abs();
                    if defect > tol {
                        return Err(Error::InvalidAlgebra(format!(
                            "structure constants are not antisymmetric at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let defect = (metric[i][j].clone() - metric[j][i].clone()).abs();
                if defect > tol {
                    return Err(Error::InvalidAlgebra("metric is not symmetric".into()));
                }
            }
        }
        if !linalg::is_positive_definite(&metric) {
            return Err(Error::SingularMetric);
        }
        let metric_inv = linalg::invert(&metric).ok_or(Error::SingularMetric)?;

        let algebra = Self {
            dim,
            structure,
            metric,
            metric_inv,
        };
        let jacobi = algebra.jacobi_residual();
        if jacobi > tol {
            return Err(Error::InvalidAlgebra(format!(
                "Jacobi identity fails with residual {jacobi}"
            )));
        }
        Ok(algebra)
    }

    /// The abelian algebra of dimension `dim` with orthonormal frame.
    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, &[], None).expect("abelian algebra is always valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric(&self) -> &Matrix<S> {
        &self.metric
    }

    pub fn metric_inverse(&self) -> &Matrix<S> {
        &self.metric_inv
    }

    /// Structure constant c_ij^k.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &S {
        &self.structure[i][j][k]
    }

    /// Lie bracket of two coefficient vectors.
    pub fn bracket(&self, x: &AlgebraVector<S>, y: &AlgebraVector<S>) -> Result<AlgebraVector<S>> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out: AlgebraVector<S> = AlgebraVector::zero(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let factor = x[i].clone() * y[j].clone();
                for k in 0..self.dim {
                    if !self.structure[i][j][k].is_zero() {
                        out.coeffs[k] = out.coeffs[k].clone()
                            + factor.clone() * self.structure[i][j][k].clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Metric inner product g(x, y).
    pub fn inner(&self, x: &AlgebraVector<S>, y: &AlgebraVector<S>) -> S {
        assert_eq!(x.dim(), self.dim);
        assert_eq!(y.dim(), self.dim);
        let mut sum = S::zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                sum = sum + x[i].clone() * self.metric[i][j].clone() * y[j].clone();
            }
        }
        sum
    }

    /// Squared metric norm g(x, x).
    pub fn norm_sq(&self, x: &AlgebraVector<S>) -> S {
        self.inner(x, x)
    }

    /// Metric norm; fails on the exact path when |x| is irrational.
    pub fn norm(&self, x: &AlgebraVector<S>) -> Result<S> {
        let sq = self.norm_sq(x);
        sq.try_sqrt()
            .ok_or_else(|| Error::NotRepresentable(format!("sqrt of {sq}")))
    }

    /// Max-abs residual of the Jacobi identity over all frame triples.
    pub fn jacobi_residual(&self) -> S {
        let mut worst = S::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    for l in 0..self.dim {
                        let mut sum = S::zero();
                        for m in 0..self.dim {
                            sum = sum
                                + self.structure[i][j][m].clone()
                                    * self.structure[m][k][l].clone()
                                + self.structure[j][k][m].clone()
                                    * self.structure[m][i][l].clone()
                                + self.structure[k][i][m].clone()
                                    * self.structure[m][j][l].clone();
                        }
                        let a = sum.abs();
                        if a > worst {
                            worst = a;
                        }
                    }
                }
            }
        }
        worst
    }

    /// Levi-Civita connection table from the Koszul formula (left-invariant
    /// form, no derivative terms). Fails only if the metric is unusable.
    pub fn koszul_connection(&self) -> Result<ConnectionTable<S>> {
        let dim = self.dim;
        let half = S::from_ratio(1, 2);
        let mut gamma = vec![vec![AlgebraVector::zero(dim); dim]; dim];
        let frame: Vec<AlgebraVector<S>> =
            (0..dim).map(|i| AlgebraVector::basis(dim, i)).collect();
        // Precompute brackets of frame vectors.
        let mut br = vec![vec![AlgebraVector::zero(dim); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                br[i][j] = AlgebraVector::new(self.structure[i][j].clone());
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                // rhs_k = ½( g([e_i,e_j],e_k) − g([e_j,e_k],e_i) + g([e_k,e_i],e_j) )
                let mut rhs = vec![S::zero(); dim];
                for (k, rhs_k) in rhs.iter_mut().enumerate() {
                    let term = self.inner(&br[i][j], &frame[k])
                        - self.inner(&br[j][k], &frame[i])
                        + self.inner(&br[k][i], &frame[j]);
                    *rhs_k = half.clone() * term;
                }
                // Coordinates of ∇_{e_i} e_j solve g · γ = rhs.
                let mut coords = vec![S::zero(); dim];
                for (m, coord) in coords.iter_mut().enumerate() {
                    let mut sum = S::zero();
                    for (k, rhs_k) in rhs.iter().enumerate() {
                        sum = sum + self.metric_inv[m][k].clone() * rhs_k.clone();
                    }
                    *coord = sum;
                }
                gamma[i][j] = AlgebraVector::new(coords);
            }
        }
        Ok(ConnectionTable { gamma })
    }

    /// Full curvature tensor from a connection table.
    pub fn curvature(&self, conn: &ConnectionTable<S>) -> CurvatureTensor<S> {
        let dim = self.dim;
        let mut r = vec![vec![vec![AlgebraVector::zero(dim); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    // R(e_i, e_j)e_k = ∇_{e_j}(∇_{e_i}e_k) − ∇_{e_i}(∇_{e_j}e_k)
                    //                + ∇_{[e_i,e_j]}e_k
                    let mut value = conn.derive_along_frame(j, &conn.gamma[i][k]);
                    value = value.sub(&conn.derive_along_frame(i, &conn.gamma[j][k]));
                    for m in 0..dim {
                        if !self.structure[i][j][m].is_zero() {
                            value.add_scaled(&conn.gamma[m][k], &self.structure[i][j][m]);
                        }
                    }
                    r[i][j][k] = value;
                }
            }
        }
        CurvatureTensor { r }
    }

    fn check_dim(&self, x: &AlgebraVector<S>) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }
}

impl MetricLieAlgebra<f64> {
    /// Parse the JSON algebra document (1-based sparse structure entries,
    /// optional dense metric) and validate it.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraDocument = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("algebra JSON: {e}")))?;
        if doc.dim == 0 {
            return Err(Error::InvalidInput("algebra JSON: dim must be positive".into()));
        }
        let mut entries = Vec::with_capacity(doc.structure.len());
        for (i, j, k, value) in &doc.structure {
            if *i == 0 || *j == 0 || *k == 0 || *i > doc.dim || *j > doc.dim || *k > doc.dim {
                return Err(Error::InvalidInput(format!(
                    "algebra JSON: 1-based index ({i}, {j}, {k}) out of range for dim {}",
                    doc.dim
                )));
            }
            entries.push((*i - 1, *j - 1, *k - 1, *value));
        }
        Self::new(doc.dim, &entries, doc.metric)
    }
}

/// The table ∇_{e_i} e_j of a left-invariant Levi-Civita connection.
#[derive(Debug, Clone)]
pub struct ConnectionTable<S> {
    gamma: Vec<Vec<AlgebraVector<S>>>,
}

impl<S: Scalar> ConnectionTable<S> {
    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    /// ∇_{e_i} e_j.
    pub fn entry(&self, i: usize, j: usize) -> &AlgebraVector<S> {
        &self.gamma[i][j]
    }

    /// ∇_x y for constant-coefficient (left-invariant) fields.
    pub fn covariant_derivative(
        &self,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
    ) -> AlgebraVector<S> {
        let dim = self.dim();
        assert_eq!(x.dim(), dim);
        assert_eq!(y.dim(), dim);
        let mut out = AlgebraVector::zero(dim);
        for i in 0..dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..dim {
                if y[j].is_zero() {
                    continue;
                }
                let factor = x[i].clone() * y[j].clone();
                out.add_scaled(&self.gamma[i][j], &factor);
            }
        }
        out
    }

    /// ∇_{e_i} w for a constant-coefficient w.
    pub fn derive_along_frame(&self, i: usize, w: &AlgebraVector<S>) -> AlgebraVector<S> {
        let dim = self.dim();
        let mut out = AlgebraVector::zero(dim);
        for m in 0..dim {
            if !w[m].is_zero() {
                out.add_scaled(&self.gamma[i][m], &w[m]);
            }
        }
        out
    }

    /// Max-abs residual of ∇_X Y − ∇_Y X = [X, Y] over frame pairs.
    pub fn torsion_residual(&self, alg: &MetricLieAlgebra<S>) -> S {
        let dim = self.dim();
        let mut worst = S::zero();
        for i in 0..dim {
            for j in 0..dim {
                let mut defect = self.gamma[i][j].sub(&self.gamma[j][i]);
                for k in 0..dim {
                    defect.coeffs[k] =
                        defect.coeffs[k].clone() - alg.structure[i][j][k].clone();
                }
                let a = defect.max_abs();
                if a > worst {
                    worst = a;
                }
            }
        }
        worst
    }

    /// Max-abs residual of g(∇_{e_i}e_j, e_k) + g(e_j, ∇_{e_i}e_k) = 0,
    /// the left-invariant form of metric compatibility (valid for any
    /// constant metric, orthonormal or not).
    pub fn metric_compatibility_residual(&self, alg: &MetricLieAlgebra<S>) -> S {
        let dim = self.dim();
        let frame: Vec<AlgebraVector<S>> =
            (0..dim).map(|i| AlgebraVector::basis(dim, i)).collect();
        let mut worst = S::zero();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let defect = (alg.inner(&self.gamma[i][j], &frame[k])
                        + alg.inner(&frame[j], &self.gamma[i][k]))
                    .abs();
                    if defect > worst {
                        worst = defect;
                    }
                }
            }
        }
        worst
    }
}

/// The curvature tensor R(e_i, e_j)e_k on the frame, stored densely.
#[derive(Debug, Clone)]
pub struct CurvatureTensor<S> {
    r: Vec<Vec<Vec<AlgebraVector<S>>>>,
}

impl<S: Scalar> CurvatureTensor<S> {
    pub fn dim(&self) -> usize {
        self.r.len()
    }

    /// Component R(e_i, e_j)e_k.
    pub fn component(&self, i: usize, j: usize, k: usize) -> &AlgebraVector<S> {
        &self.r[i][j][k]
    }

    /// Trilinear evaluation R(x, y)z.
    pub fn evaluate(
        &self,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
        z: &AlgebraVector<S>,
    ) -> AlgebraVector<S> {
        let dim = self.dim();
        assert_eq!(x.dim(), dim);
        assert_eq!(y.dim(), dim);
        assert_eq!(z.dim(), dim);
        let mut out = AlgebraVector::zero(dim);
        for i in 0..dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for k in 0..dim {
                    if z[k].is_zero() {
                        continue;
                    }
                    let factor = xy.clone() * z[k].clone();
                    out.add_scaled(&self.r[i][j][k], &factor);
                }
            }
        }
        out
    }

    /// Max-abs residual of R(X, Y)Z + R(Y, X)Z = 0.
    pub fn antisymmetry_residual(&self) -> S {
        let dim = self.dim();
        let mut worst = S::zero();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let a = self.r[i][j][k].add(&self.r[j][i][k]).max_abs();
                    if a > worst {
                        worst = a;
                    }
                }
            }
        }
        worst
    }

    /// Max-abs residual of the first Bianchi identity
    /// R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0.
    pub fn first_bianchi_residual(&self) -> S {
        let dim = self.dim();
        let mut worst = S::zero();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let a = self.r[i][j][k]
                        .add(&self.r[j][k][i])
                        .add(&self.r[k][i][j])
                        .max_abs();
                    if a > worst {
                        worst = a;
                    }
                }
            }
        }
        worst
    }

    /// Max-abs residual of the pair symmetry
    /// g(R(X,Y)Z, W) = g(R(Z,W)X, Y).
    pub fn pair_symmetry_residual(&self, alg: &MetricLieAlgebra<S>) -> S {
        let dim = self.dim();
        let frame: Vec<AlgebraVector<S>> =
            (0..dim).map(|i| AlgebraVector::basis(dim, i)).collect();
        let mut worst = S::zero();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        let defect = (alg.inner(&self.r[i][j][k], &frame[l])
                            - alg.inner(&self.r[k][l][i], &frame[j]))
                        .abs();
                        if defect > worst {
                            worst = defect;
                        }
                    }
                }
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::{heisenberg_algebra, oscillator_algebra, OscillatorSpec};
    use crate::scalar::Rat;
    use num::Zero;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn osc1() -> MetricLieAlgebra<Rat> {
        oscillator_algebra(&OscillatorSpec::new(1, vec![rat(1, 1)]).unwrap()).unwrap()
    }

    fn basis(dim: usize, i: usize) -> AlgebraVector<Rat> {
        AlgebraVector::basis(dim, i)
    }

    #[test]
    fn oscillator_brackets_match_relations() {
        // Frame order: e1, e2, ξ (index 2), ζ (index 3).
        let alg = osc1();
        let e1 = basis(4, 0);
        let e2 = basis(4, 1);
        let xi = basis(4, 2);
        let zeta = basis(4, 3);

        assert_eq!(alg.bracket(&e1, &e2).unwrap(), xi);
        assert_eq!(alg.bracket(&e2, &e1).unwrap(), xi.neg());
        assert_eq!(alg.bracket(&zeta, &e1).unwrap(), e2);
        assert_eq!(alg.bracket(&zeta, &e2).unwrap(), e1.neg());
        assert!(alg.bracket(&xi, &e1).unwrap().is_zero());
        assert!(alg.bracket(&xi, &zeta).unwrap().is_zero());
        assert!(alg.bracket(&e1, &e1).unwrap().is_zero());
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric() {
        use rand::{Rng, SeedableRng};
        let spec = OscillatorSpec::new(2, vec![0.7, -1.3]).unwrap();
        let alg = oscillator_algebra(&spec).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let x = AlgebraVector::new((0..6).map(|_| rng.gen_range(-2.0..2.0)).collect());
            let y = AlgebraVector::new((0..6).map(|_| rng.gen_range(-2.0..2.0)).collect());
            let z = AlgebraVector::new((0..6).map(|_| rng.gen_range(-2.0..2.0)).collect());
            let anti = alg
                .bracket(&x, &y)
                .unwrap()
                .add(&alg.bracket(&y, &x).unwrap());
            assert!(anti.max_abs() < 1e-12);
            let lin = alg
                .bracket(&x.add(&z), &y)
                .unwrap()
                .sub(&alg.bracket(&x, &y).unwrap())
                .sub(&alg.bracket(&z, &y).unwrap());
            assert!(lin.max_abs() < 1e-12);
        }
    }

    #[test]
    fn abelian_connection_vanishes() {
        let alg = MetricLieAlgebra::<Rat>::abelian(5);
        let conn = alg.koszul_connection().unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert!(conn.entry(i, j).is_zero());
            }
        }
    }

    #[test]
    fn oscillator_connection_spot_entries() {
        let alg = osc1();
        let conn = alg.koszul_connection().unwrap();
        // ∇_{e1} e2 = ½ ξ
        let mut expected = AlgebraVector::zero(4);
        expected.coeffs[2] = rat(1, 2);
        assert_eq!(conn.entry(0, 1), &expected);
        // ∇_ζ ζ = 0 and ∇_ξ ξ = 0
        assert!(conn.entry(3, 3).is_zero());
        assert!(conn.entry(2, 2).is_zero());
        // ∇_ζ e1 = λ e2 = e2
        assert_eq!(conn.entry(3, 0), &basis(4, 1));
        // ∇_{e2} e1 = −½ ξ
        let mut expected = AlgebraVector::zero(4);
        expected.coeffs[2] = rat(-1, 2);
        assert_eq!(conn.entry(1, 0), &expected);
    }

    #[test]
    fn curvature_components_match_table() {
        let alg = osc1();
        let conn = alg.koszul_connection().unwrap();
        let cur = alg.curvature(&conn);
        let e1 = basis(4, 0);
        let e2 = basis(4, 1);
        let xi = basis(4, 2);
        let zeta = basis(4, 3);

        // R(e1, ξ)ξ = −¼ e1 fixes the sign convention.
        assert_eq!(cur.evaluate(&e1, &xi, &xi), e1.scale(&rat(-1, 4)));
        // R(e1, e2)e2 = ¾ e1.
        assert_eq!(cur.evaluate(&e1, &e2, &e2), e1.scale(&rat(3, 4)));
        // R(e1, e2)e1 = −¾ e2.
        assert_eq!(cur.evaluate(&e1, &e2, &e1), e2.scale(&rat(-3, 4)));
        // R(e1, ξ)e1 = ¼ ξ.
        assert_eq!(cur.evaluate(&e1, &xi, &e1), xi.scale(&rat(1, 4)));
        // Everything involving ζ is flat.
        for k in 0..4 {
            assert!(cur.evaluate(&zeta, &basis(4, k), &e1).is_zero());
            assert!(cur.evaluate(&e1, &basis(4, k), &zeta).is_zero());
        }
        // Mixed slots that the component table leaves out are zero ...
        assert!(cur.evaluate(&xi, &e2, &e1).is_zero());
        // ... while the adjacent ξ-slot is not: R(ξ, e2)ξ = ¼ e2.
        assert_eq!(cur.evaluate(&xi, &e2, &xi), e2.scale(&rat(1, 4)));
    }

    #[test]
    fn curvature_identities_exact() {
        for spec in [
            OscillatorSpec::new(1, vec![rat(2, 3)]).unwrap(),
            OscillatorSpec::new(2, vec![rat(1, 1), rat(-5, 2)]).unwrap(),
        ] {
            let alg = oscillator_algebra(&spec).unwrap();
            let conn = alg.koszul_connection().unwrap();
            let cur = alg.curvature(&conn);
            assert!(conn.torsion_residual(&alg).is_zero());
            assert!(conn.metric_compatibility_residual(&alg).is_zero());
            assert!(cur.antisymmetry_residual().is_zero());
            assert!(cur.first_bianchi_residual().is_zero());
            assert!(cur.pair_symmetry_residual(&alg).is_zero());
        }
    }

    #[test]
    fn koszul_handles_non_orthonormal_metrics() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let spec = OscillatorSpec::new(1, vec![0.8]).unwrap();
        let base = oscillator_algebra(&spec).unwrap();
        for _ in 0..5 {
            // g = BᵀB + I is symmetric positive definite.
            let dim = 4;
            let b: Vec<Vec<f64>> = (0..dim)
                .map(|_| (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect())
                .collect();
            let mut g = vec![vec![0.0; dim]; dim];
            for i in 0..dim {
                for j in 0..dim {
                    g[i][j] = (0..dim).map(|k| b[k][i] * b[k][j]).sum::<f64>()
                        + if i == j { 1.0 } else { 0.0 };
                }
            }
            let entries: Vec<(usize, usize, usize, f64)> = (0..dim)
                .flat_map(|i| {
                    let base = &base;
                    (0..dim).flat_map(move |j| {
                        (0..dim).filter_map(move |k| {
                            let c = *base.structure_constant(i, j, k);
                            (c != 0.0).then_some((i, j, k, c))
                        })
                    })
                })
                .collect();
            let alg = MetricLieAlgebra::new(dim, &entries, Some(g)).unwrap();
            let conn = alg.koszul_connection().unwrap();
            let cur = alg.curvature(&conn);
            assert!(conn.torsion_residual(&alg) < 1e-12);
            assert!(conn.metric_compatibility_residual(&alg) < 1e-12);
            assert!(cur.antisymmetry_residual() < 1e-12);
            assert!(cur.first_bianchi_residual() < 1e-12);
            assert!(cur.pair_symmetry_residual(&alg) < 1e-12);
        }
    }

    #[test]
    fn construction_rejects_invalid_input() {
        // Jacobi violation: [e1,e2]=e3, [e1,e3]=e1 fails.
        let bad = MetricLieAlgebra::new(
            3,
            &[(0, 1, 2, rat(1, 1)), (0, 2, 0, rat(1, 1))],
            None,
        );
        assert!(matches!(bad, Err(Error::InvalidAlgebra(_))));

        // Non-positive-definite metric.
        let mut g = linalg::identity::<Rat>(3);
        g[0][0] = rat(-1, 1);
        let bad = MetricLieAlgebra::new(3, &[(0, 1, 2, rat(1, 1))], Some(g));
        assert!(matches!(bad, Err(Error::SingularMetric)));

        // Out-of-range structure index.
        let bad = MetricLieAlgebra::new(2, &[(0, 1, 5, rat(1, 1))], None);
        assert!(matches!(bad, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn json_document_round_trips_oscillator() {
        let text = r#"{
            "dim": 4,
            "structure": [[1, 2, 3, 1.0], [4, 1, 2, 1.0], [4, 2, 1, -1.0]]
        }"#;
        let alg = MetricLieAlgebra::from_json(text).unwrap();
        let built_in = oscillator_algebra(&OscillatorSpec::new(1, vec![1.0]).unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    assert_eq!(
                        alg.structure_constant(i, j, k),
                        built_in.structure_constant(i, j, k)
                    );
                }
            }
        }
        assert!(MetricLieAlgebra::from_json("{\"dim\": 0, \"structure\": []}").is_err());
        assert!(MetricLieAlgebra::from_json("not json").is_err());
        let out_of_range = r#"{"dim": 2, "structure": [[1, 2, 9, 1.0]]}"#;
        assert!(MetricLieAlgebra::from_json(out_of_range).is_err());
    }

    #[test]
    fn heisenberg_is_the_zeta_free_restriction() {
        let h = heisenberg_algebra::<Rat>(1).unwrap();
        assert_eq!(h.dim(), 3);
        let e1 = basis(3, 0);
        let e2 = basis(3, 1);
        let xi = basis(3, 2);
        assert_eq!(h.bracket(&e1, &e2).unwrap(), xi);
        assert!(h.bracket(&e1, &xi).unwrap().is_zero());
        assert!(h.bracket(&e2, &xi).unwrap().is_zero());
    }

    #[test]
    fn display_formats_combinations() {
        let names = ["e1", "e2", "ξ", "ζ"];
        let v = AlgebraVector::new(vec![rat(1, 2), rat(0, 1), rat(-1, 1), rat(2, 1)]);
        assert_eq!(v.display_in_frame(&names), "1/2 e1 - ξ + 2 ζ");
        assert_eq!(AlgebraVector::<Rat>::zero(4).display_in_frame(&names), "0");
        assert_eq!(basis(4, 2).display_in_frame(&names), "ξ");
    }
}
