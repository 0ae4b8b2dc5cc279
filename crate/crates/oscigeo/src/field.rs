//! Extrinsic geometry of a unit left-invariant vector field.
//!
//! A unit field V on a Lie group with left-invariant metric is a map into
//! the unit tangent bundle with its induced (Sasaki) metric. Its geometry
//! is governed by the shape operator A_V X = −∇_X V together with the
//! ambient curvature:
//!
//! * V is **harmonic** when the rough Laplacian satisfies Δ̄V = ‖A_V‖²V;
//! * a **harmonic map** when additionally Σ g^{ij} R(V, A_V e_i)e_j = 0;
//! * **minimal** when the mean-curvature vector of the submanifold V(G)
//!   has no normal component;
//! * **totally geodesic** when the full second fundamental form vanishes,
//!   measured here by the defect Hess_V(X,Y) + A_V Hm_V(X,Y) − ⟨A_VX, A_VY⟩V;
//! * a **geodesic field** when ∇_V V = 0.
//!
//! The bilinear data (Hessian, curvature form, Laplacian, defects) is
//! generic over the scalar path; the spectral layer — singular frames of
//! A_V, the Sasaki-orthonormal framing of V(G), the mean-curvature vector —
//! needs radicals and is `f64`-only.

use crate::algebra::{AlgebraVector, ConnectionTable, CurvatureTensor, MetricLieAlgebra};
use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use crate::Result;

/// Eigenvalues of AᵗA at or below this are treated as rank deficiency.
const SINGULAR_RANK_EPS: f64 = 1e-12;

/// A unit-length left-invariant vector field.
#[derive(Debug, Clone)]
pub struct UnitField<S> {
    v: AlgebraVector<S>,
}

impl<S: Scalar> UnitField<S> {
    /// Wrap a vector that is already unit length for the algebra's metric
    /// (within the scalar path's identity tolerance).
    pub fn new(alg: &MetricLieAlgebra<S>, v: AlgebraVector<S>) -> Result<Self> {
        if v.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: v.dim(),
            });
        }
        let norm_sq = alg.norm_sq(&v);
        if (norm_sq.clone() - S::one()).abs() > S::identity_tolerance() {
            return Err(Error::NotUnit {
                norm_sq: format!("{norm_sq}"),
            });
        }
        Ok(Self { v })
    }

    /// Normalize a nonzero vector, returning the field and the original
    /// norm. Fails on the exact path when the norm is irrational.
    pub fn normalized(alg: &MetricLieAlgebra<S>, v: AlgebraVector<S>) -> Result<(Self, S)> {
        if v.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: v.dim(),
            });
        }
        let norm_sq = alg.norm_sq(&v);
        if norm_sq.is_zero() {
            return Err(Error::ZeroVector);
        }
        let norm = norm_sq
            .clone()
            .try_sqrt()
            .ok_or_else(|| Error::NotRepresentable(format!("sqrt of {norm_sq}")))?;
        let scaled = v.scale(&(S::one() / norm.clone()));
        Ok((Self { v: scaled }, norm))
    }

    pub fn vector(&self) -> &AlgebraVector<S> {
        &self.v
    }
}

/// The shape operator of a unit field: the field itself, the matrix of
/// A_V (column j is A_V e_j = −∇_{e_j}V), and its metric adjoint.
#[derive(Debug, Clone)]
pub struct NomizuData<S> {
    pub v: AlgebraVector<S>,
    pub a: Matrix<S>,
    pub a_t: Matrix<S>,
}

impl<S: Scalar> NomizuData<S> {
    /// A_V x.
    pub fn apply(&self, x: &AlgebraVector<S>) -> AlgebraVector<S> {
        AlgebraVector::new(linalg::mat_vec(&self.a, x.coeffs()))
    }

    /// A_Vᵗ x (adjoint for the algebra's metric).
    pub fn apply_adjoint(&self, x: &AlgebraVector<S>) -> AlgebraVector<S> {
        AlgebraVector::new(linalg::mat_vec(&self.a_t, x.coeffs()))
    }

    /// Column j of the operator matrix, A_V e_j, as a vector.
    pub fn column(&self, j: usize) -> AlgebraVector<S> {
        AlgebraVector::new(self.a.iter().map(|row| row[j].clone()).collect())
    }

    /// ‖A_V‖² = tr(A_Vᵗ A_V), the full squared norm of the operator.
    pub fn total_norm_sq(&self) -> S {
        let dim = self.a.len();
        let mut sum = S::zero();
        for i in 0..dim {
            for k in 0..dim {
                sum = sum + self.a_t[i][k].clone() * self.a[k][i].clone();
            }
        }
        sum
    }
}

/// A metric Lie algebra with its connection table and curvature tensor
/// precomputed: everything the pointwise geometry of a field needs.
#[derive(Debug, Clone)]
pub struct AmbientGeometry<S> {
    algebra: MetricLieAlgebra<S>,
    connection: ConnectionTable<S>,
    curvature: CurvatureTensor<S>,
}

impl<S: Scalar> AmbientGeometry<S> {
    pub fn new(algebra: MetricLieAlgebra<S>) -> Result<Self> {
        let connection = algebra.koszul_connection()?;
        let curvature = algebra.curvature(&connection);
        Ok(Self {
            algebra,
            connection,
            curvature,
        })
    }

    pub fn algebra(&self) -> &MetricLieAlgebra<S> {
        &self.algebra
    }

    pub fn connection(&self) -> &ConnectionTable<S> {
        &self.connection
    }

    pub fn curvature(&self) -> &CurvatureTensor<S> {
        &self.curvature
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Shape operator data of a unit field: matrix, adjoint, field copy.
    pub fn nomizu(&self, field: &UnitField<S>) -> Result<NomizuData<S>> {
        let dim = self.dim();
        let v = field.vector();
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
        let mut a = vec![vec![S::zero(); dim]; dim];
        for j in 0..dim {
            let col = self.connection.derive_along_frame(j, v).neg();
            for (i, row) in a.iter_mut().enumerate() {
                row[j] = col[i].clone();
            }
        }
        // Adjoint for a general constant metric: Aᵗ = g⁻¹ Aᵀ g.
        let a_t = linalg::mat_mul(
            self.algebra.metric_inverse(),
            &linalg::mat_mul(&linalg::transpose(&a), self.algebra.metric()),
        );
        Ok(NomizuData {
            v: v.clone(),
            a,
            a_t,
        })
    }

    /// Symmetrized covariant derivative of the shape operator,
    /// Hess_V(X, Y) = ½((∇_X A_V)Y + (∇_Y A_V)X).
    pub fn hess(
        &self,
        nd: &NomizuData<S>,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
    ) -> AlgebraVector<S> {
        let half = S::from_ratio(1, 2);
        self.nabla_a(nd, x, y)
            .add(&self.nabla_a(nd, y, x))
            .scale(&half)
    }

    /// (∇_X A_V)Y = ∇_X(A_V Y) − A_V(∇_X Y) for constant-coefficient X, Y.
    fn nabla_a(
        &self,
        nd: &NomizuData<S>,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
    ) -> AlgebraVector<S> {
        self.connection
            .covariant_derivative(x, &nd.apply(y))
            .sub(&nd.apply(&self.connection.covariant_derivative(x, y)))
    }

    /// Symmetrized curvature form,
    /// Hm_V(X, Y) = ½(R(V, A_V X)Y + R(V, A_V Y)X).
    pub fn hm(
        &self,
        nd: &NomizuData<S>,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
    ) -> AlgebraVector<S> {
        let half = S::from_ratio(1, 2);
        self.curvature
            .evaluate(&nd.v, &nd.apply(x), y)
            .add(&self.curvature.evaluate(&nd.v, &nd.apply(y), x))
            .scale(&half)
    }

    /// Rough Laplacian Δ̄V = Σ g^{ij} (∇_{e_i} A_V) e_j.
    pub fn rough_laplacian(&self, nd: &NomizuData<S>) -> AlgebraVector<S> {
        let dim = self.dim();
        let g_inv = self.algebra.metric_inverse();
        let mut total = AlgebraVector::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let weight = g_inv[i][j].clone();
                if weight.is_zero() {
                    continue;
                }
                let term = self
                    .connection
                    .derive_along_frame(i, &nd.column(j))
                    .sub(&nd.apply(self.connection.entry(i, j)));
                total.add_scaled(&term, &weight);
            }
        }
        total
    }

    /// Δ̄V − ‖A_V‖²V; the field is harmonic exactly when this vanishes.
    pub fn laplacian_defect(&self, nd: &NomizuData<S>) -> AlgebraVector<S> {
        self.rough_laplacian(nd)
            .sub(&nd.v.scale(&nd.total_norm_sq()))
    }

    /// The curvature trace Σ g^{ij} R(V, A_V e_i) e_j; a harmonic field is
    /// a harmonic map into the unit tangent bundle exactly when this
    /// vanishes too.
    pub fn hm_trace(&self, nd: &NomizuData<S>) -> AlgebraVector<S> {
        let dim = self.dim();
        let g_inv = self.algebra.metric_inverse();
        let frame: Vec<AlgebraVector<S>> =
            (0..dim).map(|i| AlgebraVector::basis(dim, i)).collect();
        let mut total = AlgebraVector::zero(dim);
        for i in 0..dim {
            let col = nd.column(i);
            for j in 0..dim {
                let weight = g_inv[i][j].clone();
                if weight.is_zero() {
                    continue;
                }
                let term = self.curvature.evaluate(&nd.v, &col, &frame[j]);
                total.add_scaled(&term, &weight);
            }
        }
        total
    }

    /// Scalar second fundamental form of V(G) against a normal direction:
    /// ⟨Hess_V(X,Y) + A_V Hm_V(X,Y), Z − ⟨Z, V⟩V⟩.
    pub fn second_fundamental_form(
        &self,
        nd: &NomizuData<S>,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
        z: &AlgebraVector<S>,
    ) -> S {
        let w = self.hess(nd, x, y).add(&nd.apply(&self.hm(nd, x, y)));
        let mut z_tan = z.clone();
        z_tan.add_scaled(&nd.v, &-self.algebra.inner(z, &nd.v));
        self.algebra.inner(&w, &z_tan)
    }

    /// Totally-geodesic defect
    /// Hess_V(X,Y) + A_V Hm_V(X,Y) − ⟨A_V X, A_V Y⟩ V.
    pub fn tgf_defect(
        &self,
        nd: &NomizuData<S>,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
    ) -> AlgebraVector<S> {
        let mut out = self.hess(nd, x, y).add(&nd.apply(&self.hm(nd, x, y)));
        let corr = self.algebra.inner(&nd.apply(x), &nd.apply(y));
        out.add_scaled(&nd.v, &-corr);
        out
    }

    /// Largest defect norm over all frame pairs; zero exactly for a
    /// totally geodesic field.
    pub fn tgf_residual(&self, nd: &NomizuData<S>) -> Result<S> {
        let dim = self.dim();
        let frame: Vec<AlgebraVector<S>> =
            (0..dim).map(|i| AlgebraVector::basis(dim, i)).collect();
        let mut worst_sq = S::zero();
        for x in &frame {
            for y in &frame {
                let defect = self.tgf_defect(nd, x, y);
                let sq = self.algebra.norm_sq(&defect);
                if sq > worst_sq {
                    worst_sq = sq;
                }
            }
        }
        norm_from_sq(worst_sq)
    }

    /// ∇_V V = −A_V V; the flow lines of V are geodesics exactly when this
    /// vanishes.
    pub fn geodesic_defect(&self, nd: &NomizuData<S>) -> AlgebraVector<S> {
        nd.apply(&nd.v).neg()
    }

    /// The metric V pulls back from the unit tangent bundle:
    /// g_V(X, Y) = ⟨X, Y⟩ + ⟨A_V X, A_V Y⟩.
    pub fn pullback_metric(
        &self,
        nd: &NomizuData<S>,
        x: &AlgebraVector<S>,
        y: &AlgebraVector<S>,
    ) -> S {
        self.algebra.inner(x, y) + self.algebra.inner(&nd.apply(x), &nd.apply(y))
    }

    /// g-norm of a vector, clamping rounding-noise negatives on the float
    /// path.
    pub fn vector_norm(&self, w: &AlgebraVector<S>) -> Result<S> {
        norm_from_sq(self.algebra.norm_sq(w))
    }
}

/// Square root of a norm²: tiny negatives (float rounding of a true zero)
/// are clamped before the root; genuinely negative or irrational inputs
/// are errors.
fn norm_from_sq<S: Scalar>(sq: S) -> Result<S> {
    let clamped = if sq < S::zero() && sq.abs() <= S::identity_tolerance() {
        S::zero()
    } else {
        sq
    };
    clamped
        .clone()
        .try_sqrt()
        .ok_or_else(|| Error::NotRepresentable(format!("sqrt of {clamped}")))
}

/// Singular-value data of the shape operator for the algebra's metric:
/// `sigma` descending, `right[α]` the g-orthonormal eigenframe of AᵗA,
/// `left[α]` a g-orthonormal frame with A·right[α] = sigma[α]·left[α] on
/// the positive part, and `left[dim−1] = V` always (the image of A is
/// orthogonal to V, so V closes the left frame).
#[derive(Debug, Clone)]
pub struct SingularFrame {
    pub sigma: Vec<f64>,
    pub right: Vec<AlgebraVector<f64>>,
    pub left: Vec<AlgebraVector<f64>>,
    pub rank: usize,
}

/// Compute the singular frame of A_V. General constant metrics are handled
/// by whitening through the Cholesky factor g = LLᵀ, where the self-adjoint
/// operator AᵗA becomes an ordinary symmetric matrix.
pub fn singular_frame(
    geom: &AmbientGeometry<f64>,
    nd: &NomizuData<f64>,
) -> Result<SingularFrame> {
    let dim = geom.dim();
    let g = geom.algebra().metric();
    let l = linalg::cholesky(g).ok_or(Error::SingularMetric)?;
    // L⁻¹ column by column, then L⁻ᵀ by transposition.
    let mut l_inv = vec![vec![0.0; dim]; dim];
    for k in 0..dim {
        let mut unit = vec![0.0; dim];
        unit[k] = 1.0;
        let col = linalg::solve_lower(&l, &unit);
        for i in 0..dim {
            l_inv[i][k] = col[i];
        }
    }
    let l_inv_t = linalg::transpose(&l_inv);
    let l_t = linalg::transpose(&l);

    let endo = linalg::mat_mul(&nd.a_t, &nd.a);
    let mut m = linalg::mat_mul(&l_t, &linalg::mat_mul(&endo, &l_inv_t));
    for i in 0..dim {
        for j in (i + 1)..dim {
            let avg = 0.5 * (m[i][j] + m[j][i]);
            m[i][j] = avg;
            m[j][i] = avg;
        }
    }
    let (mu, w) = linalg::jacobi_eigen_sym(&m)?;
    // Eigenvalues at noise level are declared exact zeros so that the σ
    // list, the rank, and the frame slots tell one consistent story.
    let sigma: Vec<f64> = mu
        .iter()
        .map(|&x| if x > SINGULAR_RANK_EPS { x.sqrt() } else { 0.0 })
        .collect();
    let right: Vec<AlgebraVector<f64>> = w
        .iter()
        .map(|wk| AlgebraVector::new(linalg::mat_vec(&l_inv_t, wk)))
        .collect();

    let rank = mu.iter().filter(|&&x| x > SINGULAR_RANK_EPS).count();
    if rank > dim - 1 {
        return Err(Error::NoConvergence(
            "shape operator numerically claims full rank, but its image is \
             orthogonal to the field"
                .into(),
        ));
    }

    let mut positive_left: Vec<AlgebraVector<f64>> = Vec::with_capacity(rank);
    for alpha in 0..rank {
        let image = nd.apply(&right[alpha]);
        let norm = geom.vector_norm(&image)?;
        positive_left.push(image.scale(&(1.0 / norm)));
    }

    // Complete {V} ∪ {f_α} to a g-orthonormal basis in whitened
    // coordinates, then order the result as [f_α…, completions…, V].
    let whiten = |y: &AlgebraVector<f64>| linalg::mat_vec(&l_t, y.coeffs());
    let mut prescribed: Vec<Vec<f64>> = vec![whiten(&nd.v)];
    prescribed.extend(positive_left.iter().map(|f| whiten(f)));
    let full = linalg::complete_orthonormal_euclidean(&prescribed, dim)?;
    let mut left = positive_left;
    for z in full.iter().skip(1 + left.len()) {
        left.push(AlgebraVector::new(linalg::mat_vec(&l_inv_t, z)));
    }
    left.push(nd.v.clone());

    Ok(SingularFrame {
        sigma,
        right,
        left,
        rank,
    })
}

/// A tangent vector to the tangent bundle in horizontal/vertical parts,
/// with the Sasaki inner product ⟨(h₁,v₁),(h₂,v₂)⟩ = ⟨h₁,h₂⟩ + ⟨v₁,v₂⟩.
#[derive(Debug, Clone)]
pub struct SasakiVector {
    pub horizontal: AlgebraVector<f64>,
    pub vertical: AlgebraVector<f64>,
}

impl SasakiVector {
    pub fn inner(&self, other: &SasakiVector, alg: &MetricLieAlgebra<f64>) -> f64 {
        alg.inner(&self.horizontal, &other.horizontal)
            + alg.inner(&self.vertical, &other.vertical)
    }
}

/// Sasaki-orthonormal frames along the image of V: `tangents[α]` span the
/// tangent space of V(G) (the images of the right frame under the graph
/// differential, normalized) and `normals[α]` its orthogonal complement,
/// the last normal being the vertical direction (0, V) tangent to the
/// sphere fibre.
#[derive(Debug, Clone)]
pub struct SasakiFraming {
    pub tangents: Vec<SasakiVector>,
    pub normals: Vec<SasakiVector>,
}

/// Build the framing from a singular frame:
///
/// ```text
/// ẽ_α = (u_α, −σ_α f_α)/√(1+σ_α²),   ñ_α = (σ_α u_α, f_α)/√(1+σ_α²).
/// ```
///
/// ẽ_α is the normalized image of u_α under X ↦ (X, −A_V X); the signs are
/// the ones that make ⟨B(X,Y), ñ_α⟩·√(1+σ_α²) equal the scalar second
/// fundamental form against f_α.
pub fn tangent_normal_framing(frame: &SingularFrame) -> SasakiFraming {
    let dim = frame.sigma.len();
    let mut tangents = Vec::with_capacity(dim);
    let mut normals = Vec::with_capacity(dim);
    for alpha in 0..dim {
        let s = frame.sigma[alpha];
        let c = 1.0 / (1.0 + s * s).sqrt();
        let u = &frame.right[alpha];
        let f = &frame.left[alpha];
        tangents.push(SasakiVector {
            horizontal: u.scale(&c),
            vertical: f.scale(&(-s * c)),
        });
        normals.push(SasakiVector {
            horizontal: u.scale(&(s * c)),
            vertical: f.scale(&c),
        });
    }
    SasakiFraming { tangents, normals }
}

/// Mean-curvature data of the immersion V: G → T¹G.
#[derive(Debug, Clone)]
pub struct MeanCurvatureData {
    /// The trace vector Ȟ = Σ ((∇_{u_α}A_V)u_α + A_V R(V, A_V u_α)u_α)
    /// / (1+σ_α²) over the right singular frame.
    pub vector: AlgebraVector<f64>,
    /// ⟨Ȟ, V⟩, the part forced by the curvature of the sphere fibres;
    /// always Σ σ_α²/(1+σ_α²).
    pub tangent_component: f64,
    /// Components ⟨Ȟ, f_α⟩/√(1+σ_α²) against the non-V left frame —
    /// the coefficients of the mean-curvature vector along the normals.
    pub coefficients: Vec<f64>,
    /// ‖Ȟ − ⟨Ȟ, V⟩V‖; the field is minimal exactly when this vanishes.
    pub residual: f64,
}

/// Compute the mean-curvature data from a singular frame. The sum does not
/// depend on which orthonormal eigenbasis the frame chose inside degenerate
/// eigenspaces (it is a partial trace), so any `SingularFrame` works.
pub fn mean_curvature(
    geom: &AmbientGeometry<f64>,
    nd: &NomizuData<f64>,
    frame: &SingularFrame,
) -> Result<MeanCurvatureData> {
    let dim = geom.dim();
    let conn = geom.connection();
    let cur = geom.curvature();
    let mut h = AlgebraVector::zero(dim);
    for alpha in 0..dim {
        let u = &frame.right[alpha];
        let au = nd.apply(u);
        let weight = 1.0 / (1.0 + frame.sigma[alpha] * frame.sigma[alpha]);
        let covariant = conn
            .covariant_derivative(u, &au)
            .sub(&nd.apply(&conn.covariant_derivative(u, u)));
        let curvature_term = nd.apply(&cur.evaluate(&nd.v, &au, u));
        h.add_scaled(&covariant.add(&curvature_term), &weight);
    }
    let alg = geom.algebra();
    let tangent_component = alg.inner(&h, &nd.v);
    let mut normal_part = h.clone();
    normal_part.add_scaled(&nd.v, &-tangent_component);
    let residual = geom.vector_norm(&normal_part)?;
    let coefficients = (0..dim - 1)
        .map(|alpha| {
            let s = frame.sigma[alpha];
            alg.inner(&h, &frame.left[alpha]) / (1.0 + s * s).sqrt()
        })
        .collect();
    Ok(MeanCurvatureData {
        vector: h,
        tangent_component,
        coefficients,
        residual,
    })
}

/// Everything the report layer prints about one field: residuals, the
/// singular values, and threshold verdicts at the given tolerance.
#[derive(Debug, Clone)]
pub struct GeometryReport {
    pub mean_curvature_residual: f64,
    pub mean_curvature_tangent: f64,
    pub tgf_residual: f64,
    pub laplacian_defect: f64,
    pub hm_trace: f64,
    pub geodesic_defect: f64,
    pub nomizu_norm_sq: f64,
    pub sigma: Vec<f64>,
    pub tolerance: f64,
    pub minimal: bool,
    pub harmonic: bool,
    pub harmonic_map: bool,
    pub totally_geodesic: bool,
    pub geodesic: bool,
}

/// Run the full pointwise analysis of one unit field.
pub fn classify(
    geom: &AmbientGeometry<f64>,
    field: &UnitField<f64>,
    tolerance: f64,
) -> Result<GeometryReport> {
    if !(tolerance > 0.0) {
        return Err(Error::InvalidInput(
            "classification tolerance must be positive".into(),
        ));
    }
    let nd = geom.nomizu(field)?;
    let frame = singular_frame(geom, &nd)?;
    let mc = mean_curvature(geom, &nd, &frame)?;
    let laplacian_defect = geom.vector_norm(&geom.laplacian_defect(&nd))?;
    let hm_trace = geom.vector_norm(&geom.hm_trace(&nd))?;
    let tgf_residual = geom.tgf_residual(&nd)?;
    let geodesic_defect = geom.vector_norm(&geom.geodesic_defect(&nd))?;
    let harmonic = laplacian_defect < tolerance;
    Ok(GeometryReport {
        mean_curvature_residual: mc.residual,
        mean_curvature_tangent: mc.tangent_component,
        tgf_residual,
        laplacian_defect,
        hm_trace,
        geodesic_defect,
        nomizu_norm_sq: nd.total_norm_sq(),
        sigma: frame.sigma.clone(),
        tolerance,
        minimal: mc.residual < tolerance,
        harmonic,
        harmonic_map: harmonic && hm_trace < tolerance,
        totally_geodesic: tgf_residual < tolerance,
        geodesic: geodesic_defect < tolerance,
    })
}
