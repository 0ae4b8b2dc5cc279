//! Small dense matrix helpers.
//!
//! The algebras here have dimension ≤ 8 in every built-in family, so the
//! routines favour clarity over blocking or allocation tricks: row-major
//! `Vec<Vec<_>>` storage throughout. The generic routines (inversion,
//! positive-definiteness) run on either scalar path; the spectral routines
//! (Jacobi eigensolver, Cholesky) need radicals and are `f64`-only.

use crate::error::Error;
use crate::scalar::Scalar;

/// Row-major dense matrix.
pub type Matrix<S> = Vec<Vec<S>>;

/// Identity matrix of size `dim`.
pub fn identity<S: Scalar>(dim: usize) -> Matrix<S> {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect()
}

/// Matrix product `a · b`.
pub fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut sum = S::zero();
                    for (k, b_row) in b.iter().enumerate() {
                        sum = sum + a[i][k].clone() * b_row[j].clone();
                    }
                    sum
                })
                .collect()
        })
        .collect()
}

/// Matrix-vector product `a · x`.
pub fn mat_vec<S: Scalar>(a: &Matrix<S>, x: &[S]) -> Vec<S> {
    a.iter()
        .map(|row| {
            let mut sum = S::zero();
            for (entry, xi) in row.iter().zip(x) {
                sum = sum + entry.clone() * xi.clone();
            }
            sum
        })
        .collect()
}

/// Transpose of a rectangular matrix.
pub fn transpose<S: Scalar>(a: &Matrix<S>) -> Matrix<S> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect()
}

/// Matrix inverse by Gauss-Jordan elimination with partial pivoting.
/// Returns `None` when the matrix is singular (no usable pivot).
pub fn invert<S: Scalar>(matrix: &Matrix<S>) -> Option<Matrix<S>> {
    let dim = matrix.len();
    let mut work = matrix.clone();
    let mut inv = identity::<S>(dim);

    for col in 0..dim {
        // Pick the largest remaining pivot in this column. On the exact path
        // any nonzero entry would do; the size criterion also serves floats.
        let pivot_row = (col..dim).max_by(|&a, &b| {
            work[a][col]
                .abs()
                .partial_cmp(&work[b][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if work[pivot_row][col].is_zero() {
            return None;
        }
        work.swap(col, pivot_row);
        inv.swap(col, pivot_row);

        let pivot = work[col][col].clone();
        for j in 0..dim {
            work[col][j] = work[col][j].clone() / pivot.clone();
            inv[col][j] = inv[col][j].clone() / pivot.clone();
        }
        for row in 0..dim {
            if row == col {
                continue;
            }
            let factor = work[row][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..dim {
                work[row][j] =
                    work[row][j].clone() - factor.clone() * work[col][j].clone();
                inv[row][j] = inv[row][j].clone() - factor.clone() * inv[col][j].clone();
            }
        }
    }
    Some(inv)
}

/// Positive-definiteness test via symmetric Gaussian elimination: all
/// elimination pivots must be strictly positive. Assumes `matrix` is
/// symmetric (validated separately by callers).
pub fn is_positive_definite<S: Scalar>(matrix: &Matrix<S>) -> bool {
    let dim = matrix.len();
    let mut work = matrix.clone();
    for k in 0..dim {
        if work[k][k] <= S::zero() {
            return false;
        }
        for i in (k + 1)..dim {
            let factor = work[i][k].clone() / work[k][k].clone();
            for j in k..dim {
                work[i][j] = work[i][j].clone() - factor.clone() * work[k][j].clone();
            }
        }
    }
    true
}

/// Symmetric eigendecomposition by the cyclic Jacobi method.
///
/// Returns eigenvalues in descending order paired with orthonormal
/// eigenvectors (`vectors[k]` belongs to `values[k]`). Under repeated
/// eigenvalues the returned basis of the eigenspace is one arbitrary
/// orthonormal choice; callers that must be basis-independent are expected
/// to be invariant under that freedom.
pub fn jacobi_eigen_sym(matrix: &Matrix<f64>) -> Result<(Vec<f64>, Vec<Vec<f64>>), Error> {
    let dim = matrix.len();
    let mut a = matrix.clone();
    let mut v = identity::<f64>(dim);

    let scale: f64 = matrix
        .iter()
        .flatten()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    let target = 1e-15 * scale;

    for _sweep in 0..100 {
        let off: f64 = (0..dim)
            .flat_map(|p| ((p + 1)..dim).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum::<f64>()
            .sqrt();
        if off < target {
            let mut order: Vec<usize> = (0..dim).collect();
            order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap());
            let values = order.iter().map(|&k| a[k][k]).collect();
            let vectors = order
                .iter()
                .map(|&k| (0..dim).map(|i| v[i][k]).collect())
                .collect();
            return Ok((values, vectors));
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..dim {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for j in 0..dim {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * aqj;
                    a[q][j] = s * apj + c * aqj;
                }
                for i in 0..dim {
                    let vip = v[i][p];
                    let viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
        }
    }
    Err(Error::NoConvergence(
        "Jacobi eigensolver exceeded its sweep budget".into(),
    ))
}

/// Cholesky factorization `g = L Lᵀ` of a symmetric positive-definite
/// matrix; `None` when a pivot fails.
pub fn cholesky(matrix: &Matrix<f64>) -> Option<Matrix<f64>> {
    let dim = matrix.len();
    let mut l = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        for j in 0..=i {
            let mut sum = matrix[i][j];
            for k in 0..j {
                sum -= l[i][k] * l[j][k];
            }
            if i == j {
                if sum <= 0.0 {
                    return None;
                }
                l[i][j] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    Some(l)
}

/// Solve `L x = b` for lower-triangular `L`.
pub fn solve_lower(l: &Matrix<f64>, b: &[f64]) -> Vec<f64> {
    let dim = b.len();
    let mut x = vec![0.0; dim];
    for i in 0..dim {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[i][k] * x[k];
        }
        x[i] = sum / l[i][i];
    }
    x
}

/// Solve `Lᵀ x = b` for lower-triangular `L`.
pub fn solve_lower_transpose(l: &Matrix<f64>, b: &[f64]) -> Vec<f64> {
    let dim = b.len();
    let mut x = vec![0.0; dim];
    for i in (0..dim).rev() {
        let mut sum = b[i];
        for k in (i + 1)..dim {
            sum -= l[k][i] * x[k];
        }
        x[i] = sum / l[i][i];
    }
    x
}

/// Extend an orthonormal set to a full orthonormal basis of ℝ^dim by
/// Gram-Schmidt over the coordinate vectors (deterministic choice). The
/// prescribed vectors are returned first, unchanged.
pub fn complete_orthonormal_euclidean(
    prescribed: &[Vec<f64>],
    dim: usize,
) -> Result<Vec<Vec<f64>>, Error> {
    let mut basis: Vec<Vec<f64>> = prescribed.to_vec();
    for k in 0..dim {
        if basis.len() == dim {
            break;
        }
        let mut candidate = vec![0.0; dim];
        candidate[k] = 1.0;
        for b in &basis {
            let proj: f64 = (0..dim).map(|i| candidate[i] * b[i]).sum();
            for i in 0..dim {
                candidate[i] -= proj * b[i];
            }
        }
        let norm: f64 = candidate.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-7 {
            for x in &mut candidate {
                *x /= norm;
            }
            basis.push(candidate);
        }
    }
    if basis.len() != dim {
        return Err(Error::NoConvergence(
            "orthonormal completion failed: prescribed set is ill-conditioned".into(),
        ));
    }
    Ok(basis)
}

/// Random orthogonal matrix (rows orthonormal) from a seeded Gaussian
/// draw followed by Gram-Schmidt; used by frame-independence tests.
pub fn random_orthogonal(dim: usize, rng: &mut impl rand::Rng) -> Vec<Vec<f64>> {
    use rand_distr::{Distribution, StandardNormal};
    loop {
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(dim);
        let mut ok = true;
        'outer: for _ in 0..dim {
            let mut row: Vec<f64> =
                (0..dim).map(|_| StandardNormal.sample(rng)).collect();
            for prev in &rows {
                let proj: f64 = (0..dim).map(|i| row[i] * prev[i]).sum();
                for i in 0..dim {
                    row[i] -= proj * prev[i];
                }
            }
            let norm: f64 = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-6 {
                ok = false;
                break 'outer;
            }
            for x in &mut row {
                *x /= norm;
            }
            rows.push(row);
        }
        if ok {
            return rows;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn invert_exact_two_by_two() {
        let m = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(3, 1), rat(4, 1)]];
        let inv = invert(&m).expect("invertible");
        assert_eq!(inv[0][0], rat(-2, 1));
        assert_eq!(inv[0][1], rat(1, 1));
        assert_eq!(inv[1][0], rat(3, 2));
        assert_eq!(inv[1][1], rat(-1, 2));
    }

    #[test]
    fn invert_rejects_singular() {
        let m = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert!(invert(&m).is_none());
    }

    #[test]
    fn positive_definiteness_pivots() {
        assert!(is_positive_definite(&identity::<Rat>(4)));
        let not_pd = vec![vec![1.0, 2.0], vec![2.0, 1.0]];
        assert!(!is_positive_definite(&not_pd));
        let pd = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        assert!(is_positive_definite(&pd));
    }

    #[test]
    fn jacobi_matches_hand_eigenvalues() {
        // [[1/4, -1/2], [-1/2, 1]] has trace 5/4 and determinant 0.
        let m = vec![vec![0.25, -0.5], vec![-0.5, 1.0]];
        let (vals, vecs) = jacobi_eigen_sym(&m).unwrap();
        assert!((vals[0] - 1.25).abs() < 1e-14);
        assert!(vals[1].abs() < 1e-14);
        // Eigenvector of 5/4 is parallel to (1, -2)/sqrt(5).
        let dot = (vecs[0][0] - 2.0 * vecs[0][1]).abs() / 5.0_f64.sqrt();
        assert!((dot - 1.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_reconstructs_random_symmetric() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let dim = 6;
            let mut m = vec![vec![0.0; dim]; dim];
            for i in 0..dim {
                for j in 0..=i {
                    let x: f64 = rand::Rng::gen_range(&mut rng, -2.0..2.0);
                    m[i][j] = x;
                    m[j][i] = x;
                }
            }
            let (vals, vecs) = jacobi_eigen_sym(&m).unwrap();
            for i in 0..dim {
                for j in 0..dim {
                    let recon: f64 =
                        (0..dim).map(|k| vecs[k][i] * vals[k] * vecs[k][j]).sum();
                    assert!((recon - m[i][j]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn cholesky_reconstructs() {
        let g = vec![vec![4.0, 2.0], vec![2.0, 3.0]];
        let l = cholesky(&g).unwrap();
        assert!((l[0][0] - 2.0).abs() < 1e-15);
        assert!((l[1][0] - 1.0).abs() < 1e-15);
        assert!((l[1][1] - 2.0_f64.sqrt()).abs() < 1e-15);
        let x = solve_lower(&l, &[2.0, 5.0]);
        let y = solve_lower_transpose(&l, &x);
        // L Lᵀ y = b  =>  g y = b.
        assert!((g[0][0] * y[0] + g[0][1] * y[1] - 2.0).abs() < 1e-12);
        assert!((g[1][0] * y[0] + g[1][1] * y[1] - 5.0).abs() < 1e-12);
    }

    #[test]
    fn completion_produces_orthonormal_basis() {
        let first = vec![vec![0.6, 0.8, 0.0]];
        let basis = complete_orthonormal_euclidean(&first, 3).unwrap();
        assert_eq!(basis.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| basis[i][k] * basis[j][k]).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expected).abs() < 1e-12);
            }
        }
    }
}
