//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal pair `(p,q)` with a complex
//! plane rotation
//!
//! ```text
//! J = | c            s·e^{iφ} |      φ = arg a_pq
//!     | −s·e^{−iφ}   c        |
//! ```
//!
//! applied as `A ← J†AJ`, accumulating `V ← VJ`. Sweeps visit every pair in
//! row order until the off-diagonal Frobenius norm drops below the threshold.

use num_complex::Complex64;

use super::{ComplexMatrix, MatError};

/// Sweep budget before giving up with [`MatError::NoConvergence`].
pub const MAX_SWEEPS: usize = 50;

/// Off-diagonal Frobenius norm at which the iteration stops. Scaled by
/// `max(1, ‖A‖_F)` so large-norm inputs are held to the same relative
/// accuracy.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct HermitianEigenResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the unit eigenvector for `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigenResult {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply_spectral(|x| Complex64::new(x, 0.0))
    }

    /// `V·diag(f(λ))·V†`.
    pub fn apply_spectral(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let weights: Vec<Complex64> = self.eigenvalues.iter().map(|&x| f(x)).collect();
        let weighted = ComplexMatrix::from_fn(v.nrows(), v.ncols(), |i, k| v[(i, k)] * weights[k]);
        weighted
            .matmul(&v.dagger())
            .expect("eigenvector matrix is square")
    }
}

impl ComplexMatrix {
    /// Full spectrum and orthonormal eigenbasis of a Hermitian matrix.
    pub fn hermitian_eigs(&self, herm_tol: f64) -> Result<HermitianEigenResult, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare {
                op: "hermitian_eigs",
                shape: self.shape(),
            });
        }
        let defect = self.hermiticity_defect();
        // NaN defect must fail too
        if !(defect <= herm_tol) {
            return Err(MatError::NotHermitian {
                defect,
                tol: herm_tol,
            });
        }

        let n = self.nrows();
        // symmetrize so the rotations act on an exactly Hermitian matrix
        let mut a = ComplexMatrix::from_fn(n, n, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5);
        let mut v = ComplexMatrix::identity(n);
        let threshold = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

        let mut converged = a.off_diagonal_norm_sqr().sqrt() < threshold;
        let mut sweeps = 0;
        while !converged {
            if sweeps == MAX_SWEEPS {
                return Err(MatError::NoConvergence {
                    sweeps,
                    off_norm: a.off_diagonal_norm_sqr().sqrt(),
                });
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
            sweeps += 1;
            converged = a.off_diagonal_norm_sqr().sqrt() < threshold;
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
        let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
        let eigenvectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
        Ok(HermitianEigenResult {
            eigenvalues,
            eigenvectors,
        })
    }
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // rotations below rounding level of the diagonal change nothing
    if mag < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }

    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let phase = apq / mag;
    // J_pq = s·e^{iφ}, J_qp = −s·e^{−iφ}
    let jpq = phase * s;
    let jqp = -phase.conj() * s;

    let n = a.nrows();
    // A ← A·J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * jqp;
        a[(k, q)] = akp * jpq + akq * c;
    }
    // A ← J†·A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * jqp.conj();
        a[(q, k)] = apk * jpq.conj() + aqk * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * mag, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * mag, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * c;
    }
}
