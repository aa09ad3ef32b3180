use num_complex::Complex64;

use super::{ComplexMatrix, MatError};

/// Which tensor factor of a bipartite operator to trace out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

impl ComplexMatrix {
    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    ///
    /// Fails with [`MatError::SingularMatrix`] as soon as the best available
    /// pivot has modulus below `singular_tol`.
    pub fn inverse(&self, singular_tol: f64) -> Result<ComplexMatrix, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare {
                op: "inverse",
                shape: self.shape(),
            });
        }
        let n = self.nrows();
        let mut a = self.clone();
        let mut inv = ComplexMatrix::identity(n);

        for col in 0..n {
            let (pivot_row, pivot_mag) =
                (col..n)
                    .map(|r| (r, a[(r, col)].norm()))
                    .fold(
                        (col, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if !(pivot_mag >= singular_tol) {
                return Err(MatError::SingularMatrix {
                    column: col,
                    pivot: pivot_mag,
                    tol: singular_tol,
                });
            }
            if pivot_row != col {
                swap_rows(&mut a, pivot_row, col);
                swap_rows(&mut inv, pivot_row, col);
            }

            let pivot_inv = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] *= pivot_inv;
                inv[(col, j)] *= pivot_inv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[(r, col)];
                if factor.re == 0.0 && factor.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let (ac, ic) = (a[(col, j)], inv[(col, j)]);
                    a[(r, j)] -= factor * ac;
                    inv[(r, j)] -= factor * ic;
                }
            }
        }
        Ok(inv)
    }

    /// Partial trace of a `(d1·d2)×(d1·d2)` operator under the row-major
    /// Kronecker layout, composite index `i·d2 + k`.
    pub fn partial_trace(
        &self,
        d1: usize,
        d2: usize,
        which: Subsystem,
    ) -> Result<ComplexMatrix, MatError> {
        let n = d1.checked_mul(d2).filter(|&n| n > 0);
        if n != Some(self.nrows()) || !self.is_square() {
            return Err(MatError::DimensionMismatch {
                op: "partial_trace",
                left: self.shape(),
                right: (d1, d2),
            });
        }
        let out = match which {
            Subsystem::First => ComplexMatrix::from_fn(d2, d2, |k, l| {
                (0..d1).map(|i| self[(i * d2 + k, i * d2 + l)]).sum()
            }),
            Subsystem::Second => ComplexMatrix::from_fn(d1, d1, |i, j| {
                (0..d2).map(|k| self[(i * d2 + k, j * d2 + k)]).sum()
            }),
        };
        Ok(out)
    }

    /// Index realignment of a `d²×d²` matrix:
    /// `out(a1·d+a1', a2·d+a2') = in(a1·d+a2, a1'·d+a2')`.
    ///
    /// A pure permutation of entries and an involution.
    pub fn realign(&self, d: usize) -> Result<ComplexMatrix, MatError> {
        let n = d.checked_mul(d).filter(|&n| n > 0);
        if n != Some(self.nrows()) || !self.is_square() {
            return Err(MatError::DimensionMismatch {
                op: "realign",
                left: self.shape(),
                right: (d, d),
            });
        }
        let mut out = ComplexMatrix::zeros(d * d, d * d);
        for a1 in 0..d {
            for a2 in 0..d {
                for b1 in 0..d {
                    for b2 in 0..d {
                        out[(a1 * d + b1, a2 * d + b2)] = self[(a1 * d + a2, b1 * d + b2)];
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Integer `d` with `d·d == n`, if one exists.
pub fn exact_sqrt(n: usize) -> Option<usize> {
    let d = (n as f64).sqrt().round() as usize;
    (d.checked_mul(d) == Some(n)).then_some(d)
}

/// `U = exp(−i·H·t)` for Hermitian `H`, built from its spectral decomposition.
pub fn expm_hermitian_generator(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix, MatError> {
    expm_hermitian_generator_with_tol(h, t, super::DEFAULT_HERM_TOL)
}

pub fn expm_hermitian_generator_with_tol(
    h: &ComplexMatrix,
    t: f64,
    herm_tol: f64,
) -> Result<ComplexMatrix, MatError> {
    let eig = h.hermitian_eigs(herm_tol)?;
    Ok(eig.apply_spectral(|lambda| Complex64::from_polar(1.0, -lambda * t)))
}

fn swap_rows(m: &mut ComplexMatrix, r1: usize, r2: usize) {
    for j in 0..m.ncols() {
        let tmp = m[(r1, j)];
        m[(r1, j)] = m[(r2, j)];
        m[(r2, j)] = tmp;
    }
}
