use num_complex::Complex64;

use super::{BMap, DynMapError};
use crate::matcore::{ComplexMatrix, DEFAULT_HERM_TOL};

/// Kraus operators from the spectral decomposition of the B-form.
///
/// With `B = Σ λ_i v_i v_i†`, each eigenvalue above `cp_tol` yields
/// `K_i = √λ_i · unvec(v_i)` (row-major unvec), so that
/// `A = Σ K_i ⊗ conj(K_i)`. Phases are fixed by making the largest-modulus
/// entry of each operator real and positive.
pub fn kraus_from_bmap(b: &BMap, cp_tol: f64) -> Result<Vec<ComplexMatrix>, DynMapError> {
    let d = b.dim();
    let eig = b.matrix().hermitian_eigs(DEFAULT_HERM_TOL)?;
    let min = eig.min_eigenvalue();
    if min < -cp_tol {
        return Err(DynMapError::NotCP {
            min_eigenvalue: min,
        });
    }

    let mut ops = Vec::new();
    for (k, &lambda) in eig.eigenvalues.iter().enumerate().rev() {
        if lambda <= cp_tol {
            continue;
        }
        let v = eig.eigenvectors.column(k);
        let pivot = v
            .iter()
            .copied()
            .reduce(|best, z| if z.norm() > best.norm() { z } else { best })
            .expect("non-empty eigenvector");
        let phase = pivot.conj() / pivot.norm();
        let scale = phase * lambda.sqrt();
        let data: Vec<Complex64> = v.iter().map(|z| z * scale).collect();
        ops.push(ComplexMatrix::new(d, d, data)?);
    }
    Ok(ops)
}

/// `Σ K_i† K_i`; the identity for a trace-preserving Kraus set.
pub fn kraus_completeness(ops: &[ComplexMatrix]) -> Option<ComplexMatrix> {
    let first = ops.first()?;
    let mut acc = ComplexMatrix::zeros(first.ncols(), first.ncols());
    for k in ops {
        acc = &acc + &k.dagger().matmul(k).ok()?;
    }
    Some(acc)
}
