use num_complex::Complex64;
use serde::Serialize;

use super::{MarkovError, TimeGrid};
use crate::matcore::pauli::sigma_y;
use crate::matcore::ComplexMatrix;
use crate::models::{werner_bmap, PFunction};

/// Tolerance on the Hermiticity, trace and positivity of an input state.
pub const STATE_TOL: f64 = 1e-8;

/// Two-qubit concurrence `max(0, λ1 − λ2 − λ3 − λ4)`, with `λi` the
/// descending square roots of the spectrum of `ρ·ρ̃`, `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`.
///
/// The `λi` are equivalently the singular values of `√ρ·(σy⊗σy)·√ρ*`, which
/// is how they are computed here.
pub fn concurrence(rho: &ComplexMatrix) -> Result<f64, MarkovError> {
    if rho.shape() != (4, 4) {
        return Err(MarkovError::InvalidState(format!(
            "expected a 4x4 matrix, got {:?}",
            rho.shape()
        )));
    }
    if !rho.is_finite() {
        return Err(MarkovError::InvalidState("non-finite entry".into()));
    }
    let defect = rho.hermiticity_defect();
    if defect > STATE_TOL {
        return Err(MarkovError::InvalidState(format!(
            "not Hermitian (defect {defect:e})"
        )));
    }
    let tr = rho.trace();
    if (tr - Complex64::new(1.0, 0.0)).norm() > STATE_TOL {
        return Err(MarkovError::InvalidState(format!(
            "trace is {tr}, expected 1"
        )));
    }
    let eig = rho.hermitian_eigs(STATE_TOL)?;
    if eig.min_eigenvalue() < -STATE_TOL {
        return Err(MarkovError::InvalidState(format!(
            "not positive semidefinite (eigenvalue {:e})",
            eig.min_eigenvalue()
        )));
    }

    // Eigenvalues at rounding level are treated as exact zeros; their square
    // roots would otherwise inject errors of order sqrt(eps).
    let floor = 16.0 * f64::EPSILON * eig.max_eigenvalue().max(0.0);
    let sqrt_rho =
        eig.apply_spectral(|x| Complex64::new(if x > floor { x.sqrt() } else { 0.0 }, 0.0));
    let yy = sigma_y().kron(&sigma_y());
    // λi are the singular values of X = √ρ·(σy⊗σy)·√ρ*, read off as the
    // non-negative eigenvalues of the Hermitian block matrix [[0, X], [X†, 0]].
    let x = sqrt_rho.matmul(&yy)?.matmul(&sqrt_rho.conj())?;
    let x_dag = x.dagger();
    let block = ComplexMatrix::from_fn(8, 8, |i, j| match (i < 4, j < 4) {
        (true, false) => x[(i, j - 4)],
        (false, true) => x_dag[(i - 4, j)],
        _ => Complex64::new(0.0, 0.0),
    });
    let spectrum = block.hermitian_eigs(STATE_TOL)?.eigenvalues;
    let l: Vec<f64> = spectrum.iter().rev().take(4).map(|s| s.max(0.0)).collect();
    let c = l[0] - l[1] - l[2] - l[3];
    Ok(c.clamp(0.0, 1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConcurrenceRow {
    pub t: f64,
    pub p: f64,
    pub concurrence: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConcurrenceTrajectory {
    pub rows: Vec<ConcurrenceRow>,
}

/// Concurrence of the system-ancilla Werner state `B(p(t))/2` at each time.
pub fn concurrence_trajectory(
    f: &PFunction,
    times: &TimeGrid,
) -> Result<ConcurrenceTrajectory, MarkovError> {
    let rows = times
        .times()
        .iter()
        .map(|&t| {
            let p = f.eval(t)?;
            let rho = werner_bmap(p)?.choi_state();
            Ok(ConcurrenceRow {
                t,
                p,
                concurrence: concurrence(&rho)?,
            })
        })
        .collect::<Result<Vec<_>, MarkovError>>()?;
    Ok(ConcurrenceTrajectory { rows })
}
