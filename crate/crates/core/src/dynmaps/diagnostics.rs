use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use super::AMap;
use crate::matcore::{ComplexMatrix, DEFAULT_HERM_TOL};

/// Default threshold below which a Choi eigenvalue counts as negative.
pub const DEFAULT_CP_TOL: f64 = 1e-10;
/// Largest trace-preservation defect still reported as TP.
pub const DEFAULT_TP_TOL: f64 = 1e-9;
pub const DEFAULT_BLOCK_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 20_110_307;

/// Admissibility report for a dynamical map.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MapDiagnostics {
    /// `max |Σ_{a1} A[(a1,a1),(a1',a2')] − δ(a1',a2')|`.
    pub tp_defect: f64,
    /// `max |A[(a1,a2),(a1',a2')] − conj A[(a2,a1),(a2',a1')]|`.
    pub herm_defect: f64,
    /// Smallest eigenvalue of the B-form. `NaN` when the B-form is not
    /// Hermitian within `1e-9·max(1, ‖B‖_F)`.
    pub min_choi_eig: f64,
    /// Smallest value of the B-form quadratic form over sampled product
    /// vectors `x ⊗ conj(y)` with unit `x`, `y`.
    pub block_pos_min: f64,
    pub is_cp: bool,
    pub is_tp: bool,
}

/// Trace preservation, Hermiticity preservation, complete positivity and
/// sampled block positivity of `a`.
///
/// Complete positivity is decided on the full Choi spectrum; block
/// positivity only tests product vectors and is strictly weaker, so an NCP
/// map can still report `block_pos_min ≥ 0`.
pub fn diagnose(a: &AMap, cp_tol: f64, n_samples: usize, seed: u64) -> MapDiagnostics {
    let d = a.dim();
    let m = a.matrix();

    let mut tp_defect = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let s: Complex64 = (0..d).map(|k| m[(k * d + k, i * d + j)]).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            tp_defect = tp_defect.max((s - target).norm());
        }
    }

    let b = a.to_bmap();
    let bm = b.matrix();
    let herm_defect = bm.hermiticity_defect();
    let min_choi_eig = min_eigenvalue_of(bm);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut block_pos_min = f64::INFINITY;
    for _ in 0..n_samples {
        let x = random_unit_vector(d, &mut rng);
        let y = random_unit_vector(d, &mut rng);
        let v: Vec<Complex64> = x
            .iter()
            .flat_map(|xi| y.iter().map(move |yj| xi * yj.conj()))
            .collect();
        let mut form = Complex64::new(0.0, 0.0);
        for (r, vr) in v.iter().enumerate() {
            for (c, vc) in v.iter().enumerate() {
                form += vr.conj() * bm[(r, c)] * vc;
            }
        }
        block_pos_min = block_pos_min.min(form.re);
    }

    MapDiagnostics {
        tp_defect,
        herm_defect,
        min_choi_eig,
        block_pos_min,
        is_cp: min_choi_eig >= -cp_tol,
        is_tp: tp_defect <= DEFAULT_TP_TOL,
    }
}

/// Smallest B-form eigenvalue, `NaN` if the B-form is not Hermitian.
pub fn min_choi_eigenvalue(a: &AMap) -> f64 {
    min_eigenvalue_of(a.to_bmap().matrix())
}

// Hermiticity is judged relative to the matrix size, so that large
// intermediate maps near a singular A(t1,0) are not rejected for rounding.
fn min_eigenvalue_of(bm: &ComplexMatrix) -> f64 {
    let tol = DEFAULT_HERM_TOL * bm.frobenius_norm().max(1.0);
    bm.hermitian_eigs(tol)
        .map(|e| e.min_eigenvalue())
        .unwrap_or(f64::NAN)
}

fn random_unit_vector(d: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..d)
            .map(|_| Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
            .collect();
        let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}
