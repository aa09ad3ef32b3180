use crate::dynmaps::{AMap, BMap};
use crate::matcore::pauli::max_entangled_projector;
use crate::matcore::ComplexMatrix;

use super::ModelError;

fn check_p(name: &str, p: f64) -> Result<(), ModelError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(ModelError::Domain(format!(
            "{name} must lie in [0, 1], got {p}"
        )))
    }
}

/// Werner-state B-map `B = 2ρ_ab`, `ρ_ab = (1−p)/4·I⊗I + p·|ψ_ME⟩⟨ψ_ME|`.
///
/// Spectrum: `(1−p)/2` three times and `(1+3p)/2` once.
pub fn werner_bmap(p: f64) -> Result<BMap, ModelError> {
    check_p("p", p)?;
    Ok(werner_like(p))
}

/// A-form of [`werner_bmap`]: populations relax towards `I/2`, coherences
/// are multiplied by `p`.
pub fn werner_amap(p: f64) -> Result<AMap, ModelError> {
    Ok(werner_bmap(p)?.to_amap())
}

/// Closed-form intermediate B-map between times with parameters `p1 = p(t1)`
/// and `p2 = p(t2)`:
/// `(p1−p2)/(2p1)·I⊗I + (2p2/p1)·|ψ_ME⟩⟨ψ_ME|`.
///
/// Spectrum: `(p1−p2)/(2p1)` three times and `(p1+3p2)/(2p1)` once.
pub fn werner_intermediate_bmap(p1: f64, p2: f64, singular_tol: f64) -> Result<BMap, ModelError> {
    check_p("p1", p1)?;
    check_p("p2", p2)?;
    if p1 <= singular_tol {
        return Err(ModelError::SingularIntermediateMap { value: p1 });
    }
    Ok(werner_like(p2 / p1))
}

/// `(1−r)/2·I⊗I + 2r·|ψ_ME⟩⟨ψ_ME|` for any real `r`.
fn werner_like(r: f64) -> BMap {
    let m = &ComplexMatrix::identity(4).scale_real((1.0 - r) / 2.0)
        + &max_entangled_projector(2).scale_real(2.0 * r);
    BMap::new(2, m).expect("4x4 qubit B-map")
}
