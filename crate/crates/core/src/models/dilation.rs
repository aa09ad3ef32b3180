use crate::dynmaps::AMap;
use crate::matcore::{ComplexMatrix, Subsystem};

use super::ModelError;

/// A-map of `ρ_S ↦ Tr_E[U (ρ_S ⊗ ρ_E) U†]`, assembled from the images of the
/// system matrix units. `u` acts on system ⊗ environment, system first.
pub fn dilation_amap(
    u: &ComplexMatrix,
    rho_env: &ComplexMatrix,
    d_sys: usize,
) -> Result<AMap, ModelError> {
    let d_env = rho_env.nrows();
    let u_dag = u.dagger();
    let n = d_sys * d_sys;
    let mut m = ComplexMatrix::zeros(n, n);
    for j in 0..d_sys {
        for k in 0..d_sys {
            let joint = ComplexMatrix::unit(d_sys, j, k).kron(rho_env);
            let evolved = u.matmul(&joint)?.matmul(&u_dag)?;
            let reduced = evolved.partial_trace(d_sys, d_env, Subsystem::Second)?;
            for a1 in 0..d_sys {
                for a2 in 0..d_sys {
                    m[(a1 * d_sys + a2, j * d_sys + k)] = reduced[(a1, a2)];
                }
            }
        }
    }
    Ok(AMap::new(d_sys, m)?)
}
