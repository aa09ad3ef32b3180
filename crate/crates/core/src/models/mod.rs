//! Concrete dynamical families: the Werner-state B-map driven by a scalar
//! profile `p(t)`, the spin-star dephasing model, and the `σz⊗σx` model.
//! The two Hamiltonian models carry both a closed form and a brute-force
//! dilation oracle that must agree.

mod dilation;
mod family;
mod hamiltonian;
mod pfunction;
mod werner;

use thiserror::Error;

use crate::dynmaps::{AMap, BMap, DynMapError};
use crate::matcore::MatError;

pub use dilation::dilation_amap;
pub use family::ModelFamily;
pub use hamiltonian::{SigmaZXModel, SpinStarModel, MAX_DILATION_SPINS};
pub use pfunction::{p_eval, PFunction};
pub use werner::{werner_amap, werner_bmap, werner_intermediate_bmap};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("bath of {n} spins exceeds the dilation limit of {max}")]
    DimensionGuard { n: u32, max: u32 },
    #[error("intermediate map undefined: A(t1,0) is singular (parameter {value:e})")]
    SingularIntermediateMap { value: f64 },
    #[error("model has no unitary dilation")]
    NoDilation,
    #[error(transparent)]
    Map(#[from] DynMapError),
    #[error(transparent)]
    Matrix(#[from] MatError),
}

pub fn spinstar_amap(m: &SpinStarModel, t: f64) -> Result<AMap, ModelError> {
    m.amap(t)
}

pub fn spinstar_amap_dilation(m: &SpinStarModel, t: f64) -> Result<AMap, ModelError> {
    m.amap_dilation(t)
}

pub fn spinstar_intermediate_bmap(
    m: &SpinStarModel,
    t1: f64,
    t2: f64,
    singular_tol: f64,
) -> Result<BMap, ModelError> {
    m.intermediate_bmap(t1, t2, singular_tol)
}

pub fn sigmazx_amap(m: &SigmaZXModel, t: f64) -> Result<AMap, ModelError> {
    m.amap(t)
}

pub fn sigmazx_amap_dilation(m: &SigmaZXModel, t: f64) -> Result<AMap, ModelError> {
    m.amap_dilation(t)
}

pub fn sigmazx_intermediate_bmap(
    m: &SigmaZXModel,
    t1: f64,
    t2: f64,
    singular_tol: f64,
) -> Result<BMap, ModelError> {
    m.intermediate_bmap(t1, t2, singular_tol)
}
