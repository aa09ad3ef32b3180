use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynmaps::{AMap, BMap};

use super::{
    werner_amap, werner_intermediate_bmap, ModelError, PFunction, SigmaZXModel, SpinStarModel,
};

/// One of the concrete dynamical families, producing `A(t,0)` on demand.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum ModelFamily {
    Werner(PFunction),
    SpinStar(SpinStarModel),
    SigmaZX(SigmaZXModel),
}

impl ModelFamily {
    /// Closed-form `A(t,0)`.
    pub fn amap(&self, t: f64) -> Result<AMap, ModelError> {
        match self {
            Self::Werner(f) => werner_amap(f.eval(t)?),
            Self::SpinStar(m) => m.amap(t),
            Self::SigmaZX(m) => m.amap(t),
        }
    }

    pub fn bmap(&self, t: f64) -> Result<BMap, ModelError> {
        Ok(self.amap(t)?.to_bmap())
    }

    /// `A(t,0)` from the joint unitary, for the Hamiltonian models.
    pub fn amap_dilation(&self, t: f64) -> Result<AMap, ModelError> {
        match self {
            Self::Werner(_) => Err(ModelError::NoDilation),
            Self::SpinStar(m) => m.amap_dilation(t),
            Self::SigmaZX(m) => m.amap_dilation(t),
        }
    }

    /// Closed-form `B(t2,t1)`.
    pub fn intermediate_bmap(
        &self,
        t1: f64,
        t2: f64,
        singular_tol: f64,
    ) -> Result<BMap, ModelError> {
        match self {
            Self::Werner(f) => werner_intermediate_bmap(f.eval(t1)?, f.eval(t2)?, singular_tol),
            Self::SpinStar(m) => m.intermediate_bmap(t1, t2, singular_tol),
            Self::SigmaZX(m) => m.intermediate_bmap(t1, t2, singular_tol),
        }
    }
}

impl fmt::Display for ModelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Werner(p) => write!(f, "werner[p(t) = {p}]"),
            Self::SpinStar(m) => write!(f, "spinstar[g = {}, N = {}]", m.g, m.n),
            Self::SigmaZX(m) => write!(f, "sigmazx[omega = {}]", m.omega),
        }
    }
}
