//! Two dephasing models obtained from a joint system-environment unitary
//! acting on a product initial state.

use serde::{Deserialize, Serialize};

use crate::dynmaps::{AMap, BMap};
use crate::matcore::pauli::{identity2, sigma_x, sigma_y, sigma_z};
use crate::matcore::{expm_hermitian_generator, ComplexMatrix};

use super::dilation::dilation_amap;
use super::pfunction::check_time;
use super::ModelError;

/// Largest bath accepted by the dilation oracle (a `2^{N+1}`-dimensional unitary).
pub const MAX_DILATION_SPINS: u32 = 10;

/// `½(1+c)·I⊗I + ½(1−c)·σz⊗σz`: keeps populations, scales coherences by `c`.
fn dephasing_amap(c: f64) -> AMap {
    let zz = sigma_z().kron(&sigma_z());
    let m =
        &ComplexMatrix::identity(4).scale_real(0.5 * (1.0 + c)) + &zz.scale_real(0.5 * (1.0 - c));
    AMap::new(2, m).expect("4x4 qubit A-map")
}

/// `½(I⊗I + σz⊗σz) + r/2·(σx⊗σx − σy⊗σy)`, with spectrum `{0, 0, 1−r, 1+r}`.
fn dephasing_bmap(r: f64) -> BMap {
    let id = ComplexMatrix::identity(4);
    let zz = sigma_z().kron(&sigma_z());
    let xx = sigma_x().kron(&sigma_x());
    let yy = sigma_y().kron(&sigma_y());
    let m = &(&id + &zz).scale_real(0.5) + &(&xx - &yy).scale_real(0.5 * r);
    BMap::new(2, m).expect("4x4 qubit B-map")
}

fn coherence_ratio(x1: f64, x2: f64, singular_tol: f64) -> Result<f64, ModelError> {
    if !(x1.abs() > singular_tol) {
        return Err(ModelError::SingularIntermediateMap { value: x1 });
    }
    Ok(x2 / x1)
}

/// Central spin coupled to `N` bath spins through
/// `H = g/√N · σz ⊗ Σ_k σz^(k)`, bath initially maximally mixed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinStarModel {
    /// Coupling strength (1/time).
    pub g: f64,
    /// Number of bath spins.
    pub n: u32,
}

impl SpinStarModel {
    pub fn new(g: f64, n: u32) -> Result<Self, ModelError> {
        if !g.is_finite() {
            return Err(ModelError::Domain(format!("g must be finite, got {g}")));
        }
        if n == 0 {
            return Err(ModelError::Domain("N must be at least 1".into()));
        }
        Ok(Self { g, n })
    }

    /// Coherence factor `x(t) = cos^N(2gt/√N)`.
    pub fn coherence(&self, t: f64) -> f64 {
        let n = f64::from(self.n);
        (2.0 * self.g * t / n.sqrt()).cos().powi(self.n as i32)
    }

    /// Closed form `A(t,0) = ½(1−x)σz⊗σz + ½(1+x)I⊗I`.
    pub fn amap(&self, t: f64) -> Result<AMap, ModelError> {
        check_time(t)?;
        Ok(dephasing_amap(self.coherence(t)))
    }

    /// Joint Hamiltonian on `2^{N+1}` dimensions, central spin first.
    pub fn hamiltonian(&self) -> Result<ComplexMatrix, ModelError> {
        self.guard()?;
        let env_dim = 1usize << self.n;
        // Σ_k σz^(k) is diagonal: (#zeros − #ones) in the bath basis state
        let collective: Vec<f64> = (0..env_dim)
            .map(|s: usize| f64::from(self.n) - 2.0 * f64::from(s.count_ones()))
            .collect();
        let h = sigma_z().kron(&ComplexMatrix::from_diagonal(&collective));
        Ok(h.scale_real(self.g / f64::from(self.n).sqrt()))
    }

    /// `Tr_E[U (ρ_S ⊗ I/2^N) U†]` with `U = exp(−iHt)`, built numerically.
    pub fn amap_dilation(&self, t: f64) -> Result<AMap, ModelError> {
        check_time(t)?;
        let h = self.hamiltonian()?;
        let u = expm_hermitian_generator(&h, t)?;
        let env_dim = 1usize << self.n;
        let rho_env = ComplexMatrix::identity(env_dim).scale_real(1.0 / env_dim as f64);
        dilation_amap(&u, &rho_env, 2)
    }

    /// Closed-form `B(t2,t1)` with ratio `r = x(t2)/x(t1)`.
    pub fn intermediate_bmap(
        &self,
        t1: f64,
        t2: f64,
        singular_tol: f64,
    ) -> Result<BMap, ModelError> {
        check_time(t1)?;
        check_time(t2)?;
        let r = coherence_ratio(self.coherence(t1), self.coherence(t2), singular_tol)?;
        Ok(dephasing_bmap(r))
    }

    fn guard(&self) -> Result<(), ModelError> {
        if self.n > MAX_DILATION_SPINS {
            return Err(ModelError::DimensionGuard {
                n: self.n,
                max: MAX_DILATION_SPINS,
            });
        }
        Ok(())
    }
}

/// System qubit and one environment qubit evolving under a `σz⊗σx`
/// coupling, environment initially in `(I + σz)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SigmaZXModel {
    /// Frequency (1/time).
    pub omega: f64,
}

impl SigmaZXModel {
    pub fn new(omega: f64) -> Result<Self, ModelError> {
        if !omega.is_finite() {
            return Err(ModelError::Domain(format!(
                "omega must be finite, got {omega}"
            )));
        }
        Ok(Self { omega })
    }

    /// Coherence factor `cos(ωt)`.
    pub fn coherence(&self, t: f64) -> f64 {
        (self.omega * t).cos()
    }

    /// Generator `(ω/2)·σz⊗σx`, so that
    /// `U(t) = cos(ωt/2)·I⊗I − i·sin(ωt/2)·σz⊗σx`.
    pub fn hamiltonian(&self) -> ComplexMatrix {
        sigma_z().kron(&sigma_x()).scale_real(self.omega / 2.0)
    }

    pub fn unitary(&self, t: f64) -> Result<ComplexMatrix, ModelError> {
        Ok(expm_hermitian_generator(&self.hamiltonian(), t)?)
    }

    /// Closed form `A(t,0) = ½(1+cos ωt)·I⊗I + ½(1−cos ωt)·σz⊗σz`.
    pub fn amap(&self, t: f64) -> Result<AMap, ModelError> {
        check_time(t)?;
        Ok(dephasing_amap(self.coherence(t)))
    }

    pub fn amap_dilation(&self, t: f64) -> Result<AMap, ModelError> {
        check_time(t)?;
        let rho_env = (&identity2() + &sigma_z()).scale_real(0.5);
        dilation_amap(&self.unitary(t)?, &rho_env, 2)
    }

    /// Closed-form `B(t2,t1)` with ratio `r = cos(ωt2)/cos(ωt1)`.
    pub fn intermediate_bmap(
        &self,
        t1: f64,
        t2: f64,
        singular_tol: f64,
    ) -> Result<BMap, ModelError> {
        check_time(t1)?;
        check_time(t2)?;
        let r = coherence_ratio(self.coherence(t1), self.coherence(t2), singular_tol)?;
        Ok(dephasing_bmap(r))
    }
}
