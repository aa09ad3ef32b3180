use std::fmt;

use serde::{Deserialize, Serialize};

use super::ModelError;

/// Time profile `p(t)` of the Werner-state B-map. Every kind has `p(0) = 1`
/// and stays within `[0, 1]` for `t ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum PFunction {
    /// `e^{−α t}`
    Exponential { alpha: f64 },
    /// `e^{−α t^β}`
    Stretched { alpha: f64, beta: f64 },
    /// `cos^{2N}(a t)`
    CosPower { a: f64, n: u32 },
}

fn positive(name: &str, x: f64) -> Result<f64, ModelError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(ModelError::Domain(format!(
            "{name} must be positive and finite, got {x}"
        )))
    }
}

impl PFunction {
    pub fn exponential(alpha: f64) -> Result<Self, ModelError> {
        Ok(Self::Exponential {
            alpha: positive("alpha", alpha)?,
        })
    }

    pub fn stretched(alpha: f64, beta: f64) -> Result<Self, ModelError> {
        Ok(Self::Stretched {
            alpha: positive("alpha", alpha)?,
            beta: positive("beta", beta)?,
        })
    }

    pub fn cos_power(a: f64, n: u32) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::Domain("N must be at least 1".into()));
        }
        Ok(Self::CosPower {
            a: positive("a", a)?,
            n,
        })
    }

    pub fn eval(&self, t: f64) -> Result<f64, ModelError> {
        check_time(t)?;
        let p = match *self {
            Self::Exponential { alpha } => (-alpha * t).exp(),
            Self::Stretched { alpha, beta } => (-alpha * t.powf(beta)).exp(),
            Self::CosPower { a, n } => (a * t).cos().powi(2 * n as i32),
        };
        if !(0.0..=1.0).contains(&p) {
            return Err(ModelError::Domain(format!("p({t}) = {p} left [0, 1]")));
        }
        Ok(p)
    }
}

impl fmt::Display for PFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Exponential { alpha } => write!(f, "exp(-{alpha} t)"),
            Self::Stretched { alpha, beta } => write!(f, "exp(-{alpha} t^{beta})"),
            Self::CosPower { a, n } => write!(f, "cos^{}({a} t)", 2 * n),
        }
    }
}

pub fn p_eval(f: &PFunction, t: f64) -> Result<f64, ModelError> {
    f.eval(t)
}

pub(crate) fn check_time(t: f64) -> Result<(), ModelError> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(ModelError::Domain(format!(
            "time must be finite and non-negative, got {t}"
        )))
    }
}
