use num_complex::Complex64;

use super::DynMapError;
use crate::matcore::{exact_sqrt, ComplexMatrix, MatError};

/// Dynamical map in A-form: a `d²×d²` matrix acting on the row-major
/// vectorization of a `d×d` density matrix,
/// `ρ'[a1,a2] = Σ A[(a1,a2),(a1',a2')]·ρ[a1',a2']` with pair `(i,j) ↦ i·d+j`.
///
/// Composition of A-maps is plain matrix multiplication.
#[derive(Clone, Debug, PartialEq)]
pub struct AMap {
    d: usize,
    m: ComplexMatrix,
}

/// Dynamical map in B-form, the realignment
/// `B[(a1,a1'),(a2,a2')] = A[(a1,a2),(a1',a2')]`.
///
/// For a CP trace-preserving map `B` is Hermitian, positive semidefinite,
/// has trace `d`, and `B/d` is the Choi state. Those properties are reported
/// by [`diagnose`](super::diagnose), not enforced here.
#[derive(Clone, Debug, PartialEq)]
pub struct BMap {
    d: usize,
    m: ComplexMatrix,
}

fn check_shape(d: usize, m: &ComplexMatrix) -> Result<(), DynMapError> {
    let n = d
        .checked_mul(d)
        .filter(|&n| n > 0)
        .ok_or(DynMapError::InvalidDimension(d))?;
    if m.shape() != (n, n) {
        return Err(DynMapError::ShapeMismatch {
            d,
            shape: m.shape(),
        });
    }
    Ok(())
}

macro_rules! map_common {
    ($ty:ident) => {
        impl $ty {
            pub fn new(d: usize, m: ComplexMatrix) -> Result<Self, DynMapError> {
                check_shape(d, &m)?;
                Ok(Self { d, m })
            }

            /// Infers `d` from a `d²×d²` matrix.
            pub fn from_matrix(m: ComplexMatrix) -> Result<Self, DynMapError> {
                let d = exact_sqrt(m.nrows()).ok_or(DynMapError::ShapeMismatch {
                    d: 0,
                    shape: m.shape(),
                })?;
                Self::new(d, m)
            }

            #[inline]
            pub fn dim(&self) -> usize {
                self.d
            }

            #[inline]
            pub fn matrix(&self) -> &ComplexMatrix {
                &self.m
            }

            pub fn into_matrix(self) -> ComplexMatrix {
                self.m
            }

            /// Frobenius distance between the underlying matrices.
            pub fn distance(&self, other: &Self) -> f64 {
                self.m.distance(&other.m)
            }
        }
    };
}

map_common!(AMap);
map_common!(BMap);

impl AMap {
    /// `A[(a1,a2),(a1',a2')] = δ(a1,a1')·δ(a2,a2')`, the `d²×d²` identity.
    pub fn identity(d: usize) -> Self {
        Self {
            d,
            m: ComplexMatrix::identity(d * d),
        }
    }

    /// Image of `rho` under the map.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix, DynMapError> {
        if rho.shape() != (self.d, self.d) {
            return Err(DynMapError::StateShape {
                d: self.d,
                shape: rho.shape(),
            });
        }
        let v = rho.clone().reshape(self.d * self.d, 1)?;
        Ok(self.m.matmul(&v)?.reshape(self.d, self.d)?)
    }

    pub fn to_bmap(&self) -> BMap {
        BMap {
            d: self.d,
            m: self
                .m
                .realign(self.d)
                .expect("A-map shape checked at construction"),
        }
    }

    /// Sequential application: `self` after `first`.
    pub fn compose(&self, first: &AMap) -> Result<AMap, DynMapError> {
        if self.d != first.d {
            return Err(DynMapError::DimensionMismatch {
                left: self.d,
                right: first.d,
            });
        }
        Ok(AMap {
            d: self.d,
            m: self.m.matmul(&first.m)?,
        })
    }

    pub fn inverse(&self, singular_tol: f64) -> Result<AMap, DynMapError> {
        let m = self.m.inverse(singular_tol).map_err(|e| match e {
            MatError::SingularMatrix { pivot, .. } => {
                DynMapError::SingularIntermediateMap { pivot }
            }
            other => other.into(),
        })?;
        Ok(AMap { d: self.d, m })
    }

    /// Scales each entry; used to build affine combinations of maps.
    pub fn scale(&self, s: f64) -> AMap {
        AMap {
            d: self.d,
            m: self.m.scale_real(s),
        }
    }
}

impl BMap {
    pub fn to_amap(&self) -> AMap {
        AMap {
            d: self.d,
            m: self
                .m
                .realign(self.d)
                .expect("B-map shape checked at construction"),
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.m.trace()
    }

    /// `B/d`, the Choi state of the map.
    pub fn choi_state(&self) -> ComplexMatrix {
        self.m.scale_real(1.0 / self.d as f64)
    }
}

/// A-form to B-form; a pure permutation of entries.
pub fn a_to_b(a: &AMap) -> BMap {
    a.to_bmap()
}

/// B-form to A-form; exact inverse of [`a_to_b`].
pub fn b_to_a(b: &BMap) -> AMap {
    b.to_amap()
}

pub fn identity_amap(d: usize) -> AMap {
    AMap::identity(d)
}

pub fn apply_amap(a: &AMap, rho: &ComplexMatrix) -> Result<ComplexMatrix, DynMapError> {
    a.apply(rho)
}

/// `second ∘ first` as an A-map.
pub fn compose(second: &AMap, first: &AMap) -> Result<AMap, DynMapError> {
    second.compose(first)
}

/// Intermediate map `A(t2,t1) = A(t2,t0)·A(t1,t0)⁻¹`.
///
/// Fails with [`DynMapError::SingularIntermediateMap`] when `A(t1,t0)` has
/// no inverse at `singular_tol`; no pseudo-inverse is attempted.
pub fn intermediate_amap(a_t2: &AMap, a_t1: &AMap, singular_tol: f64) -> Result<AMap, DynMapError> {
    if a_t2.d != a_t1.d {
        return Err(DynMapError::DimensionMismatch {
            left: a_t2.d,
            right: a_t1.d,
        });
    }
    let inv = a_t1.inverse(singular_tol)?;
    a_t2.compose(&inv)
}
