use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BMap, DynMapError};
use crate::matcore::ComplexMatrix;

/// Largest deviation tolerated by the linearity spot-check, relative to the
/// norm of the expected image (floored at one).
pub const LINEARITY_TOL: f64 = 1e-8;

const LINEARITY_SEED: u64 = 0x5eed_c401;

/// B-form of a linear map given only through its action on `d×d` matrices.
///
/// The map is applied to every matrix unit `E_jk`; this is
/// `d·(Id ⊗ Λ)|ψ_ME⟩⟨ψ_ME|` written with the system factor first, so that
/// rows are indexed `(a1, a1')` as in the realigned A-map. A seeded random
/// linear combination of matrix units is pushed through the action as well,
/// and the result must agree with the same combination of the unit images.
pub fn choi_from_action<F>(action: F, d: usize) -> Result<BMap, DynMapError>
where
    F: Fn(&ComplexMatrix) -> ComplexMatrix,
{
    if d == 0 {
        return Err(DynMapError::InvalidDimension(d));
    }
    let checked = |input: &ComplexMatrix| {
        let out = action(input);
        if out.shape() != (d, d) {
            return Err(DynMapError::StateShape {
                d,
                shape: out.shape(),
            });
        }
        Ok(out)
    };

    let mut images = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            images.push(checked(&ComplexMatrix::unit(d, j, k))?);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(LINEARITY_SEED);
    let coeffs: Vec<Complex64> = (0..d * d)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let probe = ComplexMatrix::new(d, d, coeffs.clone())?;
    let mut expected = ComplexMatrix::zeros(d, d);
    for (c, img) in coeffs.iter().zip(&images) {
        expected = &expected + &img.scale(*c);
    }
    let deviation = checked(&probe)?.distance(&expected);
    if !(deviation <= LINEARITY_TOL * expected.frobenius_norm().max(1.0)) {
        return Err(DynMapError::NonLinearAction { deviation });
    }

    let mut b = ComplexMatrix::zeros(d * d, d * d);
    for j in 0..d {
        for k in 0..d {
            let img = &images[j * d + k];
            for a1 in 0..d {
                for a2 in 0..d {
                    b[(a1 * d + j, a2 * d + k)] = img[(a1, a2)];
                }
            }
        }
    }
    BMap::new(d, b)
}
