//! Single-qubit Pauli matrices and the maximally entangled state.

use num_complex::Complex64;

use super::ComplexMatrix;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

fn two_by_two(entries: [Complex64; 4]) -> ComplexMatrix {
    ComplexMatrix::new(2, 2, entries.to_vec()).expect("2x2 literal")
}

pub fn identity2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn sigma_x() -> ComplexMatrix {
    two_by_two([ZERO, ONE, ONE, ZERO])
}

pub fn sigma_y() -> ComplexMatrix {
    two_by_two([ZERO, -I, I, ZERO])
}

pub fn sigma_z() -> ComplexMatrix {
    two_by_two([ONE, ZERO, ZERO, -ONE])
}

/// `|ψ_ME⟩ = Σ_i |i,i⟩ / √d` as a vector of length `d²`.
pub fn max_entangled_vector(d: usize) -> Vec<Complex64> {
    let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    let mut v = vec![ZERO; d * d];
    for i in 0..d {
        v[i * d + i] = amp;
    }
    v
}

/// `|ψ_ME⟩⟨ψ_ME|` on `C^d ⊗ C^d`.
pub fn max_entangled_projector(d: usize) -> ComplexMatrix {
    let v = max_entangled_vector(d);
    ComplexMatrix::outer(&v, &v)
}
