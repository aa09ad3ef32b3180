//! Dense complex linear algebra used by every other module.
//!
//! Composite indices follow one convention throughout: the pair `(i, j)` of
//! a `d1 ⊗ d2` space maps to the flat index `i·d2 + j`. Kronecker products,
//! partial traces, realignment and vectorization all agree on it.

mod eigen;
mod matrix;
mod ops;
pub mod pauli;

use thiserror::Error;

pub use eigen::{HermitianEigenResult, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use matrix::ComplexMatrix;
pub use ops::{exact_sqrt, expm_hermitian_generator, expm_hermitian_generator_with_tol, Subsystem};

/// Default Hermiticity tolerance (max entrywise `|a − a†|`).
pub const DEFAULT_HERM_TOL: f64 = 1e-9;
/// Default pivot threshold below which a matrix is treated as singular.
pub const DEFAULT_SINGULAR_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op}: expected a square matrix, got {shape:?}")]
    NotSquare {
        op: &'static str,
        shape: (usize, usize),
    },
    #[error("matrix shape must have at least one row and one column")]
    EmptyShape,
    #[error("expected {expected} entries, found {found}")]
    DataLength { expected: usize, found: usize },
    #[error("rows have differing lengths")]
    RaggedRows,
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is singular: best pivot {pivot:e} in column {column} is below {tol:e}")]
    SingularMatrix { column: usize, pivot: f64, tol: f64 },
    #[error("matrix is not Hermitian: defect {defect:e} exceeds {tol:e}")]
    NotHermitian { defect: f64, tol: f64 },
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },
}
