//! Markov/non-Markov classification from CP flags, CP-divisibility scans
//! over time grids, and two-qubit concurrence trajectories.

mod classify;
mod concurrence;
mod scan;

use thiserror::Error;

use crate::dynmaps::DynMapError;
use crate::matcore::MatError;
use crate::models::ModelError;

pub use classify::{classify, classify_model, ClassificationRecord, ModelClassification, Verdict};
pub use concurrence::{
    concurrence, concurrence_trajectory, ConcurrenceRow, ConcurrenceTrajectory, STATE_TOL,
};
pub use scan::{scan_divisibility, ScanResult, ScanRow, TimeGrid};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MarkovError {
    #[error("inconsistent CP flags: B(t1,0) is {} but B(t2,0) is {}", cp_word(*cp_t1), cp_word(*cp_t2))]
    InconsistentFlags { cp_t1: bool, cp_t2: bool },
    #[error("intermediate map flag is required when both B(t1,0) and B(t2,0) are CP")]
    IntermediateUndefined,
    #[error("time grid needs at least two points")]
    EmptyGrid,
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),
    #[error("invalid two-qubit state: {0}")]
    InvalidState(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Map(#[from] DynMapError),
    #[error(transparent)]
    Matrix(#[from] MatError),
}

fn cp_word(cp: bool) -> &'static str {
    if cp {
        "CP"
    } else {
        "NCP"
    }
}
