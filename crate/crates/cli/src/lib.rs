//! Command-line front end for `markovmaps`: model generation, divisibility
//! scans, concurrence trajectories, map diagnostics and classification.
//!
//! Exit codes: 0 on success or a CP finding, 2 on an NCP finding, 1 on usage,
//! parse or I/O failure.

// Negated float comparisons are used on purpose so that NaN takes the error branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
pub mod output;

use std::path::PathBuf;

use markovmaps::dynmaps::{DynMapError, MapFileError};
use markovmaps::markov::MarkovError;
use markovmaps::models::ModelError;
use thiserror::Error;

pub use args::{Cli, Command, GridArgs, ModelArgs, ModelKind, TolArgs};
pub use commands::{cmd_check, cmd_classify, cmd_concurrence, cmd_model, cmd_scan, run};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_NCP: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: MapFileError },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("intermediate undefined at t1 = {t1}: A(t1,0) is singular")]
    IntermediateUndefined { t1: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Map(#[from] DynMapError),
    #[error(transparent)]
    Markov(#[from] MarkovError),
}

/// Text for stdout together with the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub exit_code: u8,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            exit_code: EXIT_OK,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Check,
    Model,
    Scan,
    Concurrence,
    Classify,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub t_start: f64,
    pub t_end: f64,
    pub steps: usize,
}

/// Validated settings shared by the model-driven commands.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub model: markovmaps::models::ModelFamily,
    pub grid: GridSpec,
    pub cp_tol: f64,
    pub singular_tol: f64,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let GridSpec {
            t_start,
            t_end,
            steps,
        } = self.grid;
        if steps < 2 {
            return Err(CliError::InvalidConfig(format!(
                "--steps must be at least 2, got {steps}"
            )));
        }
        if !(t_start.is_finite() && t_start >= 0.0) {
            return Err(CliError::InvalidConfig(format!(
                "--t-start must be finite and >= 0, got {t_start}"
            )));
        }
        if !(t_end.is_finite() && t_end > t_start) {
            return Err(CliError::InvalidConfig(format!(
                "--t-end must be finite and greater than --t-start, got {t_end}"
            )));
        }
        for (name, tol) in [
            ("--cp-tol", self.cp_tol),
            ("--singular-tol", self.singular_tol),
        ] {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::InvalidConfig(format!(
                    "{name} must be positive, got {tol}"
                )));
            }
        }
        Ok(())
    }
}
