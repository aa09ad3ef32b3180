//! A-form and B-form dynamical maps: conversion, composition, the
//! intermediate map between two times, Choi construction from an action,
//! admissibility diagnostics and Kraus decomposition.

mod choi;
mod diagnostics;
mod kraus;
pub mod mapfile;
mod maps;

use thiserror::Error;

use crate::matcore::MatError;

pub use choi::{choi_from_action, LINEARITY_TOL};
pub use diagnostics::{
    diagnose, min_choi_eigenvalue, MapDiagnostics, DEFAULT_BLOCK_SAMPLES, DEFAULT_CP_TOL,
    DEFAULT_SEED, DEFAULT_TP_TOL,
};
pub use kraus::{kraus_completeness, kraus_from_bmap};
pub use mapfile::{MapFile, MapFileError, MapKind};
pub use maps::{a_to_b, apply_amap, b_to_a, compose, identity_amap, intermediate_amap, AMap, BMap};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynMapError {
    #[error(transparent)]
    Matrix(#[from] MatError),
    #[error("system dimension must be positive, got {0}")]
    InvalidDimension(usize),
    #[error("map matrix of shape {shape:?} does not match system dimension {d}")]
    ShapeMismatch { d: usize, shape: (usize, usize) },
    #[error("state of shape {shape:?} does not match system dimension {d}")]
    StateShape { d: usize, shape: (usize, usize) },
    #[error("maps act on different system dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("intermediate map undefined: A(t1,t0) is singular (best pivot {pivot:e})")]
    SingularIntermediateMap { pivot: f64 },
    #[error("action failed the linearity spot-check (deviation {deviation:e})")]
    NonLinearAction { deviation: f64 },
    #[error("map is not completely positive (Choi eigenvalue {min_eigenvalue:e})")]
    NotCP { min_eigenvalue: f64 },
}

#[cfg(test)]
mod tests;
