use rayon::prelude::*;
use serde::Serialize;

use super::MarkovError;
use crate::dynmaps::{intermediate_amap, min_choi_eigenvalue, AMap, DynMapError};
use crate::models::ModelFamily;

/// Strictly increasing, finite, non-negative sample times.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TimeGrid(Vec<f64>);

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self, MarkovError> {
        if times.is_empty() {
            return Err(MarkovError::EmptyGrid);
        }
        if let Some(t) = times.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
            return Err(MarkovError::InvalidGrid(format!(
                "time {t} is negative or not finite"
            )));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(MarkovError::InvalidGrid(
                "times must be strictly increasing".into(),
            ));
        }
        Ok(Self(times))
    }

    /// `steps` evenly spaced points from `start` to `end` inclusive.
    pub fn linspace(start: f64, end: f64, steps: usize) -> Result<Self, MarkovError> {
        if steps < 2 {
            return Err(MarkovError::InvalidGrid(format!(
                "need at least 2 steps, got {steps}"
            )));
        }
        if !(end > start) {
            return Err(MarkovError::InvalidGrid(format!(
                "need t_end > t_start, got {start}..{end}"
            )));
        }
        let h = (end - start) / (steps - 1) as f64;
        let mut times: Vec<f64> = (0..steps).map(|k| start + h * k as f64).collect();
        times[steps - 1] = end;
        Self::new(times)
    }

    pub fn times(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub t1: f64,
    pub t2: f64,
    /// `NaN` when the intermediate map is undefined.
    pub min_choi_eig: f64,
    /// `None` when the intermediate map is undefined.
    pub cp: Option<bool>,
    /// `‖A(t2,t1) − A(t2−t1,0)‖_F`, `NaN` when undefined.
    pub semigroup_defect: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanResult {
    /// Ordered by `(t1, t2)`.
    pub rows: Vec<ScanRow>,
}

impl ScanResult {
    pub fn defined(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.cp.is_some())
    }

    pub fn all_cp(&self) -> bool {
        self.rows.iter().all(|r| r.cp == Some(true))
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.defined()
            .map(|r| r.min_choi_eig)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_semigroup_defect(&self) -> f64 {
        self.defined()
            .map(|r| r.semigroup_defect)
            .fold(0.0, f64::max)
    }
}

/// Intermediate-map CP test over every ordered pair `t1 < t2` of the grid.
///
/// Pairs are evaluated in parallel; the output order is fixed. Pairs where
/// `A(t1,0)` is singular are kept with `cp = None`.
pub fn scan_divisibility(
    family: &ModelFamily,
    grid: &TimeGrid,
    cp_tol: f64,
    singular_tol: f64,
) -> Result<ScanResult, MarkovError> {
    let times = grid.times();
    if times.len() < 2 {
        return Err(MarkovError::EmptyGrid);
    }
    if times[0] <= 0.0 {
        return Err(MarkovError::InvalidGrid(
            "scan times must be positive".into(),
        ));
    }

    let maps: Vec<AMap> = times
        .iter()
        .map(|&t| family.amap(t))
        .collect::<Result<_, _>>()?;
    let pairs: Vec<(usize, usize)> = (0..times.len())
        .flat_map(|i| (i + 1..times.len()).map(move |j| (i, j)))
        .collect();

    let rows = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<ScanRow, MarkovError> {
            let (t1, t2) = (times[i], times[j]);
            match intermediate_amap(&maps[j], &maps[i], singular_tol) {
                Ok(inter) => {
                    let min_choi_eig = min_choi_eigenvalue(&inter);
                    let semigroup_defect = inter.distance(&family.amap(t2 - t1)?);
                    Ok(ScanRow {
                        t1,
                        t2,
                        min_choi_eig,
                        cp: Some(min_choi_eig >= -cp_tol),
                        semigroup_defect,
                    })
                }
                Err(DynMapError::SingularIntermediateMap { .. }) => Ok(ScanRow {
                    t1,
                    t2,
                    min_choi_eig: f64::NAN,
                    cp: None,
                    semigroup_defect: f64::NAN,
                }),
                Err(e) => Err(e.into()),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ScanResult { rows })
}
