//! Text file format for dynamical maps.
//!
//! ```json
//! {"d": 2, "kind": "A", "re": [[...], ...], "im": [[...], ...]}
//! ```
//!
//! `re` and `im` are `d²×d²` row-major nested arrays. `kind` says whether the
//! matrix is the A-form or the B-form of the map.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AMap, BMap};
use crate::matcore::ComplexMatrix;

/// Largest system dimension accepted from a file.
pub const MAX_FILE_DIM: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MapKind {
    A,
    B,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapKind::A => "A",
            MapKind::B => "B",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MapFileError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

impl MapFileError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        MapFileError::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawMapFile {
    d: u64,
    kind: MapKind,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// A parsed map file: dimension, form, and the `d²×d²` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct MapFile {
    pub kind: MapKind,
    pub d: usize,
    pub matrix: ComplexMatrix,
}

impl MapFile {
    pub fn from_amap(a: &AMap) -> Self {
        Self {
            kind: MapKind::A,
            d: a.dim(),
            matrix: a.matrix().clone(),
        }
    }

    pub fn from_bmap(b: &BMap) -> Self {
        Self {
            kind: MapKind::B,
            d: b.dim(),
            matrix: b.matrix().clone(),
        }
    }

    /// The map in A-form regardless of the stored kind.
    pub fn to_amap(&self) -> AMap {
        match self.kind {
            MapKind::A => AMap::new(self.d, self.matrix.clone()),
            MapKind::B => BMap::new(self.d, self.matrix.clone()).map(|b| b.to_amap()),
        }
        .expect("shape validated when parsed")
    }

    pub fn parse(text: &str) -> Result<Self, MapFileError> {
        let raw: RawMapFile = serde_json::from_str(text).map_err(|e| {
            let full = e.to_string();
            let position = format!(" at line {} column {}", e.line(), e.column());
            MapFileError::Syntax {
                line: e.line(),
                column: e.column(),
                message: full.strip_suffix(&position).unwrap_or(&full).to_string(),
            }
        })?;

        let d = usize::try_from(raw.d)
            .ok()
            .filter(|&d| (1..=MAX_FILE_DIM).contains(&d))
            .ok_or_else(|| {
                MapFileError::field(
                    "d",
                    format!("must be between 1 and {MAX_FILE_DIM}, got {}", raw.d),
                )
            })?;
        let n = d * d;

        for (name, rows) in [("re", &raw.re), ("im", &raw.im)] {
            if rows.len() != n {
                return Err(MapFileError::field(
                    name,
                    format!("expected {n} rows, found {}", rows.len()),
                ));
            }
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(MapFileError::field(
                        format!("{name}[{i}]"),
                        format!("expected {n} entries, found {}", row.len()),
                    ));
                }
                if let Some(j) = row.iter().position(|x| !x.is_finite()) {
                    return Err(MapFileError::field(
                        format!("{name}[{i}][{j}]"),
                        "value is not finite",
                    ));
                }
            }
        }

        let data = raw
            .re
            .iter()
            .flatten()
            .zip(raw.im.iter().flatten())
            .map(|(&re, &im)| Complex64::new(re, im))
            .collect();
        let matrix =
            ComplexMatrix::new(n, n, data).map_err(|e| MapFileError::field("re", e.to_string()))?;
        Ok(Self {
            kind: raw.kind,
            d,
            matrix,
        })
    }

    pub fn to_json_string(&self) -> String {
        let n = self.matrix.nrows();
        let raw = RawMapFile {
            d: self.d as u64,
            kind: self.kind,
            re: (0..n)
                .map(|i| self.matrix.row(i).iter().map(|z| z.re).collect())
                .collect(),
            im: (0..n)
                .map(|i| self.matrix.row(i).iter().map(|z| z.im).collect())
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("finite values always serialize");
        s.push('\n');
        s
    }
}

impl FromStr for MapFile {
    type Err = MapFileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}
