use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{MatrixError, SquareMatrix};
use crate::ring::{RingError, RingKind, RingValue};

/// Wire form of a matrix:
/// `{"size": n, "ring": "rational"|"poly", "entries": [[string, ...], ...]}`
/// with every entry in canonical text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub size: usize,
    pub ring: RingKind,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum MatrixJsonError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("size field is {declared} but entries form a {rows}-row matrix")]
    SizeMismatch { declared: usize, rows: usize },
    #[error("entry ({row}, {col}): {source}")]
    Entry {
        row: usize,
        col: usize,
        #[source]
        source: RingError,
    },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

impl MatrixJson {
    pub fn from_matrix(m: &SquareMatrix, ring: RingKind) -> Self {
        MatrixJson {
            size: m.size(),
            ring,
            entries: m.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix JSON serializes")
    }

    pub fn parse(text: &str) -> Result<Self, MatrixJsonError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Rebuilds the matrix; the structure flag is detected from the zeros.
    pub fn to_matrix(&self) -> Result<SquareMatrix, MatrixJsonError> {
        if self.entries.len() != self.size {
            return Err(MatrixJsonError::SizeMismatch {
                declared: self.size,
                rows: self.entries.len(),
            });
        }
        let mut rows = Vec::with_capacity(self.size);
        for (i, row) in self.entries.iter().enumerate() {
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    s.parse::<RingValue>()
                        .and_then(|v| v.into_kind(self.ring))
                        .map_err(|source| MatrixJsonError::Entry { row: i, col: j, source })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        Ok(SquareMatrix::from_rows(rows)?.with_detected_structure())
    }
}
