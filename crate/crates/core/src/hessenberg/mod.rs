//! Dense square matrices over [`RingValue`] and their determinants.
//!
//! Indices in this module are 0-based: `get(i, j)` is row `i`, column `j`.

mod det;
mod format;
mod random;

pub use det::{det_bareiss, det_hessenberg_fast, det_laplace, DetMethod, LAPLACE_MAX_SIZE};
pub use format::{MatrixJson, MatrixJsonError};
pub use random::{random_hessenberg, HessenbergSampler};

use thiserror::Error;

use crate::ring::{RingError, RingKind, RingValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    General,
    /// Zero below the first subdiagonal.
    UpperHessenberg,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix size must be at least 1")]
    Empty,
    #[error("expected {expected} entries for a square matrix, got {actual}")]
    Shape { expected: usize, actual: usize },
    #[error("Laplace expansion is limited to size {max}, got {size}")]
    SizeTooLarge { size: usize, max: usize },
    #[error("matrix is not upper Hessenberg (nonzero entry at row {row}, column {col})")]
    NotHessenberg { row: usize, col: usize },
    #[error("matrix is flagged General; the Hessenberg algorithm needs an UpperHessenberg matrix")]
    GeneralStructure,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Square matrix stored densely in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    size: usize,
    entries: Vec<RingValue>,
    structure: Structure,
}

impl SquareMatrix {
    pub fn new(size: usize, entries: Vec<RingValue>) -> Result<Self, MatrixError> {
        if size == 0 {
            return Err(MatrixError::Empty);
        }
        if entries.len() != size * size {
            return Err(MatrixError::Shape {
                expected: size * size,
                actual: entries.len(),
            });
        }
        Ok(SquareMatrix {
            size,
            entries,
            structure: Structure::General,
        })
    }

    pub fn from_rows(rows: Vec<Vec<RingValue>>) -> Result<Self, MatrixError> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(MatrixError::Shape {
                    expected: size * size,
                    actual: row.len() * size,
                });
            }
            entries.extend(row);
        }
        SquareMatrix::new(size, entries)
    }

    /// Builds a matrix flagged [`Structure::UpperHessenberg`], checking the
    /// zero pattern.
    pub fn upper_hessenberg(size: usize, entries: Vec<RingValue>) -> Result<Self, MatrixError> {
        SquareMatrix::new(size, entries)?.into_upper_hessenberg()
    }

    pub fn into_upper_hessenberg(mut self) -> Result<Self, MatrixError> {
        if let Some((row, col)) = self.hessenberg_violation() {
            return Err(MatrixError::NotHessenberg { row, col });
        }
        self.structure = Structure::UpperHessenberg;
        Ok(self)
    }

    /// Flags the matrix as upper Hessenberg when its zero pattern allows it.
    pub fn with_detected_structure(mut self) -> Self {
        self.structure = if self.hessenberg_violation().is_none() {
            Structure::UpperHessenberg
        } else {
            Structure::General
        };
        self
    }

    pub fn identity(size: usize) -> Result<Self, MatrixError> {
        let entries = (0..size * size)
            .map(|idx| if idx / size == idx % size { RingValue::one() } else { RingValue::zero() })
            .collect();
        SquareMatrix::new(size, entries).map(Self::with_detected_structure)
    }

    pub(crate) fn hessenberg_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.size {
            for j in 0..i.saturating_sub(1) {
                if !self.get(i, j).is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn get(&self, row: usize, col: usize) -> &RingValue {
        &self.entries[row * self.size + col]
    }

    pub fn entries(&self) -> &[RingValue] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RingValue]> {
        self.entries.chunks(self.size)
    }

    /// Returns a copy with one entry replaced. The structure flag is kept only
    /// if the new entry respects it.
    pub fn with_entry(&self, row: usize, col: usize, value: RingValue) -> Self {
        let mut out = self.clone();
        out.entries[row * self.size + col] = value;
        if out.structure == Structure::UpperHessenberg && row > col + 1 && !out.get(row, col).is_zero() {
            out.structure = Structure::General;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let entries = (0..n * n).map(|idx| self.get(idx % n, idx / n).clone()).collect();
        SquareMatrix {
            size: n,
            entries,
            structure: Structure::General,
        }
    }

    /// `Poly` if any entry depends on `x`.
    pub fn ring_kind(&self) -> RingKind {
        self.entries
            .iter()
            .fold(RingKind::Rational, |acc, v| match v.as_rational() {
                Some(_) => acc,
                None => RingKind::Poly,
            })
    }

    /// Text rendering with right-aligned columns.
    pub fn to_text(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> = (0..self.size)
            .map(|j| (0..self.size).map(|i| cells[i * self.size + j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for i in 0..self.size {
            let line: Vec<String> = (0..self.size)
                .map(|j| format!("{:>w$}", cells[i * self.size + j], w = widths[j]))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// LaTeX `\left| \begin{array} ... \right|` block.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\left|\\begin{array}{");
        out.push_str(&"r".repeat(self.size));
        out.push_str("}\n");
        for (i, row) in self.rows().enumerate() {
            let line: Vec<String> = row.iter().map(RingValue::to_latex).collect();
            out.push_str(&line.join(" & "));
            if i + 1 < self.size {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{array}\\right|\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| RingValue::from(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SquareMatrix::new(0, vec![]), Err(MatrixError::Empty));
        assert!(matches!(
            SquareMatrix::new(2, vec![RingValue::one()]),
            Err(MatrixError::Shape { expected: 4, actual: 1 })
        ));
        let bad = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(
            bad.into_upper_hessenberg(),
            Err(MatrixError::NotHessenberg { row: 2, col: 0 })
        );
    }

    #[test]
    fn structure_detection() {
        let h = m(&[&[1, 1, 1], &[-1, 1, 0], &[0, -1, 1]]).with_detected_structure();
        assert_eq!(h.structure(), Structure::UpperHessenberg);
        let g = h.with_entry(2, 0, RingValue::from(4));
        assert_eq!(g.structure(), Structure::General);
        assert_eq!(h.transpose().get(0, 1), &RingValue::from(-1));
    }

    #[test]
    fn text_and_latex() {
        let h = m(&[&[1, 1], &[-1, 10]]);
        assert_eq!(h.to_text(), " 1   1\n-1  10\n");
        assert_eq!(h.to_latex(), "\\left|\\begin{array}{rr}\n1 & 1 \\\\\n-1 & 10\n\\end{array}\\right|\n");
    }
}
