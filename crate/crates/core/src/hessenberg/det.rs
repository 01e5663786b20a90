use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{MatrixError, SquareMatrix, Structure};
use crate::ring::RingValue;

/// Largest matrix accepted by [`det_laplace`]; 8! cofactor terms is still
/// instant, 12! is not.
pub const LAPLACE_MAX_SIZE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetMethod {
    Fast,
    Bareiss,
    Laplace,
}

impl DetMethod {
    pub const ALL: [DetMethod; 3] = [DetMethod::Fast, DetMethod::Bareiss, DetMethod::Laplace];

    pub fn as_str(self) -> &'static str {
        match self {
            DetMethod::Fast => "fast",
            DetMethod::Bareiss => "bareiss",
            DetMethod::Laplace => "laplace",
        }
    }

    pub fn det(self, m: &SquareMatrix) -> Result<RingValue, MatrixError> {
        match self {
            DetMethod::Fast => det_hessenberg_fast(m),
            DetMethod::Bareiss => Ok(det_bareiss(m)),
            DetMethod::Laplace => det_laplace(m),
        }
    }
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DetMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DetMethod::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected fast, bareiss or laplace)"))
    }
}

/// Cofactor expansion along the first row. Exponential; only used as an
/// oracle for small matrices.
pub fn det_laplace(m: &SquareMatrix) -> Result<RingValue, MatrixError> {
    let n = m.size();
    if n > LAPLACE_MAX_SIZE {
        return Err(MatrixError::SizeTooLarge {
            size: n,
            max: LAPLACE_MAX_SIZE,
        });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace_minor(m, 0, &cols))
}

fn laplace_minor(m: &SquareMatrix, row: usize, cols: &[usize]) -> RingValue {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = RingValue::zero();
    let mut rest = Vec::with_capacity(cols.len() - 1);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&x| x != c));
        let term = entry * &laplace_minor(m, row + 1, &rest);
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Single-step fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so each division is exact
/// in ℚ\[x\] as well as in ℚ. A zero pivot is replaced by the first nonzero
/// entry below it, flipping the sign; an all-zero column means the
/// determinant is zero.
pub fn det_bareiss(m: &SquareMatrix) -> RingValue {
    let n = m.size();
    let mut a: Vec<RingValue> = m.entries().to_vec();
    let idx = |i: usize, j: usize| i * n + j;
    let mut negate = false;
    let mut prev = RingValue::one();

    for k in 0..n.saturating_sub(1) {
        if a[idx(k, k)].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                return RingValue::zero();
            };
            for j in k..n {
                a.swap(idx(k, j), idx(r, j));
            }
            negate = !negate;
        }
        let pivot = a[idx(k, k)].clone();
        for i in k + 1..n {
            let lead = a[idx(i, k)].clone();
            for j in k + 1..n {
                let num = &(&pivot * &a[idx(i, j)]) - &(&lead * &a[idx(k, j)]);
                a[idx(i, j)] = num
                    .exact_div(&prev)
                    .expect("Bareiss quotients are minors and divide exactly");
            }
            a[idx(i, k)] = RingValue::zero();
        }
        prev = pivot;
    }

    let det = a[idx(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// O(n²) determinant of an upper-Hessenberg matrix via the leading principal
/// minors:
///
/// `d_c = Σ_{r≤c} m[r][c] · Π_{t=r+1..c} (−m[t][t−1]) · d_{r−1}`, `d_0 = 1`.
///
/// With a subdiagonal of `−1` every product is `1` and this is the recurrence
/// `a_{c+1} = Σ p_{c,r} a_r` itself.
pub fn det_hessenberg_fast(m: &SquareMatrix) -> Result<RingValue, MatrixError> {
    if m.structure() != Structure::UpperHessenberg {
        return Err(match m.hessenberg_violation() {
            Some((row, col)) => MatrixError::NotHessenberg { row, col },
            None => MatrixError::GeneralStructure,
        });
    }
    let n = m.size();
    // minors[r] = determinant of the leading r×r block.
    let mut minors = Vec::with_capacity(n + 1);
    minors.push(RingValue::one());
    for c in 0..n {
        let mut sum = RingValue::zero();
        let mut chain = RingValue::one();
        for r in (0..=c).rev() {
            let term = &(m.get(r, c) * &chain) * &minors[r];
            sum = &sum + &term;
            if r > 0 {
                chain = &chain * &(-m.get(r, r - 1));
            }
        }
        minors.push(sum);
    }
    Ok(minors.pop().expect("n ≥ 1"))
}
