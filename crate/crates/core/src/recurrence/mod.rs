//! Recurrence specifications, direct evaluators and their determinant
//! representations.
//!
//! A full-history recurrence `a_{k+1} = Σ_{i=1..k} p_{k,i} a_i` satisfies
//! `a_{k+1} = a_1 · det D_k`, where `D_k` is the `k×k` upper-Hessenberg matrix
//! with `D_k[i][j] = p_{j,i}` on and above the diagonal and `-1` on the
//! subdiagonal (1-based indices).
//!
//! A fixed-order recurrence of order `m` is reduced to that form through the
//! shifted sequence `b_1 = 1`, `b_{j+1} = a(j)`. The first row of the
//! resulting matrix holds `a(1), ..., a(m)` and every column `j > m` carries
//! the band `p_1(j), ..., p_m(j)` ending on the diagonal. The band argument is
//! the column index `j`: only then does the determinant equal `a(k)` when the
//! coefficients depend on `k`. For constant coefficients this is the familiar
//! display with the same band in every column.

mod spec;
mod verify;

pub use spec::{AnySpec, BandFn, CoeffFn, FixedOrderSpec, FullHistorySpec, SequencePrefix};
pub use verify::{verify_spec, verify_spec_with, Check, VerificationReport};

use thiserror::Error;

use crate::hessenberg::{MatrixError, SquareMatrix};
use crate::ring::{RingError, RingValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("term count must be at least 1")]
    EmptyRequest,
    #[error("k = {k} is below first_valid_k = {first_valid_k}")]
    IndexBelowValidity { k: usize, first_valid_k: usize },
    #[error("coefficient index out of domain: k = {k}, i = {i}")]
    CoefficientOutOfDomain { k: usize, i: usize },
    #[error("coefficient undefined at k = {k}: {detail}")]
    Undefined { k: usize, detail: String },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `a_1, ..., a_n` from `a_{k+1} = Σ_{i=1..k} p_{k,i} a_i`.
pub fn eval_full_history(spec: &FullHistorySpec, n: usize) -> Result<SequencePrefix, RecurrenceError> {
    if n == 0 {
        return Err(RecurrenceError::EmptyRequest);
    }
    let mut terms = Vec::with_capacity(n);
    terms.push(spec.initial().clone());
    for k in 1..n {
        let mut next = RingValue::zero();
        for i in 1..=k {
            let p = spec.coeff(k, i)?;
            if !p.is_zero() {
                next = &next + &(&p * &terms[i - 1]);
            }
        }
        terms.push(next);
    }
    Ok(SequencePrefix::new(terms))
}

/// `a(1), ..., a(n)` from `a(k) = Σ_{i=1..m} p_i(k) a(k-m+i-1)`.
pub fn eval_fixed_order(spec: &FixedOrderSpec, n: usize) -> Result<SequencePrefix, RecurrenceError> {
    if n == 0 {
        return Err(RecurrenceError::EmptyRequest);
    }
    let m = spec.order();
    let mut terms: Vec<RingValue> = spec.initials().iter().take(n).cloned().collect();
    for k in m + 1..=n {
        let mut next = RingValue::zero();
        for i in 1..=m {
            let p = spec.coeff(i, k)?;
            if !p.is_zero() {
                // a(k-m+i-1) sits at 0-based position k-m+i-2.
                next = &next + &(&p * &terms[k - m + i - 2]);
            }
        }
        terms.push(next);
    }
    Ok(SequencePrefix::new(terms))
}

/// The `k×k` determinant matrix of a full-history recurrence.
pub fn full_history_matrix(spec: &FullHistorySpec, k: usize) -> Result<SquareMatrix, RecurrenceError> {
    if k == 0 {
        return Err(MatrixError::Empty.into());
    }
    let mut entries = vec![RingValue::zero(); k * k];
    for col in 1..=k {
        for row in 1..=col {
            entries[(row - 1) * k + (col - 1)] = spec.coeff(col, row)?;
        }
        if col < k {
            entries[col * k + (col - 1)] = RingValue::from(-1);
        }
    }
    Ok(SquareMatrix::upper_hessenberg(k, entries)?)
}

/// Rewrites an order-`m` spec as the full-history recurrence of
/// `b_1 = 1, b_{j+1} = a(j)`:
///
/// * `j ≤ m`: `p_{j,1} = a(j)`, all other entries of column `j` zero;
/// * `j > m`: `p_{j, j-m+i} = p_i(j)` for `i = 1..m`, zero above the band.
pub fn embed_fixed_order(spec: &FixedOrderSpec) -> FullHistorySpec {
    let spec = spec.clone();
    FullHistorySpec::new(RingValue::one(), move |j, i| {
        let m = spec.order();
        if j <= m {
            return Ok(if i == 1 {
                spec.initials()[j - 1].clone()
            } else {
                RingValue::zero()
            });
        }
        if j < spec.first_valid_k() {
            return Err(RecurrenceError::IndexBelowValidity {
                k: j,
                first_valid_k: spec.first_valid_k(),
            });
        }
        if i + m > j {
            spec.coeff(i + m - j, j)
        } else {
            Ok(RingValue::zero())
        }
    })
}

/// The `k×k` banded matrix whose determinant is `a(k)`.
pub fn fixed_order_matrix(spec: &FixedOrderSpec, k: usize) -> Result<SquareMatrix, RecurrenceError> {
    full_history_matrix(&embed_fixed_order(spec), k)
}
