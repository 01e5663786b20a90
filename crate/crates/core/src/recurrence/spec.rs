use std::fmt;
use std::sync::Arc;

use super::RecurrenceError;
use crate::ring::{RingKind, RingValue};

/// `p_{k,i}` for `1 ≤ i ≤ k`.
pub type CoeffFn = Arc<dyn Fn(usize, usize) -> Result<RingValue, RecurrenceError> + Send + Sync>;

/// `p_i(k)` for one band position `i`.
pub type BandFn = Arc<dyn Fn(usize) -> Result<RingValue, RecurrenceError> + Send + Sync>;

/// `a_1` together with the coefficients of `a_{k+1} = Σ_{i=1..k} p_{k,i} a_i`.
#[derive(Clone)]
pub struct FullHistorySpec {
    initial: RingValue,
    coeff: CoeffFn,
}

impl FullHistorySpec {
    pub fn new<F>(initial: RingValue, coeff: F) -> Self
    where
        F: Fn(usize, usize) -> Result<RingValue, RecurrenceError> + Send + Sync + 'static,
    {
        FullHistorySpec {
            initial,
            coeff: Arc::new(coeff),
        }
    }

    pub fn from_coeff_fn(initial: RingValue, coeff: CoeffFn) -> Self {
        FullHistorySpec { initial, coeff }
    }

    /// Coefficients given as a triangular table: `table[k-1][i-1] = p_{k,i}`.
    /// Queries past the end of the table are errors.
    pub fn from_table(initial: RingValue, table: Vec<Vec<RingValue>>) -> Self {
        FullHistorySpec::new(initial, move |k, i| {
            table
                .get(k - 1)
                .and_then(|row| row.get(i - 1))
                .cloned()
                .ok_or_else(|| RecurrenceError::Undefined {
                    k,
                    detail: format!("no table entry p({k},{i})"),
                })
        })
    }

    pub fn initial(&self) -> &RingValue {
        &self.initial
    }

    pub fn with_initial(&self, initial: RingValue) -> Self {
        FullHistorySpec {
            initial,
            coeff: self.coeff.clone(),
        }
    }

    pub fn coeff_fn(&self) -> &CoeffFn {
        &self.coeff
    }

    /// `p_{k,i}`; indices outside `1 ≤ i ≤ k` are rejected.
    pub fn coeff(&self, k: usize, i: usize) -> Result<RingValue, RecurrenceError> {
        if i == 0 || i > k {
            return Err(RecurrenceError::CoefficientOutOfDomain { k, i });
        }
        (self.coeff)(k, i)
    }
}

impl fmt::Debug for FullHistorySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FullHistorySpec").field("initial", &self.initial).finish_non_exhaustive()
    }
}

/// Order-`m` recurrence `a(k) = Σ_{i=1..m} p_i(k) a(k-m+i-1)` for `k > m`,
/// with `a(1..m)` given.
#[derive(Clone)]
pub struct FixedOrderSpec {
    initials: Vec<RingValue>,
    coeffs: Vec<BandFn>,
    first_valid_k: usize,
}

impl FixedOrderSpec {
    /// `coeffs[i-1]` is `p_i`, the coefficient of `a(k-m+i-1)`; `p_m`
    /// multiplies `a(k-1)`.
    pub fn new(initials: Vec<RingValue>, coeffs: Vec<BandFn>, first_valid_k: usize) -> Result<Self, RecurrenceError> {
        let m = initials.len();
        if m == 0 {
            return Err(RecurrenceError::InvalidSpec("order must be at least 1".into()));
        }
        if coeffs.len() != m {
            return Err(RecurrenceError::InvalidSpec(format!(
                "order {m} needs {m} coefficients, got {}",
                coeffs.len()
            )));
        }
        if first_valid_k <= m {
            return Err(RecurrenceError::InvalidSpec(format!(
                "first_valid_k must exceed the order {m}, got {first_valid_k}"
            )));
        }
        Ok(FixedOrderSpec {
            initials,
            coeffs,
            first_valid_k,
        })
    }

    /// Constant coefficients, valid from `k = m + 1`.
    pub fn constant(initials: Vec<RingValue>, coeffs: Vec<RingValue>) -> Result<Self, RecurrenceError> {
        let m = initials.len();
        let coeffs = coeffs
            .into_iter()
            .map(|c| Arc::new(move |_k: usize| Ok(c.clone())) as BandFn)
            .collect();
        FixedOrderSpec::new(initials, coeffs, m + 1)
    }

    pub fn order(&self) -> usize {
        self.initials.len()
    }

    pub fn initials(&self) -> &[RingValue] {
        &self.initials
    }

    pub fn first_valid_k(&self) -> usize {
        self.first_valid_k
    }

    /// `p_i(k)` for `1 ≤ i ≤ m`, `k ≥ first_valid_k`.
    pub fn coeff(&self, i: usize, k: usize) -> Result<RingValue, RecurrenceError> {
        if k < self.first_valid_k {
            return Err(RecurrenceError::IndexBelowValidity {
                k,
                first_valid_k: self.first_valid_k,
            });
        }
        let f = self
            .coeffs
            .get(i.wrapping_sub(1))
            .ok_or(RecurrenceError::CoefficientOutOfDomain { k, i })?;
        f(k)
    }
}

impl fmt::Debug for FixedOrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FixedOrderSpec")
            .field("initials", &self.initials)
            .field("first_valid_k", &self.first_valid_k)
            .finish_non_exhaustive()
    }
}

/// Either kind of specification.
#[derive(Debug, Clone)]
pub enum AnySpec {
    FullHistory(FullHistorySpec),
    FixedOrder(FixedOrderSpec),
}

impl AnySpec {
    /// The `k×k` matrix: coefficient triangle for full-history specs, the banded
    /// shape for fixed-order ones.
    pub fn matrix(&self, k: usize) -> Result<crate::hessenberg::SquareMatrix, RecurrenceError> {
        match self {
            AnySpec::FullHistory(s) => super::full_history_matrix(s, k),
            AnySpec::FixedOrder(s) => super::fixed_order_matrix(s, k),
        }
    }

    /// First `n` terms in the spec's own indexing (`a_1..a_n` or `a(1)..a(n)`).
    pub fn eval(&self, n: usize) -> Result<SequencePrefix, RecurrenceError> {
        match self {
            AnySpec::FullHistory(s) => super::eval_full_history(s, n),
            AnySpec::FixedOrder(s) => super::eval_fixed_order(s, n),
        }
    }

    pub fn ring_hint(&self) -> RingKind {
        match self {
            AnySpec::FullHistory(s) => s.initial().kind(),
            AnySpec::FixedOrder(s) => s.initials().iter().fold(RingKind::Rational, |acc, v| acc.join(v.kind())),
        }
    }
}

impl From<FullHistorySpec> for AnySpec {
    fn from(s: FullHistorySpec) -> Self {
        AnySpec::FullHistory(s)
    }
}

impl From<FixedOrderSpec> for AnySpec {
    fn from(s: FixedOrderSpec) -> Self {
        AnySpec::FixedOrder(s)
    }
}

/// Terms `a_1, a_2, ...`; indexing through [`SequencePrefix::term`] is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePrefix {
    terms: Vec<RingValue>,
}

impl SequencePrefix {
    pub fn new(terms: Vec<RingValue>) -> Self {
        SequencePrefix { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// 1-based access.
    pub fn term(&self, k: usize) -> Option<&RingValue> {
        self.terms.get(k.checked_sub(1)?)
    }

    pub fn terms(&self) -> &[RingValue] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<RingValue> {
        self.terms
    }
}
