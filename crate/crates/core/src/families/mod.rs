//! The classical sequences that have a determinant representation, each with
//! an oracle that computes the same objects without any determinant.
//!
//! Indexing convention: for every family, the determinant of size `n`
//! represents the object `family_oracle(id, n, params)`.
//!
//! | family          | size-`n` determinant                              |
//! |-----------------|---------------------------------------------------|
//! | naturals        | `n`                                               |
//! | horner          | `p_0 x^{n-1} + p_1 x^{n-2} + ... + p_{n-1}`       |
//! | partial-sums    | `p_0 + ... + p_{n-1}`                             |
//! | fibonacci-poly  | `F_{n+1}(x)` with `F_1 = 1`, `F_2 = x`            |
//! | fibonacci-num   | `F_{n+1}` with `F_1 = F_2 = 1`                    |
//! | lucas-poly      | `L_n(x)` with `L_1 = x`, `L_2 = x^2 + 2`          |
//! | chebyshev-t     | `T_n(x)`                                          |
//! | chebyshev-u     | `U_n(x)`                                          |
//! | hermite         | `H_n(x)` (physicists')                            |
//! | legendre        | `P_n(x)`                                          |
//! | laguerre        | `L_n(x)`                                          |
//! | continuant      | `K(p_1, ..., p_n)`                                |
//! | ode-example     | `u(n-1)`, series coefficient of `(x+1)y''+y'+xy=0` |
//!
//! The Lucas matrix with `2` in position (1, 2) is sometimes labelled
//! `L_{n+1}`; with the usual indexing its size-`n` determinant is `L_n`.
//! These tridiagonal forms are not the Jacobi-matrix representations of
//! orthonormal polynomials: the subdiagonal is `-1` and the weights sit above
//! the diagonal.

mod ode;
mod oracle;

pub use ode::{ode_coefficients, ode_residual_check, ode_spec};
pub use oracle::family_oracle;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::recurrence::{AnySpec, FullHistorySpec, RecurrenceError};
use crate::ring::{Polynomial, Rational, RingKind, RingValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Naturals,
    Horner,
    PartialSums,
    FibonacciPoly,
    FibonacciNum,
    LucasPoly,
    ChebyshevT,
    ChebyshevU,
    Hermite,
    Legendre,
    Laguerre,
    Continuant,
    OdeExample,
}

impl FamilyId {
    pub const ALL: [FamilyId; 13] = [
        FamilyId::Naturals,
        FamilyId::Horner,
        FamilyId::PartialSums,
        FamilyId::FibonacciPoly,
        FamilyId::FibonacciNum,
        FamilyId::LucasPoly,
        FamilyId::ChebyshevT,
        FamilyId::ChebyshevU,
        FamilyId::Hermite,
        FamilyId::Legendre,
        FamilyId::Laguerre,
        FamilyId::Continuant,
        FamilyId::OdeExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Naturals => "naturals",
            FamilyId::Horner => "horner",
            FamilyId::PartialSums => "partial-sums",
            FamilyId::FibonacciPoly => "fibonacci-poly",
            FamilyId::FibonacciNum => "fibonacci-num",
            FamilyId::LucasPoly => "lucas-poly",
            FamilyId::ChebyshevT => "chebyshev-t",
            FamilyId::ChebyshevU => "chebyshev-u",
            FamilyId::Hermite => "hermite",
            FamilyId::Legendre => "legendre",
            FamilyId::Laguerre => "laguerre",
            FamilyId::Continuant => "continuant",
            FamilyId::OdeExample => "ode-example",
        }
    }

    pub fn takes_params(self) -> bool {
        matches!(self, FamilyId::Horner | FamilyId::PartialSums | FamilyId::Continuant)
    }

    /// Ring the family's objects live in (for parameter-free families; the
    /// parametric ones follow their parameters, Horner always being in ℚ\[x\]).
    pub fn ring(self) -> RingKind {
        match self {
            FamilyId::Naturals
            | FamilyId::PartialSums
            | FamilyId::FibonacciNum
            | FamilyId::Continuant
            | FamilyId::OdeExample => RingKind::Rational,
            _ => RingKind::Poly,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

/// Coefficient list for the parametric families: `p_0..p_n` for Horner and
/// partial sums, `p_1..p_n` for continuants.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyParams {
    coeffs: Option<Vec<RingValue>>,
}

impl FamilyParams {
    pub fn none() -> Self {
        FamilyParams { coeffs: None }
    }

    pub fn coeffs(coeffs: Vec<RingValue>) -> Self {
        FamilyParams { coeffs: Some(coeffs) }
    }

    pub fn as_slice(&self) -> Option<&[RingValue]> {
        self.coeffs.as_deref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("family {0} needs a coefficient list")]
    MissingParams(FamilyId),
    #[error("family {0} takes no parameters")]
    UnexpectedParams(FamilyId),
    #[error("n = {n} is outside the valid range 1..={max} for {id}")]
    OutOfRange { id: FamilyId, n: usize, max: usize },
}

fn checked_params(id: FamilyId, params: &FamilyParams) -> Result<Option<Arc<Vec<RingValue>>>, FamilyError> {
    match (id.takes_params(), params.as_slice()) {
        (true, Some(p)) if !p.is_empty() => Ok(Some(Arc::new(p.to_vec()))),
        (true, _) => Err(FamilyError::MissingParams(id)),
        (false, Some(_)) => Err(FamilyError::UnexpectedParams(id)),
        (false, None) => Ok(None),
    }
}

/// Largest valid `n` for the family with these parameters.
pub fn max_index(id: FamilyId, params: &FamilyParams) -> Result<usize, FamilyError> {
    Ok(checked_params(id, params)?.map_or(usize::MAX, |p| p.len()))
}

pub(crate) fn check_range(id: FamilyId, n: usize, params: &FamilyParams) -> Result<(), FamilyError> {
    let max = max_index(id, params)?;
    if n == 0 || n > max {
        return Err(FamilyError::OutOfRange { id, n, max });
    }
    Ok(())
}

fn rat(n: i64, d: i64) -> RingValue {
    RingValue::Rational(Rational::from_ratio(n, d).expect("nonzero denominator"))
}

fn lin(c0: Rational, c1: Rational) -> RingValue {
    RingValue::Poly(Polynomial::from_coeffs(vec![c0, c1]))
}

/// Column 1 holds `first`; column `j ≥ 2` holds `sup(j)` just above the
/// diagonal and `diag(j)` on it.
fn tridiagonal(
    first: RingValue,
    diag: impl Fn(usize) -> RingValue + Send + Sync + 'static,
    sup: impl Fn(usize) -> RingValue + Send + Sync + 'static,
) -> FullHistorySpec {
    FullHistorySpec::new(RingValue::one(), move |k, i| {
        Ok(if k == 1 {
            first.clone()
        } else if i == k {
            diag(k)
        } else if i + 1 == k {
            sup(k)
        } else {
            RingValue::zero()
        })
    })
}

fn param_at(params: &[RingValue], idx: usize, k: usize) -> Result<RingValue, RecurrenceError> {
    params.get(idx).cloned().ok_or_else(|| RecurrenceError::Undefined {
        k,
        detail: format!("only {} parameters supplied", params.len()),
    })
}

/// First-row parameters `p_0, p_1, ...` with `diag` on the diagonal from
/// column 2 on.
fn first_row(params: Arc<Vec<RingValue>>, diag: RingValue) -> FullHistorySpec {
    FullHistorySpec::new(RingValue::one(), move |k, i| {
        if i == 1 {
            param_at(&params, k - 1, k)
        } else if i == k {
            Ok(diag.clone())
        } else {
            Ok(RingValue::zero())
        }
    })
}

/// The recurrence whose determinant of size `n` is the family's `n`-th
/// object.
pub fn family_spec(id: FamilyId, params: &FamilyParams) -> Result<AnySpec, FamilyError> {
    let params = checked_params(id, params)?;
    let x = RingValue::x;
    let spec = match id {
        FamilyId::Naturals => FullHistorySpec::new(RingValue::one(), |k, i| {
            Ok(if i == 1 || i == k { RingValue::one() } else { RingValue::zero() })
        }),
        FamilyId::Horner => first_row(params.expect("checked"), x()),
        FamilyId::PartialSums => first_row(params.expect("checked"), RingValue::one()),
        FamilyId::FibonacciPoly => tridiagonal(x(), move |_| x(), |_| RingValue::one()),
        FamilyId::FibonacciNum => tridiagonal(RingValue::one(), |_| RingValue::one(), |_| RingValue::one()),
        FamilyId::LucasPoly => tridiagonal(x(), move |_| x(), |j| RingValue::from(if j == 2 { 2 } else { 1 })),
        FamilyId::ChebyshevT => tridiagonal(x(), |_| lin(Rational::zero(), Rational::from(2)), |_| RingValue::from(-1)),
        FamilyId::ChebyshevU => tridiagonal(
            lin(Rational::zero(), Rational::from(2)),
            |_| lin(Rational::zero(), Rational::from(2)),
            |_| RingValue::from(-1),
        ),
        FamilyId::Hermite => tridiagonal(
            lin(Rational::zero(), Rational::from(2)),
            |_| lin(Rational::zero(), Rational::from(2)),
            |j| RingValue::from(-2 * (j as i64 - 1)),
        ),
        // P_j = ((2j-1)/j) x P_{j-1} - ((j-1)/j) P_{j-2}
        FamilyId::Legendre => tridiagonal(
            x(),
            |j| {
                let j = j as i64;
                lin(Rational::zero(), Rational::from_ratio(2 * j - 1, j).expect("j ≥ 1"))
            },
            |j| rat(-(j as i64 - 1), j as i64),
        ),
        // j L_j = (2j-1-x) L_{j-1} - (j-1) L_{j-2}
        FamilyId::Laguerre => tridiagonal(
            lin(Rational::one(), Rational::from(-1)),
            |j| {
                let j = j as i64;
                lin(
                    Rational::from_ratio(2 * j - 1, j).expect("j ≥ 1"),
                    Rational::from_ratio(-1, j).expect("j ≥ 1"),
                )
            },
            |j| rat(-(j as i64 - 1), j as i64),
        ),
        FamilyId::Continuant => {
            let p = params.expect("checked");
            FullHistorySpec::new(RingValue::one(), move |k, i| {
                if i == k {
                    param_at(&p, k - 1, k)
                } else if i + 1 == k {
                    Ok(RingValue::one())
                } else {
                    Ok(RingValue::zero())
                }
            })
        }
        FamilyId::OdeExample => return Ok(AnySpec::FixedOrder(ode_spec())),
    };
    Ok(AnySpec::FullHistory(spec))
}

/// The size-`n` determinant matrix of the family.
pub fn family_matrix(
    id: FamilyId,
    n: usize,
    params: &FamilyParams,
) -> Result<crate::hessenberg::SquareMatrix, FamilyMatrixError> {
    check_range(id, n, params)?;
    Ok(family_spec(id, params)?.matrix(n)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyMatrixError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
}
