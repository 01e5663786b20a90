use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::counter::{record_add, record_div, record_mul};
use super::polynomial::latex_rational;
use super::{Polynomial, Rational, RingError};

/// Which ring a computation lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Rational,
    Poly,
}

impl RingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RingKind::Rational => "rational",
            RingKind::Poly => "poly",
        }
    }

    /// The smaller ring containing both.
    pub fn join(self, other: RingKind) -> RingKind {
        if self == RingKind::Poly || other == RingKind::Poly {
            RingKind::Poly
        } else {
            RingKind::Rational
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RingKind {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" => Ok(RingKind::Rational),
            "poly" => Ok(RingKind::Poly),
            other => Err(RingError::Parse(other.to_string())),
        }
    }
}

/// An element of ℚ or ℚ\[x\].
///
/// Mixed arithmetic promotes the rational operand to a constant polynomial,
/// so results carry the wider tag. Equality is by value: `Rational(2)` equals
/// the constant polynomial `2`.
#[derive(Clone)]
pub enum RingValue {
    Rational(Rational),
    Poly(Polynomial),
}

impl RingValue {
    pub fn zero() -> Self {
        RingValue::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        RingValue::Rational(Rational::one())
    }

    pub fn x() -> Self {
        RingValue::Poly(Polynomial::x())
    }

    pub fn kind(&self) -> RingKind {
        match self {
            RingValue::Rational(_) => RingKind::Rational,
            RingValue::Poly(_) => RingKind::Poly,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Rational(r) => r.is_zero(),
            RingValue::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingValue::Rational(r) => r.is_one(),
            RingValue::Poly(p) => p.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    /// The value as a rational, if it has no `x` dependence.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            RingValue::Rational(r) => Some(r.clone()),
            RingValue::Poly(p) => p.as_constant(),
        }
    }

    pub fn to_poly(&self) -> Polynomial {
        match self {
            RingValue::Rational(r) => Polynomial::constant(r.clone()),
            RingValue::Poly(p) => p.clone(),
        }
    }

    /// Re-tags the value for `kind`. Demotion to rational fails if the value
    /// depends on `x`.
    pub fn into_kind(self, kind: RingKind) -> Result<RingValue, RingError> {
        match (kind, self) {
            (RingKind::Poly, RingValue::Rational(r)) => Ok(RingValue::Poly(Polynomial::constant(r))),
            (RingKind::Poly, v @ RingValue::Poly(_)) => Ok(v),
            (RingKind::Rational, v @ RingValue::Rational(_)) => Ok(v),
            (RingKind::Rational, RingValue::Poly(p)) => p
                .as_constant()
                .map(RingValue::Rational)
                .ok_or_else(|| RingError::NotRational(p.to_string())),
        }
    }

    pub fn max_bits(&self) -> u64 {
        match self {
            RingValue::Rational(r) => r.bits(),
            RingValue::Poly(p) => p.max_bits(),
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Over ℚ every nonzero divisor works; over ℚ\[x\] the long-division
    /// remainder must vanish.
    pub fn exact_div(&self, divisor: &RingValue) -> Result<RingValue, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let out = match (self, divisor) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a.checked_div(b)?),
            (RingValue::Poly(a), RingValue::Rational(b)) => {
                RingValue::Poly(a.scale(&Rational::one().checked_div(b)?))
            }
            (a, b) => {
                let (q, r) = a.to_poly().div_rem(&b.to_poly())?;
                if !r.is_zero() {
                    return Err(RingError::InexactDivision {
                        dividend: a.to_string(),
                        divisor: b.to_string(),
                    });
                }
                RingValue::Poly(q)
            }
        };
        record_div(out.max_bits());
        Ok(out)
    }

    /// Evaluates at a rational point. Rationals evaluate to themselves.
    pub fn eval(&self, at: &Rational) -> Rational {
        match self {
            RingValue::Rational(r) => r.clone(),
            RingValue::Poly(p) => p.eval(at),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            RingValue::Rational(r) => latex_rational(r),
            RingValue::Poly(p) => p.to_latex(),
        }
    }

    fn add_impl(&self, rhs: &RingValue) -> RingValue {
        record_add();
        match (self, rhs) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a + b),
            (a, b) => RingValue::Poly(a.to_poly().add(&b.to_poly())),
        }
    }

    fn mul_impl(&self, rhs: &RingValue) -> RingValue {
        let out = match (self, rhs) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a * b),
            (RingValue::Poly(p), RingValue::Rational(c)) | (RingValue::Rational(c), RingValue::Poly(p)) => {
                RingValue::Poly(p.scale(c))
            }
            (RingValue::Poly(a), RingValue::Poly(b)) => RingValue::Poly(a.mul(b)),
        };
        record_mul(out.max_bits());
        out
    }

    fn neg_impl(&self) -> RingValue {
        match self {
            RingValue::Rational(r) => RingValue::Rational(-r),
            RingValue::Poly(p) => RingValue::Poly(p.neg()),
        }
    }
}

impl Default for RingValue {
    fn default() -> Self {
        RingValue::zero()
    }
}

impl PartialEq for RingValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RingValue::Rational(a), RingValue::Rational(b)) => a == b,
            (RingValue::Poly(a), RingValue::Poly(b)) => a == b,
            (RingValue::Rational(r), RingValue::Poly(p)) | (RingValue::Poly(p), RingValue::Rational(r)) => {
                p.as_constant().as_ref() == Some(r)
            }
        }
    }
}

impl Eq for RingValue {}

impl From<Rational> for RingValue {
    fn from(r: Rational) -> Self {
        RingValue::Rational(r)
    }
}

impl From<Polynomial> for RingValue {
    fn from(p: Polynomial) -> Self {
        RingValue::Poly(p)
    }
}

impl From<i64> for RingValue {
    fn from(v: i64) -> Self {
        RingValue::Rational(Rational::from(v))
    }
}

impl<'a> Add<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn add(self, rhs: &'a RingValue) -> RingValue {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn sub(self, rhs: &'a RingValue) -> RingValue {
        self.add_impl(&rhs.neg_impl())
    }
}

impl<'a> Mul<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn mul(self, rhs: &'a RingValue) -> RingValue {
        self.mul_impl(rhs)
    }
}

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        self.neg_impl()
    }
}

impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        self.neg_impl()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RingValue> for RingValue {
            type Output = RingValue;
            fn $method(self, rhs: RingValue) -> RingValue {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a RingValue> for RingValue {
            type Output = RingValue;
            fn $method(self, rhs: &'a RingValue) -> RingValue {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Rational(r) => fmt::Display::fmt(r, f),
            RingValue::Poly(p) => fmt::Display::fmt(p, f),
        }
    }
}

impl fmt::Debug for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Rational(r) => write!(f, "Rational({r})"),
            RingValue::Poly(p) => write!(f, "Poly({p})"),
        }
    }
}

/// Parses canonical text. Anything mentioning `x` becomes a polynomial.
impl FromStr for RingValue {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains('x') {
            s.parse().map(RingValue::Poly)
        } else {
            s.parse().map(RingValue::Rational)
        }
    }
}

/// `ring_add`
pub fn ring_add(a: &RingValue, b: &RingValue) -> RingValue {
    a + b
}

/// `ring_mul`
pub fn ring_mul(a: &RingValue, b: &RingValue) -> RingValue {
    a * b
}

/// `ring_exact_div`
pub fn ring_exact_div(a: &RingValue, b: &RingValue) -> Result<RingValue, RingError> {
    a.exact_div(b)
}

/// `poly_eval`
pub fn poly_eval(p: &Polynomial, at: &Rational) -> Rational {
    p.eval(at)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> RingValue {
        s.parse().unwrap()
    }

    #[test]
    fn operation_examples() {
        assert_eq!(ring_add(&v("1/2"), &v("1/3")), v("5/6"));
        assert_eq!(ring_add(&v("x^2 + 1"), &v("-x^2 + x")), v("x + 1"));
        assert_eq!(ring_mul(&v("2/3"), &v("3/4")), v("1/2"));
        assert_eq!(ring_mul(&v("x + 1"), &v("x - 1")), v("x^2 - 1"));
        assert_eq!(ring_exact_div(&v("x^2 - 1"), &v("x - 1")).unwrap(), v("x + 1"));
        assert_eq!(ring_exact_div(&v("5/6"), &v("1/3")).unwrap(), v("5/2"));
        assert_eq!(ring_exact_div(&v("3*x - 7"), &v("3*x - 7")).unwrap(), RingValue::one());
    }

    #[test]
    fn division_errors() {
        assert_eq!(ring_exact_div(&v("x"), &RingValue::zero()), Err(RingError::DivisionByZero));
        assert!(matches!(
            ring_exact_div(&v("x^2 + 1"), &v("x - 1")),
            Err(RingError::InexactDivision { .. })
        ));
    }

    #[test]
    fn promotion_and_equality() {
        let sum = &v("2") + &v("x");
        assert_eq!(sum.kind(), RingKind::Poly);
        assert_eq!(RingValue::Poly(Polynomial::constant(Rational::from(2))), v("2"));
        assert_ne!(v("x"), v("1"));
        assert!(v("x").into_kind(RingKind::Rational).is_err());
        assert_eq!(v("3").into_kind(RingKind::Poly).unwrap().kind(), RingKind::Poly);
    }

    #[test]
    fn poly_eval_examples() {
        let f: Polynomial = "x^2 + 2*x + 3".parse().unwrap();
        assert_eq!(poly_eval(&f, &Rational::one()), Rational::from(6));
        assert_eq!(poly_eval(&f, &Rational::from(2)), Rational::from(11));
    }
}
