use std::fmt;
use std::str::FromStr;

use super::{Rational, RingError};

/// Dense univariate polynomial in `x` over the rationals.
///
/// Coefficients are stored constant term first. Trailing zeros are always
/// trimmed, so the zero polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients listed constant term first.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(Rational::bits).max().unwrap_or(0)
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Long division over ℚ: returns `(q, r)` with `self = q·divisor + r` and
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), RingError> {
        let Some(dd) = divisor.degree() else {
            return Err(RingError::DivisionByZero);
        };
        let lead = divisor.leading().expect("nonzero divisor has a leading term");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if nd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let q = c.checked_div(lead)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&q * d);
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Horner evaluation in floating point, after converting each exact
    /// coefficient.
    pub fn eval_f64(&self, at: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * at + c.to_f64())
    }

    fn fmt_terms(
        &self,
        f: &mut fmt::Formatter<'_>,
        term: impl Fn(&mut fmt::Formatter<'_>, &Rational, usize) -> fmt::Result,
    ) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            term(f, &mag, k)?;
            first = false;
        }
        Ok(())
    }

    /// LaTeX rendering, e.g. `\frac{3}{2} x^{2} - 1`.
    pub fn to_latex(&self) -> String {
        struct Latex<'a>(&'a Polynomial);
        impl fmt::Display for Latex<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_terms(f, |f, mag, k| {
                    let coeff = latex_rational(mag);
                    match (k, mag.is_one()) {
                        (0, _) => write!(f, "{coeff}"),
                        (1, true) => write!(f, "x"),
                        (1, false) => write!(f, "{coeff} x"),
                        (_, true) => write!(f, "x^{{{k}}}"),
                        (_, false) => write!(f, "{coeff} x^{{{k}}}"),
                    }
                })
            }
        }
        Latex(self).to_string()
    }
}

pub(crate) fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.abs().numer(), r.denom())
    }
}

/// Canonical rendering: `c_k*x^k + ... + c_0`, zero terms omitted, unit
/// coefficients elided, e.g. `3/2*x^2 - 1` or `x^3 + 2*x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f, |f, mag, k| match (k, mag.is_one()) {
            (0, _) => write!(f, "{mag}"),
            (1, true) => write!(f, "x"),
            (1, false) => write!(f, "{mag}*x"),
            (_, true) => write!(f, "x^{k}"),
            (_, false) => write!(f, "{mag}*x^{k}"),
        })
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Parses the canonical rendering (and minor whitespace variations of it).
impl FromStr for Polynomial {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split into signed terms at every +/- that is not the leading sign.
        let mut terms = Vec::new();
        let mut start = 0;
        for (idx, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && idx > start {
                terms.push(&compact[start..idx]);
                start = idx;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = Polynomial::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() || body.starts_with(['+', '-']) {
                return Err(bad());
            }
            let (coeff_str, power) = match body.find('x') {
                None => (body, None),
                Some(pos) => {
                    let tail = &body[pos + 1..];
                    let power = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|p| p.parse::<usize>().ok())
                            .ok_or_else(bad)?
                    };
                    let head = &body[..pos];
                    let coeff = if head.is_empty() {
                        "1"
                    } else {
                        head.strip_suffix('*').ok_or_else(bad)?
                    };
                    (coeff, Some(power))
                }
            };
            let mut c: Rational = coeff_str.parse().map_err(|_| bad())?;
            if negative {
                c = -c;
            }
            acc = acc.add(&Polynomial::monomial(c, power.unwrap_or(0)));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d).unwrap()
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(p(&[0, 0, 0]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn hand_arithmetic() {
        // (x^2 + 1) + (-x^2 + x) = x + 1
        assert_eq!(p(&[1, 0, 1]).add(&p(&[0, 1, -1])), p(&[1, 1]));
        // (x + 1)(x - 1) = x^2 - 1
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
        // (x^2 - 1) / (x - 1) = x + 1
        let (qt, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(qt, p(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn division_with_remainder() {
        // x^2 + 1 = (x/2)(2x) + 1
        let (qt, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(qt, Polynomial::monomial(q(1, 2), 1));
        assert_eq!(r, p(&[1]));
        assert_eq!(p(&[1]).div_rem(&Polynomial::zero()), Err(RingError::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let f = p(&[3, 2, 1]);
        assert_eq!(f.eval(&Rational::one()), Rational::from(6));
        assert_eq!(f.eval(&Rational::from(2)), Rational::from(11));
        assert_eq!(Polynomial::zero().eval(&q(7, 3)), Rational::zero());
        assert!((f.eval_f64(0.5) - 4.25).abs() < 1e-15);
    }

    #[test]
    fn canonical_text() {
        let f = Polynomial::from_coeffs(vec![q(-1, 1), q(0, 1), q(3, 2)]);
        assert_eq!(f.to_string(), "3/2*x^2 - 1");
        assert_eq!(p(&[0, -3, 0, 4]).to_string(), "4*x^3 - 3*x");
        assert_eq!(p(&[1, 0, -1]).to_string(), "-x^2 + 1");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }

    #[test]
    fn parse_canonical_text() {
        for text in ["3/2*x^2 - 1", "4*x^3 - 3*x", "-x^2 + 1", "x", "0", "-7", "1/2*x^2 - 2*x + 1"] {
            let parsed: Polynomial = text.parse().unwrap();
            assert_eq!(parsed.to_string(), text);
        }
        for bad in ["", "x^", "2x", "1 + + x", "x^-1", "*x"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad}");
        }
    }

    #[test]
    fn latex() {
        let f = Polynomial::from_coeffs(vec![q(-1, 2), q(0, 1), q(3, 2)]);
        assert_eq!(f.to_latex(), "\\frac{3}{2} x^{2} - \\frac{1}{2}");
        assert_eq!(p(&[0, 2]).to_latex(), "2 x");
    }
}
