use thiserror::Error;

use super::ast::{Expr, Var};
use crate::ring::{Rational, RingError, RingValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero at k = {k}")]
    DivisionByZero { k: String },
    #[error("variable '{0}' is not bound here")]
    Unbound(&'static str),
    #[error("'x' may not appear in a denominator or delta argument")]
    SymbolicDivisor,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Values for the integer variables. `x` is always the polynomial `x`.
#[derive(Debug, Clone, Default)]
pub struct Bindings {
    pub k: Option<Rational>,
    pub i: Option<Rational>,
}

impl Bindings {
    pub fn k(k: usize) -> Self {
        Bindings {
            k: Some(Rational::from(k as i64)),
            i: None,
        }
    }

    pub fn ki(k: usize, i: usize) -> Self {
        Bindings {
            k: Some(Rational::from(k as i64)),
            i: Some(Rational::from(i as i64)),
        }
    }

    fn k_text(&self) -> String {
        self.k.as_ref().map_or_else(|| "?".into(), ToString::to_string)
    }
}

fn scalar(e: &Expr, b: &Bindings) -> Result<Rational, EvalError> {
    eval_expr(e, b)?.as_rational().ok_or(EvalError::SymbolicDivisor)
}

/// Exact value of `e` under `b`.
pub fn eval_expr(e: &Expr, b: &Bindings) -> Result<RingValue, EvalError> {
    Ok(match e {
        Expr::Int(v) => RingValue::Rational(Rational::from_integer(v.clone().into())),
        Expr::Var(Var::K) => RingValue::Rational(b.k.clone().ok_or(EvalError::Unbound("k"))?),
        Expr::Var(Var::I) => RingValue::Rational(b.i.clone().ok_or(EvalError::Unbound("i"))?),
        Expr::Var(Var::X) => RingValue::x(),
        Expr::Neg(a) => -eval_expr(a, b)?,
        Expr::Add(l, r) => eval_expr(l, b)? + eval_expr(r, b)?,
        Expr::Sub(l, r) => eval_expr(l, b)? - eval_expr(r, b)?,
        Expr::Mul(l, r) => eval_expr(l, b)? * eval_expr(r, b)?,
        Expr::Div(l, r) => {
            let num = eval_expr(l, b)?;
            let den = scalar(r, b)?;
            if den.is_zero() {
                return Err(EvalError::DivisionByZero { k: b.k_text() });
            }
            num.exact_div(&RingValue::Rational(den))?
        }
        Expr::Delta(l, r) => {
            if scalar(l, b)? == scalar(r, b)? {
                RingValue::one()
            } else {
                RingValue::zero()
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_expr;
    use super::*;

    fn at_k(src: &str, k: usize) -> Result<RingValue, EvalError> {
        eval_expr(&parse_expr(src).unwrap(), &Bindings::k(k))
    }

    #[test]
    fn examples() {
        assert_eq!(at_k("(2*k+1)/(k+1)", 2).unwrap().to_string(), "5/3");
        assert_eq!(at_k("-1/((k-2)*(k-1))", 4).unwrap().to_string(), "-1/6");
        assert_eq!(at_k("x", 9).unwrap(), RingValue::x());
        assert_eq!(at_k("(2*k-1)*x/k", 2).unwrap().to_string(), "3/2*x");
    }

    #[test]
    fn errors() {
        assert_eq!(at_k("1/(k-2)", 2), Err(EvalError::DivisionByZero { k: "2".into() }));
        assert_eq!(at_k("i", 2), Err(EvalError::Unbound("i")));
        assert_eq!(at_k("1/x", 2), Err(EvalError::SymbolicDivisor));
    }

    #[test]
    fn delta() {
        let e = parse_expr("delta(i, k) + 2*delta(i, 1)").unwrap();
        let v = |k, i| eval_expr(&e, &Bindings::ki(k, i)).unwrap().to_string();
        assert_eq!(v(3, 3), "1");
        assert_eq!(v(3, 1), "2");
        assert_eq!(v(1, 1), "3");
        assert_eq!(v(3, 2), "0");
    }
}
