//! Power-series solution of `(x+1) y'' + y' + x y = 0`, `y(0) = 1`, `y'(0) = 0`.
//!
//! Writing `y = Σ u(k) x^k`, the `x^k` coefficient of the left-hand side is
//! `(k+2)(k+1) u(k+2) + (k+1)^2 u(k+1) + u(k-1)`, which gives
//!
//! `u(k+2) = -(k+1)/(k+2) u(k+1) - 1/((k+1)(k+2)) u(k-1)`, `u(0) = 1`,
//! `u(1) = u(2) = 0`.
//!
//! As an order-3 recurrence for `a(k) = u(k-1)` this reads
//! `a(k) = p_1(k) a(k-3) + p_2(k) a(k-2) + p_3(k) a(k-1)` with
//! `p_1(k) = -1/((k-2)(k-1))`, `p_2 = 0`, `p_3(k) = -(k-2)/(k-1)`, defined
//! from `k = 4`.

use std::sync::Arc;

use crate::recurrence::{eval_fixed_order, BandFn, FixedOrderSpec, SequencePrefix};
use crate::ring::{Rational, RingValue};

fn frac(n: i64, d: i64) -> RingValue {
    RingValue::Rational(Rational::from_ratio(n, d).expect("k ≥ 4 keeps denominators nonzero"))
}

pub fn ode_spec() -> FixedOrderSpec {
    let p1: BandFn = Arc::new(|k: usize| {
        let k = k as i64;
        Ok(frac(-1, (k - 2) * (k - 1)))
    });
    let p2: BandFn = Arc::new(|_| Ok(RingValue::zero()));
    let p3: BandFn = Arc::new(|k: usize| {
        let k = k as i64;
        Ok(frac(-(k - 2), k - 1))
    });
    FixedOrderSpec::new(
        vec![RingValue::one(), RingValue::zero(), RingValue::zero()],
        vec![p1, p2, p3],
        4,
    )
    .expect("well-formed order-3 spec")
}

/// `u(0), ..., u(n-1)` through the order-3 fixed recurrence.
pub fn ode_coefficients(n: usize) -> SequencePrefix {
    eval_fixed_order(&ode_spec(), n.max(1)).expect("defined for every k ≥ 4")
}

/// `u(0), ..., u(n-1)` straight from the two-step series recurrence, used as
/// the oracle.
pub(crate) fn ode_series_direct(n: usize) -> Vec<Rational> {
    let mut u = vec![Rational::one(), Rational::zero()];
    let mut k = 0i64;
    while u.len() < n {
        let kk = k as usize;
        let back = if k == 0 { Rational::zero() } else { u[kk - 1].clone() };
        let a = &Rational::from_ratio(-(k + 1), k + 2).expect("k+2 > 0") * &u[kk + 1];
        let b = &Rational::from_ratio(-1, (k + 1) * (k + 2)).expect("k+1 > 0") * &back;
        u.push(&a + &b);
        k += 1;
    }
    u.truncate(n);
    u
}

/// True iff every `x^k` coefficient of `(x+1) y'' + y' + x y` with
/// `0 ≤ k ≤ N-3` vanishes for the truncated series `coeffs = u(0..N-1)`.
/// Non-rational entries never satisfy it. Fewer than three coefficients
/// impose no condition.
pub fn ode_residual_check(coeffs: &[RingValue]) -> bool {
    let Some(u) = coeffs.iter().map(RingValue::as_rational).collect::<Option<Vec<_>>>() else {
        return false;
    };
    (0..u.len().saturating_sub(2)).all(|k| {
        let kk = k as i64;
        let mut residual = &Rational::from((kk + 2) * (kk + 1)) * &u[k + 2];
        residual = &residual + &(&Rational::from((kk + 1) * (kk + 1)) * &u[k + 1]);
        if k >= 1 {
            residual = &residual + &u[k - 1];
        }
        residual.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(values: &[RingValue]) -> Vec<String> {
        values.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn first_coefficients() {
        assert_eq!(show(ode_coefficients(4).terms()), ["1", "0", "0", "-1/6"]);
        assert_eq!(ode_coefficients(5).term(5).unwrap().to_string(), "1/8");
        assert_eq!(ode_coefficients(6).term(6).unwrap().to_string(), "-1/10");
    }

    #[test]
    fn two_routes_agree() {
        let direct = ode_series_direct(40);
        let fixed = ode_coefficients(40);
        for (k, u) in direct.iter().enumerate() {
            assert_eq!(&RingValue::Rational(u.clone()), fixed.term(k + 1).unwrap(), "u({k})");
        }
    }

    #[test]
    fn residual_examples() {
        assert!(ode_residual_check(ode_coefficients(10).terms()));
        assert!(ode_residual_check(ode_coefficients(30).terms()));
        let wrong: Vec<RingValue> = [1, 0, 0, 0, 0].into_iter().map(RingValue::from).collect();
        assert!(!ode_residual_check(&wrong));
        assert!(ode_residual_check(&[RingValue::zero(), RingValue::zero(), RingValue::zero()]));
        assert!(!ode_residual_check(&[RingValue::x(), RingValue::zero(), RingValue::zero()]));
    }

    #[test]
    fn p2_column_is_empty() {
        let e = crate::recurrence::embed_fixed_order(&ode_spec());
        for j in 4..12 {
            // p_2(j) lands in row j-1.
            assert_eq!(e.coeff(j, j - 1).unwrap(), RingValue::zero());
            assert_eq!(e.coeff(j, j).unwrap(), frac(-(j as i64 - 2), j as i64 - 1));
            assert_eq!(e.coeff(j, j - 2).unwrap(), frac(-1, (j as i64 - 2) * (j as i64 - 1)));
        }
    }
}
