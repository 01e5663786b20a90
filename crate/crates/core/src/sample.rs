//! Seeded generators for random specifications and documents, used by the
//! property and acceptance suites.

use std::sync::Arc;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::dsl::{Expr, Mode, SpecDocument, Var};
use crate::recurrence::{BandFn, FixedOrderSpec, FullHistorySpec};
use crate::ring::{Rational, RingKind, RingValue};

pub struct SpecSampler {
    rng: SplitMix64,
}

impl SpecSampler {
    pub fn new(seed: u64) -> Self {
        SpecSampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.rng.next_u64() % (hi - lo + 1) as u64) as i64
    }

    fn chance(&mut self, percent: u64) -> bool {
        self.rng.next_u64() % 100 < percent
    }

    /// A rational `a/d` in `[-bound, bound]` with `d ∈ {1, 2, 3}`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let d = self.int_in(1, 3);
        let n = self.int_in(-bound * d, bound * d);
        Rational::from_ratio(n, d).expect("d ≥ 1")
    }

    fn nonzero_rational(&mut self, bound: i64) -> Rational {
        loop {
            let r = self.rational(bound);
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Full-history spec with a random coefficient table covering every
    /// `k ≤ max_k`.
    pub fn full_history(&mut self, max_k: usize) -> FullHistorySpec {
        let initial = RingValue::Rational(self.nonzero_rational(3));
        let table = (1..=max_k)
            .map(|k| (0..k).map(|_| RingValue::Rational(self.rational(3))).collect())
            .collect();
        FullHistorySpec::from_table(initial, table)
    }

    /// Fixed-order spec of order `1..=4` with constant coefficients.
    pub fn fixed_order_constant(&mut self) -> FixedOrderSpec {
        let m = self.int_in(1, 4) as usize;
        let initials = (0..m).map(|_| RingValue::Rational(self.rational(3))).collect();
        let coeffs = (0..m).map(|_| RingValue::Rational(self.rational(3))).collect();
        FixedOrderSpec::constant(initials, coeffs).expect("m ≥ 1")
    }

    /// Fixed-order spec whose coefficients are `(a k + b)/(k - c)` with the
    /// pole `c ≤ m` below `first_valid_k = m + 1`.
    pub fn fixed_order_variable(&mut self) -> FixedOrderSpec {
        let m = self.int_in(1, 4) as usize;
        let initials = (0..m).map(|_| RingValue::Rational(self.rational(3))).collect();
        let coeffs: Vec<BandFn> = (0..m)
            .map(|_| {
                let (a, b, c) = (self.int_in(-3, 3), self.int_in(-3, 3), self.int_in(0, m as i64));
                let f: BandFn = Arc::new(move |k: usize| {
                    let k = k as i64;
                    Ok(RingValue::Rational(Rational::from_ratio(a * k + b, k - c).expect("k is past the pole")))
                });
                f
            })
            .collect();
        FixedOrderSpec::new(initials, coeffs, m + 1).expect("well-formed")
    }

    /// Expression no deeper than `depth` over the given variables.
    pub fn expr(&mut self, depth: usize, vars: &[Var]) -> Expr {
        if depth <= 1 || self.chance(25) {
            return self.leaf(vars);
        }
        let x_free: Vec<Var> = vars.iter().copied().filter(|v| *v != Var::X).collect();
        let b = Box::new;
        match self.int_in(0, 5) {
            0 => Expr::Neg(b(self.expr(depth - 1, vars))),
            1 => Expr::Add(b(self.expr(depth - 1, vars)), b(self.expr(depth - 1, vars))),
            2 => Expr::Sub(b(self.expr(depth - 1, vars)), b(self.expr(depth - 1, vars))),
            3 => Expr::Mul(b(self.expr(depth - 1, vars)), b(self.expr(depth - 1, vars))),
            4 => Expr::Div(b(self.expr(depth - 1, vars)), b(self.positive(depth - 1, &x_free))),
            _ => Expr::Delta(b(self.expr(depth - 1, &x_free)), b(self.expr(depth - 1, &x_free))),
        }
    }

    fn leaf(&mut self, vars: &[Var]) -> Expr {
        let pick = self.int_in(0, vars.len() as i64);
        match vars.get(pick as usize) {
            Some(v) => Expr::Var(*v),
            None => Expr::int(self.int_in(0, 12) as u64),
        }
    }

    /// Expression that is positive whenever every variable is `≥ 1`.
    fn positive(&mut self, depth: usize, vars: &[Var]) -> Expr {
        if depth <= 1 || self.chance(40) {
            let pick = self.int_in(0, vars.len() as i64);
            return match vars.get(pick as usize) {
                Some(v) => Expr::Var(*v),
                None => Expr::int(self.int_in(1, 9) as u64),
            };
        }
        let l = Box::new(self.positive(depth - 1, vars));
        let r = Box::new(self.positive(depth - 1, vars));
        if self.chance(50) {
            Expr::Add(l, r)
        } else {
            Expr::Mul(l, r)
        }
    }

    /// Random valid document with expressions of depth at most `depth`.
    pub fn document(&mut self, depth: usize) -> SpecDocument {
        let ring = if self.chance(50) { RingKind::Poly } else { RingKind::Rational };
        let with_x = |vars: &[Var]| -> Vec<Var> {
            let mut v = vars.to_vec();
            if ring == RingKind::Poly {
                v.push(Var::X);
            }
            v
        };
        let mode = if self.chance(50) { Mode::FixedOrder } else { Mode::FullHistory };
        let (n_init, coeff_vars, first_valid_k) = match mode {
            Mode::FixedOrder => {
                let m = self.int_in(1, 4) as usize;
                (m, with_x(&[Var::K]), (m + self.int_in(1, 3) as usize) as u64)
            }
            Mode::FullHistory => (1, with_x(&[Var::K, Var::I]), 1),
        };
        let initials = (0..n_init).map(|_| self.expr(depth, &with_x(&[]))).collect();
        let coeffs = (0..match mode {
            Mode::FixedOrder => n_init,
            Mode::FullHistory => 1,
        })
            .map(|_| self.expr(depth, &coeff_vars))
            .collect();
        let perturb = if self.chance(30) {
            Some(self.expr(depth, &with_x(&[Var::K, Var::I])))
        } else {
            None
        };
        SpecDocument {
            mode,
            ring,
            initials,
            coeffs,
            perturb,
            first_valid_k,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse, render};

    #[test]
    fn documents_are_valid_and_bounded() {
        let mut s = SpecSampler::new(5);
        for _ in 0..200 {
            let doc = s.document(5);
            assert!(doc.coeffs.iter().chain(&doc.initials).all(|e| e.depth() <= 5));
            let text = render(&doc);
            assert_eq!(parse(&text).as_ref(), Ok(&doc), "{text}");
        }
    }

    #[test]
    fn variable_specs_evaluate() {
        let mut s = SpecSampler::new(9);
        for _ in 0..20 {
            let spec = s.fixed_order_variable();
            assert!(crate::recurrence::eval_fixed_order(&spec, 15).is_ok());
        }
    }
}
