//! Determinant-free ground truth for every family.
//!
//! The orthogonal and Fibonacci-type polynomials come from their explicit
//! coefficient formulas rather than from the three-term recurrences the
//! determinants encode, so an indexing or coefficient slip in either route
//! shows up as a disagreement.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_range, FamilyError, FamilyId, FamilyParams};
use crate::ring::{Polynomial, Rational, RingValue};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn q(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den).expect("positive denominator")
}

fn int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Polynomial from `(degree, coefficient)` pairs.
fn poly(terms: impl IntoIterator<Item = (usize, Rational)>) -> RingValue {
    let acc = terms
        .into_iter()
        .fold(Polynomial::zero(), |acc, (d, c)| acc.add(&Polynomial::monomial(c, d)));
    RingValue::Poly(acc)
}

fn sign(j: usize) -> BigInt {
    if j.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `F_{n+1}(x) = Σ_j C(n-j, j) x^{n-2j}`
fn fibonacci_poly(n: usize) -> RingValue {
    poly((0..=n / 2).map(|j| (n - 2 * j, int(binomial(n - j, j)))))
}

/// `L_n(x) = Σ_j n/(n-j) C(n-j, j) x^{n-2j}`
fn lucas_poly(n: usize) -> RingValue {
    poly((0..=n / 2).map(|j| {
        (
            n - 2 * j,
            q(BigInt::from(n) * binomial(n - j, j), BigInt::from(n - j)),
        )
    }))
}

/// `T_n(x) = (n/2) Σ_j (-1)^j (n-j-1)! / (j! (n-2j)!) (2x)^{n-2j}`, `n ≥ 1`
fn chebyshev_t(n: usize) -> RingValue {
    poly((0..=n / 2).map(|j| {
        let d = n - 2 * j;
        let num = BigInt::from(n) * sign(j) * factorial(n - j - 1) * pow2(d);
        let den = BigInt::from(2) * factorial(j) * factorial(d);
        (d, q(num, den))
    }))
}

/// `U_n(x) = Σ_j (-1)^j C(n-j, j) (2x)^{n-2j}`
fn chebyshev_u(n: usize) -> RingValue {
    poly((0..=n / 2).map(|j| {
        let d = n - 2 * j;
        (d, int(sign(j) * binomial(n - j, j) * pow2(d)))
    }))
}

/// `H_n(x) = n! Σ_j (-1)^j / (j! (n-2j)!) (2x)^{n-2j}`
fn hermite(n: usize) -> RingValue {
    poly((0..=n / 2).map(|j| {
        let d = n - 2 * j;
        (d, q(factorial(n) * sign(j) * pow2(d), factorial(j) * factorial(d)))
    }))
}

/// `P_n(x) = 2^{-n} Σ_j (-1)^j C(n, j) C(2n-2j, n) x^{n-2j}`
fn legendre(n: usize) -> RingValue {
    poly((0..=n / 2).map(|j| {
        let num = sign(j) * binomial(n, j) * binomial(2 * n - 2 * j, n);
        (n - 2 * j, q(num, pow2(n)))
    }))
}

/// `L_n(x) = Σ_j C(n, j) (-1)^j / j! x^j`
fn laguerre(n: usize) -> RingValue {
    poly((0..=n).map(|j| (j, q(sign(j) * binomial(n, j), factorial(j)))))
}

/// `F_{n+1}` by plain iteration.
fn fibonacci_number(n: usize) -> RingValue {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 1..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    RingValue::Rational(int(b))
}

/// `K_n = p_n K_{n-1} + K_{n-2}`, `K_0 = 1`, `K_{-1} = 0`.
fn continuant(p: &[RingValue]) -> RingValue {
    let mut prev = RingValue::zero();
    let mut cur = RingValue::one();
    for pk in p {
        let next = &(pk * &cur) + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `p_0 x^{n-1} + ... + p_{n-1}` assembled coefficient by coefficient.
fn horner(p: &[RingValue]) -> RingValue {
    let n = p.len();
    p.iter().enumerate().fold(RingValue::Poly(Polynomial::zero()), |acc, (i, c)| {
        &acc + &(c * &RingValue::Poly(Polynomial::monomial(Rational::one(), n - 1 - i)))
    })
}

fn partial_sum(p: &[RingValue]) -> RingValue {
    p.iter().fold(RingValue::zero(), |acc, c| &acc + c)
}

/// The family's `n`-th object (see the module table), computed without
/// determinants.
pub fn family_oracle(id: FamilyId, n: usize, params: &FamilyParams) -> Result<RingValue, FamilyError> {
    check_range(id, n, params)?;
    let head = || &params.as_slice().expect("range check validated params")[..n];
    Ok(match id {
        FamilyId::Naturals => RingValue::from(n as i64),
        FamilyId::Horner => horner(head()),
        FamilyId::PartialSums => partial_sum(head()),
        FamilyId::FibonacciPoly => fibonacci_poly(n),
        FamilyId::FibonacciNum => fibonacci_number(n),
        FamilyId::LucasPoly => lucas_poly(n),
        FamilyId::ChebyshevT => chebyshev_t(n),
        FamilyId::ChebyshevU => chebyshev_u(n),
        FamilyId::Hermite => hermite(n),
        FamilyId::Legendre => legendre(n),
        FamilyId::Laguerre => laguerre(n),
        FamilyId::Continuant => continuant(head()),
        FamilyId::OdeExample => RingValue::Rational(super::ode::ode_series_direct(n)[n - 1].clone()),
    })
}
