//! Exact arithmetic over ℚ and ℚ\[x\].

mod counter;
mod polynomial;
mod rational;
mod value;

pub use counter::{count_ops, OpCounts};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use value::{poly_eval, ring_add, ring_exact_div, ring_mul, RingKind, RingValue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("{0} depends on x and is not a rational")]
    NotRational(String),
    #[error("cannot parse ring value {0:?}")]
    Parse(String),
}
