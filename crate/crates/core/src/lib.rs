//! Determinant representations of linearly recurrent sequences.
//!
//! A sequence defined by `a_{k+1} = Σ_{i≤k} p_{k,i} a_i` is, up to the factor
//! `a_1`, the determinant of a `k×k` upper-Hessenberg matrix with the
//! coefficients in its upper triangle and `-1` on the subdiagonal. Fixed-order
//! recurrences embed into that form, which yields banded determinants whose
//! value is the `k`-th term directly.
//!
//! The crate is split into:
//!
//! * [`ring`]: exact rationals and polynomials in `x`,
//! * [`hessenberg`]: the matrix type and three determinant algorithms,
//! * [`recurrence`]: recurrence specifications, evaluators, matrix builders
//!   and verification,
//! * [`families`]: the catalog of classical instances with independent
//!   oracles,
//! * [`dsl`]: a small text format for user-defined recurrences,
//! * [`sample`]: seeded generators of random specifications.

pub mod dsl;
pub mod families;
pub mod hessenberg;
pub mod recurrence;
pub mod ring;
pub mod sample;

pub use hessenberg::{det_bareiss, det_hessenberg_fast, det_laplace, DetMethod, MatrixError, SquareMatrix, Structure};
pub use recurrence::{
    embed_fixed_order, eval_fixed_order, eval_full_history, full_history_matrix, fixed_order_matrix, verify_spec, AnySpec, FixedOrderSpec,
    FullHistorySpec, RecurrenceError, SequencePrefix, VerificationReport,
};
pub use ring::{Polynomial, Rational, RingError, RingKind, RingValue};
