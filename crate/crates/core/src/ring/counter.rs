//! Per-thread instrumentation of ring operations.
//!
//! Every [`RingValue`](super::RingValue) addition, multiplication and exact
//! division bumps a thread-local tally. Determinant algorithms are measured by
//! wrapping them in [`count_ops`], which makes operation counts independent of
//! the machine and of the size of the numbers involved.

use std::cell::Cell;
use std::ops::Sub;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub adds: u64,
    pub muls: u64,
    pub divs: u64,
    /// Largest coefficient bit length seen in a product or quotient.
    pub max_bits: u64,
}

impl OpCounts {
    /// Multiplicative operations: products plus exact quotients.
    pub fn multiplicative(&self) -> u64 {
        self.muls + self.divs
    }
}

impl Sub for OpCounts {
    type Output = OpCounts;

    fn sub(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            adds: self.adds - rhs.adds,
            muls: self.muls - rhs.muls,
            divs: self.divs - rhs.divs,
            max_bits: self.max_bits,
        }
    }
}

thread_local! {
    static COUNTS: Cell<OpCounts> = const { Cell::new(OpCounts { adds: 0, muls: 0, divs: 0, max_bits: 0 }) };
}

pub(crate) fn record_add() {
    COUNTS.with(|c| {
        let mut v = c.get();
        v.adds += 1;
        c.set(v);
    });
}

pub(crate) fn record_mul(bits: u64) {
    COUNTS.with(|c| {
        let mut v = c.get();
        v.muls += 1;
        v.max_bits = v.max_bits.max(bits);
        c.set(v);
    });
}

pub(crate) fn record_div(bits: u64) {
    COUNTS.with(|c| {
        let mut v = c.get();
        v.divs += 1;
        v.max_bits = v.max_bits.max(bits);
        c.set(v);
    });
}

/// Runs `f` and returns the ring operations it performed on this thread.
pub fn count_ops<T>(f: impl FnOnce() -> T) -> (T, OpCounts) {
    let before = COUNTS.with(|c| {
        let v = c.get();
        c.set(OpCounts { max_bits: 0, ..v });
        v
    });
    let out = f();
    let after = COUNTS.with(|c| {
        let v = c.get();
        c.set(OpCounts {
            max_bits: before.max_bits.max(v.max_bits),
            ..v
        });
        v
    });
    (out, after - before)
}
