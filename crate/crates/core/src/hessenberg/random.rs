//! Reproducible pseudo-random upper-Hessenberg matrices.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood 2014) seeded with the
//! user seed. Integers in `[-5, 5]` are drawn as `(next_u64() mod 11) - 5`.
//! Entries are filled row by row, left to right, skipping the structural
//! zeros below the subdiagonal. A polynomial entry takes three draws, for the
//! coefficients of `1`, `x`, `x^2` in that order.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::SquareMatrix;
use crate::ring::{Polynomial, Rational, RingKind, RingValue};

pub struct HessenbergSampler {
    rng: SplitMix64,
}

impl HessenbergSampler {
    pub fn new(seed: u64) -> Self {
        HessenbergSampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    /// Uniform integer in `[-5, 5]`.
    pub fn small_int(&mut self) -> i64 {
        (self.rng.next_u64() % 11) as i64 - 5
    }

    pub fn entry(&mut self, ring: RingKind) -> RingValue {
        match ring {
            RingKind::Rational => RingValue::from(self.small_int()),
            RingKind::Poly => {
                let coeffs = (0..3).map(|_| Rational::from(self.small_int())).collect();
                RingValue::Poly(Polynomial::from_coeffs(coeffs))
            }
        }
    }

    pub fn matrix(&mut self, size: usize, ring: RingKind) -> SquareMatrix {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(if i > j + 1 { RingValue::zero() } else { self.entry(ring) });
            }
        }
        SquareMatrix::upper_hessenberg(size, entries).expect("generated pattern is upper Hessenberg")
    }
}

/// One matrix from a fresh sampler.
pub fn random_hessenberg(size: usize, ring: RingKind, seed: u64) -> SquareMatrix {
    HessenbergSampler::new(seed).matrix(size, ring)
}
