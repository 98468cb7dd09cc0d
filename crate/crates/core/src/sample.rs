//! Seeded random elements and matrices for property suites and oracles.
//!
//! Everything is driven by a ChaCha stream so that a seed reproduces the
//! same values on every platform.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::henriksen::HenriksenElement;
use crate::matrix::MatrixR;
use crate::numeric::{rat, RatPoly, Rational};
use crate::ring::{gcd_many, RingElement, RingId};

/// Size limits for random elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest absolute value of an integer (or integer constant term).
    pub int_max: i64,
    /// Largest degree of a polynomial.
    pub max_degree: usize,
    /// Largest absolute numerator of a rational coefficient.
    pub num_max: i64,
    /// Largest denominator of a rational coefficient.
    pub den_max: i64,
    /// Probability of forcing a coefficient to zero, in percent.
    pub sparsity: u32,
}

impl Bounds {
    pub fn small(max_degree: usize) -> Self {
        Bounds {
            int_max: 20,
            max_degree,
            num_max: 20,
            den_max: 20,
            sparsity: 25,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, max_abs: i64) -> i64 {
        self.rng.random_range(-max_abs..=max_abs)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn chance(&mut self, percent: u32) -> bool {
        self.rng.random_range(0..100) < percent
    }

    fn rational(&mut self, b: &Bounds) -> Rational {
        rat(self.int(b.num_max), self.rng.random_range(1..=b.den_max))
    }

    fn maybe_zero(&mut self, b: &Bounds, q: Rational) -> Rational {
        if self.chance(b.sparsity) {
            rat(0, 1)
        } else {
            q
        }
    }

    pub fn ratpoly(&mut self, b: &Bounds) -> RatPoly {
        let deg = self.rng.random_range(0..=b.max_degree);
        let coeffs = (0..=deg)
            .map(|_| {
                let q = self.rational(b);
                self.maybe_zero(b, q)
            })
            .collect();
        RatPoly::new(coeffs)
    }

    pub fn henriksen(&mut self, b: &Bounds) -> HenriksenElement {
        let deg = self.rng.random_range(0..=b.max_degree);
        let c0 = rat(self.int(b.int_max), 1);
        let mut coeffs = vec![self.maybe_zero(b, c0)];
        for _ in 0..deg {
            let q = self.rational(b);
            coeffs.push(self.maybe_zero(b, q));
        }
        HenriksenElement::new(RatPoly::new(coeffs)).expect("integer constant term")
    }

    pub fn element(&mut self, ring: RingId, b: &Bounds) -> RingElement {
        match ring {
            RingId::Integers => RingElement::Integer(BigInt::from(self.int(b.int_max))),
            RingId::Ratpoly => RingElement::RatPoly(self.ratpoly(b)),
            RingId::Henriksen => RingElement::Henriksen(self.henriksen(b)),
        }
    }

    pub fn nonzero(&mut self, ring: RingId, b: &Bounds) -> RingElement {
        loop {
            let e = self.element(ring, b);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// `(a, b, c)` with `aR + bR + cR = R`, found by rejection.
    pub fn unimodular_triple(&mut self, ring: RingId, b: &Bounds) -> [RingElement; 3] {
        loop {
            let t = [
                self.element(ring, b),
                self.element(ring, b),
                self.element(ring, b),
            ];
            if gcd_many(&t).expect("same ring").0.is_one() {
                return t;
            }
        }
    }

    pub fn matrix(&mut self, ring: RingId, rows: usize, cols: usize, b: &Bounds) -> MatrixR {
        let entries = (0..rows * cols).map(|_| self.element(ring, b)).collect();
        MatrixR::new(ring, rows, cols, entries).expect("uniform ring")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let b = Bounds::small(3);
        let draw = |seed| {
            let mut s = Sampler::new(seed);
            RingId::ALL.map(|r| s.element(r, &b).to_string())
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn respects_bounds() {
        let b = Bounds::small(2);
        let mut s = Sampler::new(1);
        for _ in 0..200 {
            let p = s.ratpoly(&b);
            assert!(p.degree().unwrap_or(0) <= 2);
            let [a, bb, c] = s.unimodular_triple(RingId::Henriksen, &b);
            assert!(gcd_many(&[a, bb, c]).unwrap().0.is_one());
        }
    }
}
