//! Seeded random elements for the sampled identity checks.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::Rational;

pub const DEFAULT_SEED: u64 = 42;

/// Reproducible stream of coordinate tuples with small rational entries.
///
/// Roughly half the draws are sparse (each coordinate kept with
/// probability 1/2), which makes nilpotent elements common enough for
/// implication checks to be non-vacuous.
pub struct ElementSampler {
    rng: ChaCha8Rng,
    dim: usize,
}

impl ElementSampler {
    pub fn new(dim: usize, seed: u64) -> Self {
        ElementSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            dim,
        }
    }

    pub fn rational(&mut self) -> Rational {
        let n: i64 = self.rng.gen_range(-4..=4);
        let d: i64 = self.rng.gen_range(1..=3);
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn next_element(&mut self) -> Vec<Rational> {
        let sparse = self.rng.gen_bool(0.5);
        (0..self.dim)
            .map(|_| {
                if sparse && self.rng.gen_bool(0.5) {
                    Rational::from_integer(0.into())
                } else {
                    self.rational()
                }
            })
            .collect()
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    /// Uniform nonzero perturbation.
    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }
}

impl Iterator for ElementSampler {
    type Item = Vec<Rational>;
    fn next(&mut self) -> Option<Vec<Rational>> {
        Some(self.next_element())
    }
}
