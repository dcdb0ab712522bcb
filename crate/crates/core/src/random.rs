//! Seeded sampling of words and elements.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! fully determines every sampled value on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{rat, Rational};
use crate::hopf::{pi, InvariantElement, SymElement};
use crate::shuffle::{TensorElement, Word};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.gen_range(lo..=hi_inclusive)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> Option<&'a T> {
        items.choose(&mut self.rng)
    }

    /// A nonzero integer in `[-3, 3]`.
    pub fn coeff(&mut self) -> Rational {
        let mag = self.rng.gen_range(1..=3i64);
        rat(if self.rng.gen_bool(0.5) { mag } else { -mag })
    }

    /// A word of length `n` over `k` letters.
    pub fn word(&mut self, k: usize, n: usize) -> Word {
        Word((0..n).map(|_| self.rng.gen_range(0..k as u32)).collect())
    }

    /// A nonzero element with at most `max_terms` terms.
    pub fn tensor(&mut self, k: usize, d: u32, n: usize, max_terms: usize) -> TensorElement {
        loop {
            let terms = self.range(1, max_terms.max(1));
            let mut t = TensorElement::zero(d, n);
            for _ in 0..terms {
                let (w, c) = (self.word(k, n), self.coeff());
                t.add_term(w, c);
            }
            if !t.is_zero() {
                return t;
            }
        }
    }

    pub fn monomial(&mut self, k: usize, d: u32, n: usize) -> TensorElement {
        TensorElement::monomial(d, self.word(k, n), rat(1))
    }

    /// A nonzero element with at most `max_terms` terms.
    pub fn sym(&mut self, k: usize, d: u32, n: usize, max_terms: usize) -> SymElement {
        loop {
            let terms = self.range(1, max_terms.max(1));
            let mut s = SymElement::zero(d, n);
            for _ in 0..terms {
                let (w, c) = (self.word(k, n), self.coeff());
                s.add_term(w, c);
            }
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// `n! π(t)` for a random tensor `t`, which keeps coefficients integral.
    pub fn invariant(&mut self, k: usize, d: u32, n: usize, max_terms: usize) -> InvariantElement {
        let t = self.tensor(k, d, n, max_terms);
        pi(&t).scale(&crate::hopf::factorial(n))
    }
}
