//! Truncated graded rings `Sym(V*)/I` presented by homogeneous relations.
//!
//! Each graded piece `B_d` is computed on demand by linear algebra in degree `d`:
//! the relations multiplied by all monomials of the complementary degree span
//! `I_d`, and the monomials that are not pivots of `rref(I_d)` form the basis.

mod parse;
mod ring;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactlin::Rational;

pub use parse::parse_poly;
pub use ring::{DegreePiece, GradedRing, RingSpec};

/// Exponents of a monomial; `ExponentVector(vec![2, 0, 1])` is `x0^2 x2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Pointwise `self <= other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.divides(other)
            .then(|| ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect()))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All monomials of degree `d` in `r` variables, in descending lexicographic order.
pub fn sym_monomials(r: usize, d: u32) -> Vec<ExponentVector> {
    fn go(r: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if r == 1 {
            prefix.push(d);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            go(r - 1, d - first, prefix, out);
            prefix.pop();
        }
    }
    assert!(r >= 1, "a ring needs at least one variable");
    let mut out = Vec::new();
    go(r, d, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Number of monomials of degree `d` in `r` variables, `C(d+r-1, r-1)`.
pub fn sym_dim(r: usize, d: u32) -> usize {
    binomial(d as usize + r - 1, r - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: ExponentVector, coeff: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: ExponentVector, coeff: Rational) {
        assert_eq!(exps.len(), self.nvars);
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coeff(&self, exps: &ExponentVector) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// The common degree of all terms, or `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(ExponentVector::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn mul_monomial(&self, m: &ExponentVector) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.mul(m), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the input grammar, largest monomial first; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut first = true;
            if !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (var, &e) in exps.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{var}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            if first {
                // constant term
                write!(f, "{mag}")?;
            }
        }
        Ok(())
    }
}
