//! The shuffle algebra `S(B) = ⊕ B_d^{⊗n}`.
//!
//! A [`Word`] is a tensor monomial whose letters are indices into the graded
//! basis of `B_d`; for a polynomial ring the basis is every monomial, so
//! letters are exactly exponent vectors in descending lex order. Two products
//! act on words: the shuffle `·_σ`, which interleaves two words along a
//! [`Split`], and the star `*`, which multiplies equal-length words letter by
//! letter in `B`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{Rational, SparseRow};
use crate::polyring::{ExponentVector, GradedRing};

/// Largest word length accepted by [`monomial_membership_oracle`].
pub const ORACLE_MAX_LEN: usize = 6;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters at the given positions, in order.
    pub fn restrict(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&p| self.0[p]).collect())
    }

    /// Multiset normal form: letters sorted by basis index.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// A rational combination of words, all of bidegree `(d, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    d: u32,
    n: usize,
    terms: BTreeMap<Word, Rational>,
}

impl TensorElement {
    pub fn zero(d: u32, n: usize) -> Self {
        Self {
            d,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of `B_d^{⊗0}`.
    pub fn unit(d: u32) -> Self {
        Self::monomial(d, Word::empty(), Rational::one())
    }

    pub fn monomial(d: u32, word: Word, coeff: Rational) -> Self {
        let mut t = Self::zero(d, word.len());
        t.add_term(word, coeff);
        t
    }

    pub fn from_terms(d: u32, n: usize, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut t = Self::zero(d, n);
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        assert_eq!(w.len(), self.n, "word length does not match outer degree");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorElement) {
        assert_eq!((self.d, self.n), (other.d, other.n));
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut s = self.clone();
        s.add_assign(other);
        s
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        if c.is_zero() {
            return Self::zero(self.d, self.n);
        }
        Self {
            d: self.d,
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Applies the letter permutation `positions` (output slot `k` takes input letter `positions[k]`).
    pub fn permute(&self, positions: &[usize]) -> TensorElement {
        Self::from_terms(
            self.d,
            self.n,
            self.terms
                .iter()
                .map(|(w, c)| (w.restrict(positions), c.clone())),
        )
    }
}

/// A split of `[n+m]` into an increasing `left` part and its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Split {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Split {
    /// Zero-based positions of the left factor inside `0..total`.
    pub fn new(total: usize, mut left: Vec<usize>) -> Result<Self> {
        left.sort_unstable();
        left.dedup();
        if left.last().is_some_and(|&l| l >= total) {
            return Err(Error::DimensionMismatch {
                expected: total,
                got: left.last().unwrap() + 1,
            });
        }
        let right = (0..total)
            .filter(|i| left.binary_search(i).is_err())
            .collect();
        Ok(Self { left, right })
    }

    /// One-based positions, as written by hand: `({1,3},{2})`.
    pub fn from_one_based(left: &[usize], right: &[usize]) -> Result<Self> {
        let total = left.len() + right.len();
        let s = Self::new(total, left.iter().map(|&i| i.wrapping_sub(1)).collect())?;
        let mut r: Vec<usize> = right.iter().map(|&i| i.wrapping_sub(1)).collect();
        r.sort_unstable();
        if s.left.len() != left.len() || s.right != r {
            return Err(Error::SplitFormat {
                left: left.len(),
                right: right.len(),
                n: total,
                m: 0,
            });
        }
        Ok(s)
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn total(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// The split with its two parts exchanged.
    pub fn swap(&self) -> Split {
        Split {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// Every split of `[n+m]` with a left part of size `n`, in colex order of the left part.
    pub fn all(n: usize, m: usize) -> Vec<Split> {
        let total = n + m;
        let mut lefts: Vec<Vec<usize>> = (0..total).combinations(n).collect();
        lefts.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        lefts
            .into_iter()
            .map(|l| Split::new(total, l).expect("in range"))
            .collect()
    }
}

fn shuffle_words(u: &Word, v: &Word, sigma: &Split) -> Word {
    let mut out = vec![0u32; sigma.total()];
    for (k, &p) in sigma.left.iter().enumerate() {
        out[p] = u.0[k];
    }
    for (k, &p) in sigma.right.iter().enumerate() {
        out[p] = v.0[k];
    }
    Word(out)
}

/// `f ·_σ g`: letters of `f` go to `σ.left`, letters of `g` to `σ.right`.
pub fn shuffle_product(
    f: &TensorElement,
    g: &TensorElement,
    sigma: &Split,
) -> Result<TensorElement> {
    if f.d != g.d && f.n > 0 && g.n > 0 {
        return Err(Error::InnerDegreeMismatch(f.d, g.d));
    }
    if sigma.left.len() != f.n || sigma.right.len() != g.n {
        return Err(Error::SplitFormat {
            left: sigma.left.len(),
            right: sigma.right.len(),
            n: f.n,
            m: g.n,
        });
    }
    let d = if f.n > 0 { f.d } else { g.d };
    let mut out = TensorElement::zero(d, f.n + g.n);
    for (u, a) in &f.terms {
        for (v, b) in &g.terms {
            out.add_term(shuffle_words(u, v, sigma), a * b);
        }
    }
    Ok(out)
}

/// Expands `⊗_k (Σ_j c_kj e_j)` into words.
pub(crate) fn expand_tensor(factors: &[SparseRow]) -> Vec<(Vec<u32>, Rational)> {
    let mut acc: Vec<(Vec<u32>, Rational)> =
        vec![(Vec::with_capacity(factors.len()), Rational::one())];
    for f in factors {
        if f.is_empty() {
            return Vec::new();
        }
        if f.len() == 1 {
            let (j, c) = &f[0];
            for (w, x) in acc.iter_mut() {
                w.push(*j as u32);
                *x *= c;
            }
            continue;
        }
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (w, x) in &acc {
            for (j, c) in f {
                let mut w2 = w.clone();
                w2.push(*j as u32);
                next.push((w2, x * c));
            }
        }
        acc = next;
    }
    acc
}

/// Letterwise product of two words of equal length, expanded in the basis of `B_{d+e}`.
pub(crate) fn star_words(
    ring: &GradedRing,
    d: u32,
    u: &Word,
    e: u32,
    v: &Word,
) -> Vec<(Vec<u32>, Rational)> {
    let factors: Vec<SparseRow> =
        u.0.iter()
            .zip(&v.0)
            .map(|(&a, &b)| ring.basis_product(d, a as usize, e, b as usize))
            .collect();
    expand_tensor(&factors)
}

/// `f * g`, the letterwise product in `B`.
pub fn star_product(
    ring: &GradedRing,
    f: &TensorElement,
    g: &TensorElement,
) -> Result<TensorElement> {
    if f.n != g.n {
        return Err(Error::OuterDegreeMismatch(f.n, g.n));
    }
    let mut out = TensorElement::zero(f.d + g.d, f.n);
    for (u, a) in &f.terms {
        for (v, b) in &g.terms {
            let ab = a * b;
            for (w, c) in star_words(ring, f.d, u, g.d, v) {
                out.add_term(Word(w), c * &ab);
            }
        }
    }
    Ok(out)
}

fn single_term(t: &TensorElement) -> Result<(&Word, &Rational)> {
    match t.terms.len() {
        1 => Ok(t.terms.iter().next().unwrap()),
        k => Err(Error::NotMonomial(k)),
    }
}

/// Rewrites `a * (b ·_σ f)` as `Σ h_i ·_σ (g_i * f)`.
///
/// `σ.left` holds the slots of `b` and `σ.right` the slots of `f`. For
/// monomials `a = α_1 ⊗ … ⊗ α_{n+m}` and `b = β_1 ⊗ … ⊗ β_m` the single pair is
/// `g = α restricted to σ.right` and `h = (α restricted to σ.left) * b`.
/// General `a` and `b` give one pair per pair of terms.
pub fn rewrite_star_shuffle(
    ring: &GradedRing,
    a: &TensorElement,
    b: &TensorElement,
    f: &TensorElement,
    sigma: &Split,
) -> Result<Vec<(TensorElement, TensorElement)>> {
    if sigma.left.len() != b.n || sigma.right.len() != f.n {
        return Err(Error::SplitFormat {
            left: sigma.left.len(),
            right: sigma.right.len(),
            n: b.n,
            m: f.n,
        });
    }
    if a.n != sigma.total() {
        return Err(Error::OuterDegreeMismatch(a.n, sigma.total()));
    }
    let mut pairs = Vec::with_capacity(a.terms.len() * b.terms.len());
    for (aw, ac) in &a.terms {
        let g = TensorElement::monomial(a.d, aw.restrict(&sigma.right), ac.clone());
        let a_left = TensorElement::monomial(a.d, aw.restrict(&sigma.left), Rational::one());
        for (bw, bc) in &b.terms {
            let bm = TensorElement::monomial(b.d, bw.clone(), bc.clone());
            let h = star_product(ring, &a_left, &bm)?;
            pairs.push((h, g.clone()));
        }
    }
    Ok(pairs)
}

/// The single pair of [`rewrite_star_shuffle`] for monomial `a` and `b`.
pub fn rewrite_star_shuffle_monomial(
    ring: &GradedRing,
    a: &TensorElement,
    b: &TensorElement,
    f: &TensorElement,
    sigma: &Split,
) -> Result<(TensorElement, TensorElement)> {
    single_term(a)?;
    single_term(b)?;
    Ok(rewrite_star_shuffle(ring, a, b, f, sigma)?.remove(0))
}

/// Comparison of words of one bidegree under `⪯`.
///
/// Letters compare by graded-basis position: a smaller index is a larger
/// letter. For a polynomial ring this is the lexicographic order on exponent
/// vectors.
pub fn word_cmp(w: &Word, w2: &Word) -> Ordering {
    w2.0.cmp(&w.0)
}

pub fn word_leq_order(w: &Word, w2: &Word) -> Result<bool> {
    if w.len() != w2.len() {
        return Err(Error::OuterDegreeMismatch(w.len(), w2.len()));
    }
    Ok(word_cmp(w, w2) != Ordering::Greater)
}

fn word_degree(w: &[ExponentVector]) -> Result<Option<u32>> {
    let mut degs = w.iter().map(ExponentVector::degree);
    let Some(first) = degs.next() else {
        return Ok(None);
    };
    for d in degs {
        if d != first {
            return Err(Error::InnerDegreeMismatch(first, d));
        }
    }
    Ok(Some(first))
}

/// `⪯` on exponent-vector words of a polynomial ring.
pub fn exp_word_leq_order(w: &[ExponentVector], w2: &[ExponentVector]) -> Result<bool> {
    let (d, d2) = (word_degree(w)?, word_degree(w2)?);
    if w.len() != w2.len() || d != d2 {
        return Err(Error::BidegreeMismatch(
            d.unwrap_or(0),
            w.len(),
            d2.unwrap_or(0),
            w2.len(),
        ));
    }
    Ok(w <= w2)
}

/// The `⪯`-largest word of `f` with its coefficient.
pub fn initial_term(f: &TensorElement) -> Result<(Word, Rational)> {
    f.terms
        .iter()
        .next()
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or(Error::ZeroElement)
}

/// Higman embedding: an increasing choice of positions in `w2` that pointwise dominates `w`.
pub fn higman_leq(w: &[ExponentVector], w2: &[ExponentVector]) -> bool {
    let mut rest = w2.iter();
    // earliest dominating position is always a safe choice
    w.iter().all(|letter| rest.any(|cand| letter.divides(cand)))
}

/// Brute force: is `m2 = n1 ·_σ (n0 * m)` for some monomials `n0`, `n1` and split `σ`?
///
/// Exponential in the word lengths; refuses words longer than [`ORACLE_MAX_LEN`].
pub fn monomial_membership_oracle(m: &[ExponentVector], m2: &[ExponentVector]) -> Result<bool> {
    let longest = m.len().max(m2.len());
    if longest > ORACLE_MAX_LEN {
        return Err(Error::OracleLimit(longest, ORACLE_MAX_LEN));
    }
    word_degree(m)?;
    word_degree(m2)?;
    let (n, total) = (m.len(), m2.len());
    if n > total {
        return Ok(false);
    }
    for sigma in Split::all(total - n, n) {
        // n0 is forced letter by letter: n0_k = m2[σ.right_k] / m_k
        let n0: Option<Vec<ExponentVector>> = m
            .iter()
            .zip(&sigma.right)
            .map(|(mk, &p)| mk.quotient_of(&m2[p]))
            .collect();
        let Some(n0) = n0 else { continue };
        if word_degree(&n0).is_err() {
            continue;
        }
        let n1: Vec<ExponentVector> = sigma.left.iter().map(|&p| m2[p].clone()).collect();
        let star: Vec<ExponentVector> = n0.iter().zip(m).map(|(a, b)| a.mul(b)).collect();
        let mut rebuilt = vec![ExponentVector(Vec::new()); total];
        for (k, &p) in sigma.left.iter().enumerate() {
            rebuilt[p] = n1[k].clone();
        }
        for (k, &p) in sigma.right.iter().enumerate() {
            rebuilt[p] = star[k].clone();
        }
        if rebuilt == m2 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exponent vectors of the letters of `w`, viewed in `B_d`.
pub fn to_exponent_word(ring: &GradedRing, d: u32, w: &Word) -> Vec<ExponentVector> {
    let piece = ring.piece(d);
    w.0.iter()
        .map(|&i| piece.basis_monomial(i as usize).clone())
        .collect()
}

/// Inverse of [`to_exponent_word`]; every letter must be a basis monomial of `B_d`.
pub fn from_exponent_word(ring: &GradedRing, d: u32, letters: &[ExponentVector]) -> Result<Word> {
    let piece = ring.piece(d);
    letters
        .iter()
        .map(|l| {
            piece
                .index
                .get(l)
                .and_then(|mi| piece.basis.binary_search(mi).ok())
                .map(|i| i as u32)
                .ok_or_else(|| Error::LetterNotInBasis(l.to_string()))
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::polyring::parse_poly;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    fn w(letters: &[u32]) -> Word {
        Word(letters.to_vec())
    }

    fn mono(d: u32, letters: &[u32]) -> TensorElement {
        TensorElement::monomial(d, w(letters), rat(1))
    }

    #[test]
    fn shuffle_examples() {
        let (u, v) = (mono(1, &[0]), mono(1, &[1]));
        let unit = TensorElement::unit(1);
        let s = Split::new(1, vec![0]).unwrap();
        assert_eq!(shuffle_product(&u, &unit, &s).unwrap(), u);

        let s = Split::from_one_based(&[2], &[1]).unwrap();
        assert_eq!(shuffle_product(&u, &v, &s).unwrap(), mono(1, &[1, 0]));

        let f = mono(2, &[0, 1]);
        let g = mono(2, &[2]);
        let s = Split::from_one_based(&[1, 3], &[2]).unwrap();
        assert_eq!(shuffle_product(&f, &g, &s).unwrap(), mono(2, &[0, 2, 1]));
    }

    #[test]
    fn shuffle_errors() {
        let s = Split::new(2, vec![0]).unwrap();
        assert!(matches!(
            shuffle_product(&mono(1, &[0]), &mono(2, &[0]), &s),
            Err(Error::InnerDegreeMismatch(1, 2))
        ));
        assert!(matches!(
            shuffle_product(&mono(1, &[0, 1]), &mono(1, &[0]), &s),
            Err(Error::SplitFormat { .. })
        ));
        assert!(Split::from_one_based(&[1, 1], &[2]).is_err());
        assert!(Split::new(2, vec![2]).is_err());
    }

    #[test]
    fn splits_in_colex_order() {
        let lefts: Vec<Vec<usize>> = Split::all(2, 2).iter().map(|s| s.left().to_vec()).collect();
        assert_eq!(
            lefts,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Split::all(0, 3).len(), 1);
        assert_eq!(Split::all(3, 0).len(), 1);
    }

    #[test]
    fn star_examples() {
        let ring = GradedRing::free(2);
        // B_1 = [x, y], B_2 = [x^2, xy, y^2]
        assert_eq!(
            star_product(&ring, &mono(1, &[0]), &mono(1, &[1])).unwrap(),
            mono(2, &[1])
        );
        assert_eq!(
            star_product(&ring, &mono(1, &[0, 0]), &mono(1, &[1, 1])).unwrap(),
            mono(2, &[1, 1])
        );
        assert!(matches!(
            star_product(&ring, &mono(1, &[0]), &mono(1, &[0, 1])),
            Err(Error::OuterDegreeMismatch(1, 2))
        ));

        let cone = GradedRing::from_json(r#"{"vars": 3, "relations": ["x0*x2 - x1^2"]}"#).unwrap();
        let x = from_exponent_word(&cone, 1, &[ev(&[1, 0, 0]), ev(&[0, 0, 1])]).unwrap();
        let z = from_exponent_word(&cone, 1, &[ev(&[0, 0, 1]), ev(&[1, 0, 0])]).unwrap();
        let prod = star_product(
            &cone,
            &TensorElement::monomial(1, x, rat(1)),
            &TensorElement::monomial(1, z, rat(1)),
        )
        .unwrap();
        let y2 = cone.reduce(2, &parse_poly("x1^2", 3).unwrap()).unwrap();
        assert_eq!(y2.len(), 1);
        let y2 = y2[0].0 as u32;
        assert_eq!(prod, mono(2, &[y2, y2]));
    }

    #[test]
    fn rewrite_examples() {
        let ring = GradedRing::free(2);
        // a = (p, q) with p = x^2, q = y^2 in B_2; b = (x); f = (y)
        let a = mono(2, &[0, 2]);
        let b = mono(1, &[0]);
        let f = mono(1, &[1]);
        let sigma = Split::from_one_based(&[1], &[2]).unwrap();
        let (h, g) = rewrite_star_shuffle_monomial(&ring, &a, &b, &f, &sigma).unwrap();
        // h = (x^2 * x) = x^3, g = (y^2)
        assert_eq!(h, mono(3, &[0]));
        assert_eq!(g, mono(2, &[2]));
        let lhs = star_product(&ring, &a, &shuffle_product(&b, &f, &sigma).unwrap()).unwrap();
        let rhs = shuffle_product(&h, &star_product(&ring, &g, &f).unwrap(), &sigma).unwrap();
        assert_eq!(lhs, rhs);
        // (x^3, y^3)
        assert_eq!(lhs, mono(3, &[0, 3]));

        // n = 0: g is the empty word and h = a * b
        let sigma = Split::new(1, vec![0]).unwrap();
        let (h, g) = rewrite_star_shuffle_monomial(
            &ring,
            &mono(1, &[1]),
            &b,
            &TensorElement::unit(1),
            &sigma,
        )
        .unwrap();
        assert_eq!(h, mono(2, &[1]));
        assert_eq!(g, TensorElement::unit(1));
        // m = 0: h is empty and g = a
        let sigma = Split::new(1, vec![]).unwrap();
        let (h, g) = rewrite_star_shuffle_monomial(
            &ring,
            &mono(1, &[1]),
            &TensorElement::unit(1),
            &f,
            &sigma,
        )
        .unwrap();
        assert_eq!(h, TensorElement::unit(2));
        assert_eq!(g, mono(1, &[1]));
        assert!(matches!(
            rewrite_star_shuffle_monomial(
                &ring,
                &mono(1, &[1]).add(&mono(1, &[0])),
                &TensorElement::unit(1),
                &f,
                &sigma
            ),
            Err(Error::NotMonomial(2))
        ));
    }

    #[test]
    fn order_examples() {
        assert!(exp_word_leq_order(&[ev(&[0, 1])], &[ev(&[0, 1])]).unwrap());
        assert!(exp_word_leq_order(&[ev(&[0, 1])], &[ev(&[1, 0])]).unwrap());
        assert!(!exp_word_leq_order(&[ev(&[1, 0])], &[ev(&[0, 1])]).unwrap());
        let first = [ev(&[1, 0]), ev(&[0, 1])];
        let second = [ev(&[0, 1]), ev(&[1, 0])];
        assert!(exp_word_leq_order(&second, &first).unwrap());
        assert!(!exp_word_leq_order(&first, &second).unwrap());
        assert!(exp_word_leq_order(&first, &first[..1]).is_err());
        assert!(exp_word_leq_order(&[ev(&[1, 0])], &[ev(&[2, 0])]).is_err());
        assert!(word_leq_order(&w(&[0]), &w(&[0, 1])).is_err());
    }

    #[test]
    fn index_order_matches_lex_on_free_ring() {
        let ring = GradedRing::free(3);
        let piece = ring.piece(2);
        for i in 0..piece.dim() as u32 {
            for j in 0..piece.dim() as u32 {
                let (a, b) = (w(&[i]), w(&[j]));
                let ea = to_exponent_word(&ring, 2, &a);
                let eb = to_exponent_word(&ring, 2, &b);
                assert_eq!(
                    word_leq_order(&a, &b).unwrap(),
                    exp_word_leq_order(&ea, &eb).unwrap()
                );
                assert_eq!(from_exponent_word(&ring, 2, &ea).unwrap(), a);
            }
        }
    }

    #[test]
    fn initial_term_examples() {
        // r = 2, d = 1: x1 is index 0, x2 is index 1
        let single = TensorElement::monomial(1, w(&[1, 0]), rat(5));
        assert_eq!(initial_term(&single).unwrap(), (w(&[1, 0]), rat(5)));
        let f = mono(1, &[0, 1]).add(&mono(1, &[1, 0]));
        assert_eq!(initial_term(&f).unwrap(), (w(&[0, 1]), rat(1)));
        let g = mono(1, &[1, 1])
            .scale(&rat(2))
            .sub(&mono(1, &[0, 0]).scale(&rat(3)));
        assert_eq!(initial_term(&g).unwrap(), (w(&[0, 0]), rat(-3)));
        assert_eq!(
            initial_term(&TensorElement::zero(1, 2)),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn higman_examples() {
        assert!(higman_leq(&[], &[ev(&[0, 1])]));
        assert!(higman_leq(&[ev(&[1, 0])], &[ev(&[2, 0])]));
        assert!(!higman_leq(
            &[ev(&[1, 0]), ev(&[0, 1])],
            &[ev(&[0, 1]), ev(&[1, 0])]
        ));
        assert!(higman_leq(
            &[ev(&[1, 0]), ev(&[0, 1])],
            &[ev(&[1, 1]), ev(&[0, 2]), ev(&[1, 1])]
        ));
    }

    #[test]
    fn oracle_examples() {
        let m = [ev(&[1, 0]), ev(&[0, 1])];
        assert!(monomial_membership_oracle(&m, &m).unwrap());
        assert!(!monomial_membership_oracle(&[ev(&[1, 0])], &[ev(&[0, 2])]).unwrap());
        let long = vec![ev(&[1, 0]); 7];
        assert_eq!(
            monomial_membership_oracle(&long, &long),
            Err(Error::OracleLimit(7, 6))
        );
    }
}
