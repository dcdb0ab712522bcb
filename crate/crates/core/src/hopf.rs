//! Invariants `B^Σ` and coinvariants `B_Σ` of the shuffle algebra.
//!
//! [`InvariantElement`]s are symmetric tensors stored fully expanded.
//! [`SymElement`]s live in `Sym^n(B_d)` and store each monomial as a sorted
//! word. The symmetrization `𝔖` identifies the two; the dot product `·`
//! (sum over all shuffles) and the comultiplication `Δ` are compatible with
//! it, and the star product on `B_Σ` is transported through it.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::Rational;
use crate::polyring::GradedRing;
use crate::shuffle::{shuffle_product, star_product, star_words, Split, TensorElement, Word};

pub fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * k))
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
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

/// An element of `Sym^n(B_d)`; words are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    d: u32,
    n: usize,
    terms: BTreeMap<Word, Rational>,
}

impl SymElement {
    pub fn zero(d: u32, n: usize) -> Self {
        Self {
            d,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(d: u32) -> Self {
        Self::monomial(d, Word::empty(), Rational::one())
    }

    pub fn monomial(d: u32, word: Word, c: Rational) -> Self {
        let mut s = Self::zero(d, word.len());
        s.add_term(word, c);
        s
    }

    pub fn from_terms(d: u32, n: usize, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut s = Self::zero(d, n);
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
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

    /// Adds `c` times the multiset of letters in `w` (order is irrelevant).
    pub fn add_term(&mut self, w: Word, c: Rational) {
        assert_eq!(w.len(), self.n, "word length does not match outer degree");
        add_into(&mut self.terms, w.sorted(), c);
    }

    pub fn add(&self, other: &SymElement) -> SymElement {
        assert_eq!((self.d, self.n), (other.d, other.n));
        let mut s = self.clone();
        for (w, c) in &other.terms {
            add_into(&mut s.terms, w.clone(), c.clone());
        }
        s
    }

    pub fn scale(&self, c: &Rational) -> SymElement {
        Self::from_terms(
            self.d,
            self.n,
            self.terms.iter().map(|(w, x)| (w.clone(), x * c)),
        )
    }

    pub fn sub(&self, other: &SymElement) -> SymElement {
        self.add(&other.scale(&-Rational::one()))
    }
}

/// A tensor fixed by every permutation of its letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantElement(TensorElement);

impl InvariantElement {
    /// Checks invariance before wrapping.
    pub fn new(t: TensorElement) -> Result<Self> {
        if pi(&t).0 != t {
            return Err(Error::NotInvariant);
        }
        Ok(Self(t))
    }

    pub fn unit(d: u32) -> Self {
        Self(TensorElement::unit(d))
    }

    pub fn as_tensor(&self) -> &TensorElement {
        &self.0
    }

    pub fn into_tensor(self) -> TensorElement {
        self.0
    }

    pub fn d(&self) -> u32 {
        self.0.d()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn add(&self, other: &InvariantElement) -> InvariantElement {
        Self(self.0.add(&other.0))
    }

    pub fn scale(&self, c: &Rational) -> InvariantElement {
        Self(self.0.scale(c))
    }
}

fn symmetrize(t: &TensorElement) -> TensorElement {
    let n = t.n();
    let mut out = TensorElement::zero(t.d(), n);
    for (w, c) in t.terms() {
        for perm in (0..n).permutations(n) {
            out.add_term(w.restrict(&perm), c.clone());
        }
    }
    out
}

/// `π`: averages over all letter permutations.
pub fn pi(f: &TensorElement) -> InvariantElement {
    InvariantElement(symmetrize(f).scale(&factorial(f.n()).recip()))
}

/// `𝔖`: sums over all `n!` letter permutations (repeated letters give multiplicities).
pub fn frak_s(s: &SymElement) -> InvariantElement {
    let t = TensorElement::from_terms(
        s.d,
        s.n,
        s.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
    );
    InvariantElement(symmetrize(&t))
}

/// Inverse of [`frak_s`]: `1/n!` times the image in the coinvariants.
pub fn frak_s_inv(x: &InvariantElement) -> SymElement {
    let scale = factorial(x.n()).recip();
    SymElement::from_terms(
        x.d(),
        x.n(),
        x.0.terms().iter().map(|(w, c)| (w.clone(), c * &scale)),
    )
}

/// `f · g = Σ_σ f ·_σ g` over all splits.
pub fn dot_tensor(f: &TensorElement, g: &TensorElement) -> Result<TensorElement> {
    let (n, m) = (f.n(), g.n());
    let d = if n > 0 { f.d() } else { g.d() };
    let mut out = TensorElement::zero(d, n + m);
    for sigma in Split::all(n, m) {
        out.add_assign(&shuffle_product(f, g, &sigma)?);
    }
    Ok(out)
}

pub fn dot_invariant(f: &InvariantElement, g: &InvariantElement) -> Result<InvariantElement> {
    dot_tensor(&f.0, &g.0).map(InvariantElement)
}

fn check_inner(d: u32, n: usize, e: u32, m: usize) -> Result<u32> {
    match (n, m) {
        (0, _) => Ok(e),
        (_, 0) => Ok(d),
        _ if d == e => Ok(d),
        _ => Err(Error::InnerDegreeMismatch(d, e)),
    }
}

/// Product in `Sym(B_d)`: union of multisets.
pub fn dot_coinv(f: &SymElement, g: &SymElement) -> Result<SymElement> {
    let d = check_inner(f.d, f.n, g.d, g.n)?;
    let mut out = SymElement::zero(d, f.n + g.n);
    for (u, a) in &f.terms {
        for (v, b) in &g.terms {
            let mut w = u.0.clone();
            w.extend_from_slice(&v.0);
            out.add_term(Word(w), a * b);
        }
    }
    Ok(out)
}

pub fn star_invariant(
    ring: &GradedRing,
    f: &InvariantElement,
    g: &InvariantElement,
) -> Result<InvariantElement> {
    star_product(ring, &f.0, &g.0).map(InvariantElement)
}

/// `f * g = 𝔖⁻¹(𝔖 f * 𝔖 g)`.
///
/// Evaluated as `Σ_ρ [u_1 v_ρ(1), …, u_n v_ρ(n)]` per pair of multiset words,
/// which avoids expanding both symmetrizations.
pub fn star_coinv(ring: &GradedRing, f: &SymElement, g: &SymElement) -> Result<SymElement> {
    if f.n != g.n {
        return Err(Error::OuterDegreeMismatch(f.n, g.n));
    }
    let n = f.n;
    let mut out = SymElement::zero(f.d + g.d, n);
    for (u, a) in &f.terms {
        for (v, b) in &g.terms {
            let ab = a * b;
            for perm in (0..n).permutations(n) {
                let vp = v.restrict(&perm);
                for (w, c) in star_words(ring, f.d, u, g.d, &vp) {
                    out.add_term(Word(w), c * &ab);
                }
            }
        }
    }
    Ok(out)
}

/// [`star_coinv`] computed literally through `𝔖` and `𝔖⁻¹`.
pub fn star_coinv_transported(
    ring: &GradedRing,
    f: &SymElement,
    g: &SymElement,
) -> Result<SymElement> {
    Ok(frak_s_inv(&star_invariant(ring, &frak_s(f), &frak_s(g))?))
}

/// `Σ_i c_i (left_i ⊗ right_i)` with words of one inner degree `d`.
///
/// Words are sorted multisets when produced by [`delta_coinv`] and ordered
/// tensors when produced by [`delta_invariant`]. The component `(i, n-i)`
/// holds the terms whose left word has length `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTensor {
    d: u32,
    n: usize,
    terms: BTreeMap<(Word, Word), Rational>,
}

impl PairTensor {
    pub fn zero(d: u32, n: usize) -> Self {
        Self {
            d,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Rational) {
        assert_eq!(left.len() + right.len(), self.n);
        add_into(&mut self.terms, (left, right), c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn component(&self, i: usize) -> impl Iterator<Item = (&Word, &Word, &Rational)> {
        self.terms
            .iter()
            .filter(move |((l, _), _)| l.len() == i)
            .map(|((l, r), c)| (l, r, c))
    }

    /// `a ⊗ b ↦ b ⊗ a`.
    pub fn swap(&self) -> PairTensor {
        let mut out = PairTensor::zero(self.d, self.n);
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }
}

/// `Δ(w_1⋯w_n) = Σ_{S ⊆ [n]} w_S ⊗ w_{[n]∖S}`.
pub fn delta_coinv(s: &SymElement) -> PairTensor {
    let n = s.n;
    let mut out = PairTensor::zero(s.d, n);
    for (w, c) in &s.terms {
        for mask in 0u32..(1 << n) {
            let (left, right): (Vec<u32>, Vec<u32>) = {
                let mut l = Vec::new();
                let mut r = Vec::new();
                for (k, &x) in w.0.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        l.push(x);
                    } else {
                        r.push(x);
                    }
                }
                (l, r)
            };
            out.add_term(Word(left), Word(right), c.clone());
        }
    }
    out
}

/// `Δ` on `B^Σ`, from `Δ(w) = 1⊗w + w⊗1` in degree one and multiplicativity under `·`.
///
/// A symmetric `x = Σ c_w w` equals `Σ c_w π(w)`, and `n! π(w) = w_1 · ⋯ · w_n`,
/// so `Δ(x) = (1/n!) Σ_w c_w Σ_{S ⊆ [n]} π'(w_S) ⊗ π'(w_{[n]∖S})` where `π' = n! π`.
pub fn delta_invariant(x: &InvariantElement) -> PairTensor {
    let n = x.n();
    let inv = factorial(n).recip();
    let mut out = PairTensor::zero(x.d(), n);
    for (w, c) in x.0.terms() {
        let c = c * &inv;
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
            let t: Vec<usize> = (0..n).filter(|k| mask & (1 << k) == 0).collect();
            let (ws, wt) = (w.restrict(&s), w.restrict(&t));
            for pl in (0..s.len()).permutations(s.len()) {
                let l = ws.restrict(&pl);
                for pr in (0..t.len()).permutations(t.len()) {
                    out.add_term(l.clone(), wt.restrict(&pr), c.clone());
                }
            }
        }
    }
    out
}

/// `(𝔖 ⊗ 𝔖)` applied to a pair tensor of multiset words.
pub fn frak_s_pair(p: &PairTensor) -> PairTensor {
    let mut out = PairTensor::zero(p.d, p.n);
    for ((l, r), c) in &p.terms {
        let ls = frak_s(&SymElement::monomial(p.d, l.clone(), Rational::one()));
        let rs = frak_s(&SymElement::monomial(p.d, r.clone(), Rational::one()));
        for (lw, lc) in ls.0.terms() {
            for (rw, rc) in rs.0.terms() {
                out.add_term(lw.clone(), rw.clone(), c * lc * rc);
            }
        }
    }
    out
}

/// `Δ` on `B^Σ` by transport: `(𝔖⊗𝔖) ∘ Δ ∘ 𝔖⁻¹`.
pub fn delta_invariant_transported(x: &InvariantElement) -> PairTensor {
    frak_s_pair(&delta_coinv(&frak_s_inv(x)))
}

fn pair_product(
    p: &PairTensor,
    q: &PairTensor,
    d: u32,
    n: usize,
    mut mul: impl FnMut(u32, &Word, u32, &Word) -> Result<Vec<(Word, Rational)>>,
) -> Result<PairTensor> {
    let mut out = PairTensor::zero(d, n);
    for ((pl, pr), a) in &p.terms {
        for ((ql, qr), b) in &q.terms {
            let left = mul(p.d, pl, q.d, ql)?;
            if left.is_empty() {
                continue;
            }
            let right = mul(p.d, pr, q.d, qr)?;
            let ab = a * b;
            for (lw, lc) in &left {
                for (rw, rc) in &right {
                    out.add_term(lw.clone(), rw.clone(), &ab * lc * rc);
                }
            }
        }
    }
    Ok(out)
}

fn tensor_terms(t: TensorElement) -> Vec<(Word, Rational)> {
    t.terms()
        .iter()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect()
}

/// Componentwise `·` on `B^Σ ⊗ B^Σ`.
pub fn pair_dot_invariant(p: &PairTensor, q: &PairTensor) -> Result<PairTensor> {
    let d = check_inner(p.d, p.n, q.d, q.n)?;
    pair_product(p, q, d, p.n + q.n, |d1, u, d2, v| {
        let f = TensorElement::monomial(d1, u.clone(), Rational::one());
        let g = TensorElement::monomial(d2, v.clone(), Rational::one());
        dot_tensor(&f, &g).map(tensor_terms)
    })
}

/// Componentwise `·` on `B_Σ ⊗ B_Σ`.
pub fn pair_dot_coinv(p: &PairTensor, q: &PairTensor) -> Result<PairTensor> {
    let d = check_inner(p.d, p.n, q.d, q.n)?;
    pair_product(p, q, d, p.n + q.n, |_, u, _, v| {
        let mut w = u.0.clone();
        w.extend_from_slice(&v.0);
        Ok(vec![(Word(w).sorted(), Rational::one())])
    })
}

/// Componentwise `*` on `B^Σ ⊗ B^Σ`; mismatched lengths multiply to zero.
pub fn pair_star_invariant(
    ring: &GradedRing,
    p: &PairTensor,
    q: &PairTensor,
) -> Result<PairTensor> {
    if p.n != q.n {
        return Err(Error::OuterDegreeMismatch(p.n, q.n));
    }
    pair_product(p, q, p.d + q.d, p.n, |d1, u, d2, v| {
        if u.len() != v.len() {
            return Ok(Vec::new());
        }
        Ok(star_words(ring, d1, u, d2, v)
            .into_iter()
            .map(|(w, c)| (Word(w), c))
            .collect())
    })
}

/// `b ⊗ f` for invariant `b` and `f` of one inner degree.
pub fn pair_of(b: &InvariantElement, f: &InvariantElement) -> Result<PairTensor> {
    let d = check_inner(b.d(), b.n(), f.d(), f.n())?;
    let mut out = PairTensor::zero(d, b.n() + f.n());
    for (bw, bc) in b.0.terms() {
        for (fw, fc) in f.0.terms() {
            out.add_term(bw.clone(), fw.clone(), bc * fc);
        }
    }
    Ok(out)
}

/// `Σ (l ⊗ r) ↦ Σ l · r`, collapsing a pair tensor with the dot product.
pub fn pair_contract_dot(p: &PairTensor) -> Result<TensorElement> {
    let mut out = TensorElement::zero(p.d, p.n);
    for ((l, r), c) in &p.terms {
        let f = TensorElement::monomial(p.d, l.clone(), c.clone());
        let g = TensorElement::monomial(p.d, r.clone(), Rational::one());
        out.add_assign(&dot_tensor(&f, &g)?);
    }
    Ok(out)
}

/// Three-fold tensors of multiset words, for coassociativity.
pub type TripleTensor = BTreeMap<(Word, Word, Word), Rational>;

/// `(Δ ⊗ id) ∘ Δ`.
pub fn delta_then_left(p: &PairTensor) -> TripleTensor {
    let mut out = TripleTensor::new();
    for ((l, r), c) in &p.terms {
        let inner = delta_coinv(&SymElement::monomial(p.d, l.clone(), c.clone()));
        for ((a, b), x) in &inner.terms {
            add_into(&mut out, (a.clone(), b.clone(), r.clone()), x.clone());
        }
    }
    out
}

/// `(id ⊗ Δ) ∘ Δ`.
pub fn delta_then_right(p: &PairTensor) -> TripleTensor {
    let mut out = TripleTensor::new();
    for ((l, r), c) in &p.terms {
        let inner = delta_coinv(&SymElement::monomial(p.d, r.clone(), c.clone()));
        for ((a, b), x) in &inner.terms {
            add_into(&mut out, (l.clone(), a.clone(), b.clone()), x.clone());
        }
    }
    out
}
