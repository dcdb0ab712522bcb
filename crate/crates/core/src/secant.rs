//! Veronese ideals, joins and secant ideals as bigraded subspaces of `B_Σ`.
//!
//! Every piece is a kernel computed exactly:
//! - `I_B(1)_{d,n} = ker(Sym^n(B_d) → B_{dn})`, the multiplication map;
//! - `(I ⋆ J)_{d,n} = ker(Sym^n(B_d) → ⊕_i Sym^i(B_d)/I ⊗ Sym^{n-i}(B_d)/J)`,
//!   comultiplication followed by the quotient projections;
//! - `I_B(r) = I_B(1) ⋆ I_B(r-1)`.
//!
//! Coordinates on `Sym^n(B_d)` are the sorted words of [`SymBasis`].

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactlin::{normalize_row, Echelon, RatMatrix, Rational, SparseRow, Subspace};
use crate::hopf::{dot_coinv, star_coinv, SymElement};
use crate::polyring::GradedRing;
use crate::random::Sampler;
use crate::shuffle::Word;

/// Sorted words of length `n` over `k` letters, in lexicographic order.
#[derive(Debug)]
pub struct SymBasis {
    pub letters: usize,
    pub n: usize,
    pub words: Vec<Word>,
    pub index: HashMap<Word, usize>,
}

impl SymBasis {
    fn build(k: usize, n: usize) -> Self {
        let words: Vec<Word> = (0..k as u32)
            .combinations_with_replacement(n)
            .map(Word)
            .collect();
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Self {
            letters: k,
            n,
            words,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn to_vector(&self, s: &SymElement) -> SparseRow {
        normalize_row(
            s.terms()
                .iter()
                .map(|(w, c)| (self.index[w], c.clone()))
                .collect(),
        )
    }

    pub fn to_element(&self, d: u32, v: &[(usize, Rational)]) -> SymElement {
        SymElement::from_terms(
            d,
            self.n,
            v.iter().map(|(i, c)| (self.words[*i].clone(), c.clone())),
        )
    }
}

type BasisCache = RwLock<HashMap<(usize, usize), Arc<SymBasis>>>;

/// Shared, memoized [`SymBasis`] for `k` letters and length `n`.
pub fn sym_basis(k: usize, n: usize) -> Arc<SymBasis> {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    let cache = CACHE.get_or_init(RwLock::default);
    if let Some(b) = cache.read().unwrap().get(&(k, n)) {
        return Arc::clone(b);
    }
    let b = Arc::new(SymBasis::build(k, n));
    Arc::clone(cache.write().unwrap().entry((k, n)).or_insert(b))
}

fn basis_for(ring: &GradedRing, d: u32, n: usize) -> Arc<SymBasis> {
    sym_basis(ring.hilbert(d), n)
}

/// The matrix of `Sym^n(B_d) → B_{dn}`: one row per basis element of `B_{dn}`,
/// one column per sorted word.
pub fn mult_map(ring: &GradedRing, d: u32, n: usize) -> RatMatrix {
    let basis = basis_for(ring, d, n);
    let cols: Vec<Vec<(usize, Rational)>> = basis
        .words
        .iter()
        .map(|w| ring.product_of_letters(d, &w.0))
        .collect();
    RatMatrix::from_rows(ring.hilbert(d * n as u32), cols)
        .expect("products land in B_dn")
        .transpose()
}

pub fn veronese_ideal_piece(ring: &GradedRing, d: u32, n: usize) -> Subspace {
    Subspace::kernel_of(&mult_map(ring, d, n))
}

#[derive(Debug)]
enum Kind {
    Zero,
    Augmentation,
    Veronese,
    Join(Arc<BigradedSubspace>, Arc<BigradedSubspace>),
    Explicit(HashMap<(u32, usize), Subspace>),
}

/// A homogeneous subspace of `B_Σ`, evaluated lazily one bidegree at a time.
#[derive(Debug)]
pub struct BigradedSubspace {
    ring: Arc<GradedRing>,
    kind: Kind,
    memo: RwLock<HashMap<(u32, usize), Arc<Subspace>>>,
}

impl BigradedSubspace {
    fn with_kind(ring: Arc<GradedRing>, kind: Kind) -> Arc<Self> {
        Arc::new(Self {
            ring,
            kind,
            memo: RwLock::default(),
        })
    }

    pub fn zero(ring: Arc<GradedRing>) -> Arc<Self> {
        Self::with_kind(ring, Kind::Zero)
    }

    /// Everything of positive outer degree: the ideal of the origin.
    pub fn augmentation(ring: Arc<GradedRing>) -> Arc<Self> {
        Self::with_kind(ring, Kind::Augmentation)
    }

    /// `I_B(1)`.
    pub fn veronese(ring: Arc<GradedRing>) -> Arc<Self> {
        Self::with_kind(ring, Kind::Veronese)
    }

    /// `I ⋆ J`.
    pub fn join(i: &Arc<Self>, j: &Arc<Self>) -> Arc<Self> {
        assert!(
            Arc::ptr_eq(&i.ring, &j.ring),
            "joined ideals must share a ring"
        );
        Self::with_kind(
            Arc::clone(&i.ring),
            Kind::Join(Arc::clone(i), Arc::clone(j)),
        )
    }

    /// Fixed pieces; bidegrees not listed are zero.
    pub fn explicit(ring: Arc<GradedRing>, pieces: HashMap<(u32, usize), Subspace>) -> Arc<Self> {
        Self::with_kind(ring, Kind::Explicit(pieces))
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn ambient(&self, d: u32, n: usize) -> usize {
        basis_for(&self.ring, d, n).dim()
    }

    pub fn piece(&self, d: u32, n: usize) -> Arc<Subspace> {
        if let Some(p) = self.memo.read().unwrap().get(&(d, n)) {
            return Arc::clone(p);
        }
        let ambient = self.ambient(d, n);
        let computed = match &self.kind {
            Kind::Zero => Subspace::zero(ambient),
            Kind::Augmentation if n == 0 => Subspace::zero(ambient),
            Kind::Augmentation => Subspace::full(ambient),
            Kind::Veronese => veronese_ideal_piece(&self.ring, d, n),
            Kind::Join(i, j) => join_piece(i, j, d, n),
            Kind::Explicit(map) => map
                .get(&(d, n))
                .cloned()
                .unwrap_or_else(|| Subspace::zero(ambient)),
        };
        let computed = Arc::new(computed);
        Arc::clone(self.memo.write().unwrap().entry((d, n)).or_insert(computed))
    }
}

/// `(I ⋆ J)_{d,n}`.
///
/// The target `⊕_i (Sym^i/I) ⊗ (Sym^{n-i}/J)` is produced one block `i` at a
/// time and fed straight into the elimination; block coordinates are ordered
/// by (left quotient basis, right quotient basis).
pub fn join_piece(
    i_ideal: &BigradedSubspace,
    j_ideal: &BigradedSubspace,
    d: u32,
    n: usize,
) -> Subspace {
    let ring = &i_ideal.ring;
    let k = ring.hilbert(d);
    let domain = sym_basis(k, n);
    let mut ech = Echelon::new(domain.dim());

    for i in 0..=n {
        let (lb, rb) = (sym_basis(k, i), sym_basis(k, n - i));
        let (ip, jp) = (i_ideal.piece(d, i), j_ideal.piece(d, n - i));
        let (lq, rq) = (ip.quotient_table(), jp.quotient_table());
        let rdim = rb.dim() - jp.dim();
        let block_dim = (lb.dim() - ip.dim()) * rdim;
        if block_dim == 0 {
            continue;
        }
        let mut block_rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); block_dim];
        for (col, w) in domain.words.iter().enumerate() {
            for s in (0..n).combinations(i) {
                let left = w.restrict(&s);
                let rest: Vec<usize> = (0..n).filter(|p| s.binary_search(p).is_err()).collect();
                let right = w.restrict(&rest);
                for (a, x) in &lq[lb.index[&left]] {
                    for (b, y) in &rq[rb.index[&right]] {
                        block_rows[a * rdim + b].push((col, x * y));
                    }
                }
            }
        }
        for row in block_rows {
            let row = normalize_row(row);
            if !row.is_empty() {
                ech.insert(&row).expect("columns index the domain");
            }
        }
    }
    let (rref_m, _) = ech.into_rref();
    Subspace::kernel_of(&rref_m)
}

/// The chain `I_B(1), I_B(2), …` over one ring, with shared memoization.
#[derive(Debug)]
pub struct SecantIdeals {
    ring: Arc<GradedRing>,
    chain: RwLock<Vec<Arc<BigradedSubspace>>>,
}

impl SecantIdeals {
    pub fn new(ring: Arc<GradedRing>) -> Self {
        let first = BigradedSubspace::veronese(Arc::clone(&ring));
        Self {
            ring,
            chain: RwLock::new(vec![first]),
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    /// `I_B(r) = I_B(1) ⋆ I_B(r-1)` for `r >= 1`.
    pub fn ideal(&self, r: usize) -> Arc<BigradedSubspace> {
        assert!(r >= 1, "secant order starts at 1");
        let mut chain = self.chain.write().unwrap();
        while chain.len() < r {
            let next = BigradedSubspace::join(&chain[0], chain.last().unwrap());
            chain.push(next);
        }
        Arc::clone(&chain[r - 1])
    }

    pub fn piece(&self, r: usize, d: u32, n: usize) -> Arc<Subspace> {
        self.ideal(r).piece(d, n)
    }
}

pub fn secant_ideal_piece(ideals: &SecantIdeals, r: usize, d: u32, n: usize) -> Arc<Subspace> {
    ideals.piece(r, d, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub d: u32,
    pub n: usize,
    pub dim: usize,
    pub generated: usize,
    pub new: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GeneratorProfile {
    pub rows: Vec<ProfileRow>,
}

impl GeneratorProfile {
    /// Largest `n` carrying new generators, or 0 when there are none.
    pub fn max_new_degree(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.new > 0)
            .map(|r| r.n)
            .max()
            .unwrap_or(0)
    }

    pub fn row(&self, d: u32, n: usize) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| r.d == d && r.n == n)
    }

    /// `(n, new)` pairs for one inner degree.
    pub fn new_by_n(&self, d: u32) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .filter(|r| r.d == d)
            .map(|r| (r.n, r.new))
            .collect()
    }
}

fn piece_elements(ideal: &BigradedSubspace, d: u32, n: usize) -> Vec<SymElement> {
    let basis = basis_for(&ideal.ring, d, n);
    ideal
        .piece(d, n)
        .basis()
        .rows()
        .iter()
        .map(|row| basis.to_element(d, row))
        .collect()
}

fn letters(ring: &GradedRing, d: u32) -> Vec<SymElement> {
    (0..ring.hilbert(d) as u32)
        .map(|l| SymElement::monomial(d, Word(vec![l]), Rational::from_integer(1.into())))
        .collect()
}

fn span_of(
    ring: &GradedRing,
    d: u32,
    n: usize,
    elems: impl IntoIterator<Item = SymElement>,
) -> Subspace {
    let basis = basis_for(ring, d, n);
    let mut ech = Echelon::new(basis.dim());
    for e in elems {
        if ech.rank() == basis.dim() {
            break;
        }
        ech.insert(&basis.to_vector(&e))
            .expect("element of Sym^n(B_d)");
    }
    Subspace::from_echelon(ech)
}

/// Span of `B_d · I_{d,n-1}`.
///
/// For an ideal under `·` this equals the span of `h · f` over every
/// `f ∈ I_{d,n'}` with `n' < n` and `h ∈ Sym^{n-n'}(B_d)`.
pub fn ordinary_generated(ideal: &BigradedSubspace, d: u32, n: usize) -> Subspace {
    let ring = &ideal.ring;
    if n == 0 {
        return Subspace::zero(1);
    }
    let lower = piece_elements(ideal, d, n - 1);
    let ls = letters(ring, d);
    span_of(
        ring,
        d,
        n,
        lower.iter().flat_map(|f| {
            ls.iter()
                .map(move |h| dot_coinv(h, f).expect("same inner degree"))
        }),
    )
}

/// The span of `h · f` over all lower pieces and all basis words `h`, evaluated literally.
pub fn ordinary_generated_literal(ideal: &BigradedSubspace, d: u32, n: usize) -> Subspace {
    let ring = &ideal.ring;
    let k = ring.hilbert(d);
    let mut elems = Vec::new();
    for lower in 0..n {
        let hs = sym_basis(k, n - lower);
        for f in piece_elements(ideal, d, lower) {
            for hw in &hs.words {
                let h = SymElement::monomial(d, hw.clone(), Rational::from_integer(1.into()));
                elems.push(dot_coinv(&h, &f).expect("same inner degree"));
            }
        }
    }
    span_of(ring, d, n, elems)
}

/// New generators of `I_B(r)` at fixed inner degree `d`, for `n = 1..=n_max`.
pub fn ordinary_generator_profile(
    ideal: &BigradedSubspace,
    d: u32,
    n_max: usize,
) -> GeneratorProfile {
    for n in 0..=n_max {
        ideal.piece(d, n);
    }
    let rows = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let dim = ideal.piece(d, n).dim();
            let generated = ordinary_generated(ideal, d, n).dim();
            ProfileRow {
                d,
                n,
                dim,
                generated,
                new: dim - generated,
            }
        })
        .collect();
    GeneratorProfile { rows }
}

/// Span of everything in `I_{d,n}` reachable from other bidegrees by `·` and `*`.
///
/// Uses `B_d · I_{d,n-1}` together with `Sym^n(B_{d-d''}) * I_{d'',n}` for
/// `1 <= d'' < d`. For a di-ideal this is the span of all `h · (g * f)` with
/// `f` in a lower piece.
pub fn di_generated(ideal: &BigradedSubspace, d: u32, n: usize) -> Subspace {
    let ring = &ideal.ring;
    let mut elems = Vec::new();
    if n > 0 {
        let ls = letters(ring, d);
        for f in piece_elements(ideal, d, n - 1) {
            elems.extend(
                ls.iter()
                    .map(|h| dot_coinv(h, &f).expect("same inner degree")),
            );
        }
    }
    for lower_d in 1..d {
        let gs = basis_for(ring, d - lower_d, n);
        for f in piece_elements(ideal, lower_d, n) {
            for gw in &gs.words {
                let g =
                    SymElement::monomial(d - lower_d, gw.clone(), Rational::from_integer(1.into()));
                elems.push(star_coinv(ring, &g, &f).expect("same outer degree"));
            }
        }
    }
    span_of(ring, d, n, elems)
}

/// The span of `h · (g * f)` over every lower bidegree `(d'', n'')`, evaluated literally.
pub fn di_generated_literal(ideal: &BigradedSubspace, d: u32, n: usize) -> Subspace {
    let ring = &ideal.ring;
    let one = || Rational::from_integer(1.into());
    let mut elems = Vec::new();
    for lower_d in 1..=d {
        for lower_n in 0..=n {
            if (lower_d, lower_n) == (d, n) {
                continue;
            }
            let gs = basis_for(ring, d - lower_d, lower_n);
            let hs = basis_for(ring, d, n - lower_n);
            for f in piece_elements(ideal, lower_d, lower_n) {
                for gw in &gs.words {
                    let g = SymElement::monomial(d - lower_d, gw.clone(), one());
                    let gf = star_coinv(ring, &g, &f).expect("same outer degree");
                    for hw in &hs.words {
                        let h = SymElement::monomial(d, hw.clone(), one());
                        elems.push(dot_coinv(&h, &gf).expect("same inner degree"));
                    }
                }
            }
        }
    }
    span_of(ring, d, n, elems)
}

/// New di-ideal generators over `1 <= d <= d_max`, `1 <= n <= n_max`.
pub fn di_ideal_generator_profile(
    ideal: &BigradedSubspace,
    d_max: u32,
    n_max: usize,
) -> GeneratorProfile {
    for d in 1..=d_max {
        for n in 0..=n_max {
            ideal.piece(d, n);
        }
    }
    let cells: Vec<(u32, usize)> = (1..=d_max).cartesian_product(1..=n_max).collect();
    let rows = cells
        .into_par_iter()
        .map(|(d, n)| {
            let dim = ideal.piece(d, n).dim();
            let generated = di_generated(ideal, d, n).dim();
            ProfileRow {
                d,
                n,
                dim,
                generated,
                new: dim - generated,
            }
        })
        .collect();
    GeneratorProfile { rows }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureBounds {
    pub d_max: u32,
    pub e_max: u32,
    pub n_max: usize,
}

impl Default for ClosureBounds {
    fn default() -> Self {
        Self {
            d_max: 3,
            e_max: 3,
            n_max: 3,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub star_probes: usize,
    pub star_failures: usize,
    pub dot_probes: usize,
    pub dot_failures: usize,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.star_failures == 0 && self.dot_failures == 0
    }
}

fn random_combination(s: &mut Sampler, piece: &Subspace) -> SparseRow {
    let mut acc = Vec::new();
    for row in piece.basis().rows() {
        if s.range(0, 1) == 1 || piece.dim() == 1 {
            let c = s.coeff();
            acc.extend(row.iter().map(|(i, x)| (*i, x * &c)));
        }
    }
    let v = normalize_row(acc);
    if v.is_empty() {
        piece.basis().row(0).clone()
    } else {
        v
    }
}

/// Probes closure of `ideal` under `g * f` and `h · f` with random `f` in a piece.
///
/// Each trial draws `f` from a nonzero piece `(d, n)` within `bounds`, then
/// checks `g * f ∈ I_{d+e,n}` for a random `g ∈ Sym^n(B_e)` and
/// `h · f ∈ I_{d,n+n'}` for a random `h ∈ Sym^{n'}(B_d)`.
pub fn di_ideal_closure_check(
    ideal: &BigradedSubspace,
    bounds: ClosureBounds,
    trials: usize,
    seed: u64,
) -> ClosureReport {
    let ring = &ideal.ring;
    let mut report = ClosureReport::default();
    let candidates: Vec<(u32, usize)> = (1..=bounds.d_max)
        .cartesian_product(1..=bounds.n_max)
        .filter(|&(d, n)| !ideal.piece(d, n).is_zero())
        .collect();
    if candidates.is_empty() {
        return report;
    }
    let mut s = Sampler::new(seed);
    for _ in 0..trials {
        let &(d, n) = s.pick(&candidates).unwrap();
        let piece = ideal.piece(d, n);
        let f = basis_for(ring, d, n).to_element(d, &random_combination(&mut s, &piece));

        let e = s.range(1, bounds.e_max as usize) as u32;
        let g = s.sym(ring.hilbert(e), e, n, 3);
        let gf = star_coinv(ring, &g, &f).expect("same outer degree");
        report.star_probes += 1;
        let target = ideal.piece(d + e, n);
        if !target
            .contains(&basis_for(ring, d + e, n).to_vector(&gf))
            .expect("ambient matches")
        {
            report.star_failures += 1;
        }

        let extra = s.range(1, bounds.n_max);
        let h = s.sym(ring.hilbert(d), d, extra, 3);
        let hf = dot_coinv(&h, &f).expect("same inner degree");
        report.dot_probes += 1;
        let target = ideal.piece(d, n + extra);
        if !target
            .contains(&basis_for(ring, d, n + extra).to_vector(&hf))
            .expect("ambient matches")
        {
            report.dot_failures += 1;
        }
    }
    report
}

/// Closed-form `dim I_B(1)_{d,n}` for a polynomial ring in `v` variables,
/// from surjectivity of `Sym^n(B_d) → B_{dn}`.
pub fn free_veronese_dim(v: usize, d: u32, n: usize) -> usize {
    use crate::polyring::{binomial, sym_dim};
    let k = sym_dim(v, d);
    binomial(k + n - 1, n) - sym_dim(v, d * n as u32)
}
