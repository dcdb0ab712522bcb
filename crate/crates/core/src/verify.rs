//! Seeded randomized checks of the algebraic identities.
//!
//! Each suite draws its inputs from its own [`Sampler`] seeded from the run
//! seed and the suite position, so suites are reproducible independently.
//! A run with `trials = 0` performs no checks and passes.

use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::error::Result;
use crate::exactlin::rat;
use crate::hopf::{
    delta_coinv, delta_invariant, delta_then_left, delta_then_right, dot_coinv, dot_invariant,
    frak_s, frak_s_inv, frak_s_pair, pair_contract_dot, pair_dot_invariant, pair_of,
    pair_star_invariant, pi, InvariantElement, SymElement,
};
use crate::polyring::{ExponentVector, GradedRing};
use crate::random::Sampler;
use crate::secant::{di_ideal_closure_check, BigradedSubspace, ClosureBounds, SecantIdeals};
use crate::shuffle::{
    higman_leq, initial_term, monomial_membership_oracle, rewrite_star_shuffle, shuffle_product,
    star_product, word_leq_order, Split, TensorElement, Word,
};

/// A star product on `S(B)`; swapped out to test that the suites can fail.
pub type StarFn = fn(&GradedRing, &TensorElement, &TensorElement) -> Result<TensorElement>;

#[derive(Clone)]
pub struct VerifyConfig {
    pub ring: Arc<GradedRing>,
    pub seed: u64,
    pub trials: usize,
    pub d_max: u32,
    pub n_max: usize,
    pub star: StarFn,
}

impl VerifyConfig {
    pub fn new(ring: Arc<GradedRing>, seed: u64, trials: usize) -> Self {
        Self {
            ring,
            seed,
            trials,
            d_max: 3,
            n_max: 3,
            star: star_product,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: usize,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            checks: 0,
            failures: 0,
        }
    }

    fn record(&mut self, outcome: Result<bool>) {
        self.checks += 1;
        if !matches!(outcome, Ok(true)) {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Suite = fn(&VerifyConfig, &mut Sampler) -> SuiteReport;

const SUITES: &[(&str, Suite)] = &[
    ("shuffle-commutativity", shuffle_commutativity),
    ("shuffle-associativity", shuffle_associativity),
    ("star-over-shuffle-rewrite", star_shuffle_rewrite),
    ("symmetrizer-star-compatibility", symmetrizer_star),
    ("symmetrizer-shuffle-binomial", symmetrizer_shuffle),
    ("coproduct-multiplicative-dot", coproduct_dot),
    ("coproduct-multiplicative-star", coproduct_star),
    ("star-distributes-over-dot", star_distributes_over_dot),
    ("symmetrization-intertwines-dot", symmetrization_dot),
    (
        "symmetrization-intertwines-coproduct",
        symmetrization_coproduct,
    ),
    ("symmetrization-round-trip", symmetrization_round_trip),
    ("coproduct-coassociativity", coassociativity),
    ("monomial-action-preserves-order", order_preservation),
    ("initial-term-commutes-with-monomials", initial_term_action),
    (
        "embedding-order-matches-membership",
        embedding_vs_membership,
    ),
    ("join-laws", join_laws),
    ("di-ideal-closure", di_ideal_closure),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(name: &str, config: &VerifyConfig) -> Option<SuiteReport> {
    let pos = SUITES.iter().position(|(n, _)| *n == name)?;
    Some(run_at(pos, config))
}

fn run_at(pos: usize, config: &VerifyConfig) -> SuiteReport {
    let (name, suite) = SUITES[pos];
    if config.trials == 0 {
        return SuiteReport::new(name);
    }
    let mut s = Sampler::new(config.seed.wrapping_add(pos as u64));
    suite(config, &mut s)
}

pub fn run_all(config: &VerifyConfig) -> Vec<SuiteReport> {
    (0..SUITES.len()).map(|pos| run_at(pos, config)).collect()
}

const TERMS: usize = 3;

fn degree(c: &VerifyConfig, s: &mut Sampler) -> u32 {
    s.range(1, c.d_max as usize) as u32
}

fn letters(c: &VerifyConfig, d: u32) -> usize {
    c.ring.hilbert(d)
}

fn tensor(c: &VerifyConfig, s: &mut Sampler, d: u32, n: usize) -> TensorElement {
    match letters(c, d) {
        0 => TensorElement::zero(d, n),
        k => s.tensor(k, d, n, TERMS),
    }
}

fn invariant(c: &VerifyConfig, s: &mut Sampler, d: u32, n: usize) -> InvariantElement {
    match letters(c, d) {
        0 => pi(&TensorElement::zero(d, n)),
        k => s.invariant(k, d, n, TERMS),
    }
}

fn sym(c: &VerifyConfig, s: &mut Sampler, d: u32, n: usize) -> SymElement {
    match letters(c, d) {
        0 => SymElement::zero(d, n),
        k => s.sym(k, d, n, TERMS),
    }
}

/// Outer degrees `(n, m)` with `n + m <= n_max`.
fn split_sizes(c: &VerifyConfig, s: &mut Sampler) -> (usize, usize) {
    let total = s.range(0, c.n_max);
    let n = s.range(0, total);
    (n, total - n)
}

fn random_split(s: &mut Sampler, n: usize, m: usize) -> Split {
    let all = Split::all(n, m);
    s.pick(&all).expect("at least one split").clone()
}

fn shuffle_commutativity(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("shuffle-commutativity");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let (n, m) = split_sizes(c, s);
        let (f, g) = (tensor(c, s, d, n), tensor(c, s, d, m));
        let sigma = random_split(s, n, m);
        r.record((|| {
            Ok(shuffle_product(&f, &g, &sigma)? == shuffle_product(&g, &f, &sigma.swap())?)
        })());
    }
    r
}

fn shuffle_associativity(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("shuffle-associativity");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let total = s.range(0, c.n_max);
        // label each position 0, 1 or 2 for the factor it belongs to
        let labels: Vec<usize> = (0..total).map(|_| s.range(0, 2)).collect();
        let sizes: Vec<usize> = (0..3)
            .map(|k| labels.iter().filter(|&&l| l == k).count())
            .collect();
        let (f, g, h) = (
            tensor(c, s, d, sizes[0]),
            tensor(c, s, d, sizes[1]),
            tensor(c, s, d, sizes[2]),
        );
        let relative = |keep: &dyn Fn(usize) -> bool, pick: usize| -> Vec<usize> {
            labels
                .iter()
                .filter(|&&l| keep(l))
                .positions(|&l| l == pick)
                .collect()
        };
        let outcome = (|| {
            let fg = Split::new(sizes[0] + sizes[1], relative(&|l| l < 2, 0))?;
            let fg_h = Split::new(total, labels.iter().positions(|&l| l < 2).collect())?;
            let gh = Split::new(sizes[1] + sizes[2], relative(&|l| l > 0, 1))?;
            let f_gh = Split::new(total, labels.iter().positions(|&l| l == 0).collect())?;
            let left = shuffle_product(&shuffle_product(&f, &g, &fg)?, &h, &fg_h)?;
            let right = shuffle_product(&f, &shuffle_product(&g, &h, &gh)?, &f_gh)?;
            Ok(left == right)
        })();
        r.record(outcome);
    }
    r
}

fn star_shuffle_rewrite(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("star-over-shuffle-rewrite");
    for _ in 0..c.trials {
        let (d, e) = (degree(c, s), degree(c, s));
        let (m, n) = split_sizes(c, s);
        let a = tensor(c, s, e, m + n);
        let b = tensor(c, s, d, m);
        let f = tensor(c, s, d, n);
        let sigma = random_split(s, m, n);
        let outcome = (|| {
            let left = (c.star)(&c.ring, &a, &shuffle_product(&b, &f, &sigma)?)?;
            let mut right = TensorElement::zero(d + e, m + n);
            for (h, g) in rewrite_star_shuffle(&c.ring, &a, &b, &f, &sigma)? {
                right.add_assign(&shuffle_product(&h, &(c.star)(&c.ring, &g, &f)?, &sigma)?);
            }
            Ok(left == right)
        })();
        r.record(outcome);
    }
    r
}

fn symmetrizer_star(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("symmetrizer-star-compatibility");
    for _ in 0..c.trials {
        let (d, e) = (degree(c, s), degree(c, s));
        let n = s.range(0, c.n_max);
        let g = tensor(c, s, e, n);
        let f = invariant(c, s, d, n);
        let outcome = (|| {
            let left = pi(&(c.star)(&c.ring, &g, f.as_tensor())?);
            let right = (c.star)(&c.ring, pi(&g).as_tensor(), f.as_tensor())?;
            Ok(left.as_tensor() == &right)
        })();
        r.record(outcome);
    }
    r
}

fn symmetrizer_shuffle(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("symmetrizer-shuffle-binomial");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let (n, m) = split_sizes(c, s);
        let (f, g) = (tensor(c, s, d, n), tensor(c, s, d, m));
        let sigma = random_split(s, n, m);
        let outcome = (|| {
            let binom = rat(crate::polyring::binomial(n + m, n) as i64);
            let left = pi(&shuffle_product(&f, &g, &sigma)?).scale(&binom);
            let right = dot_invariant(&pi(&f), &pi(&g))?;
            Ok(left == right)
        })();
        r.record(outcome);
    }
    r
}

fn coproduct_dot(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("coproduct-multiplicative-dot");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let (n, m) = split_sizes(c, s);
        let (y, v) = (invariant(c, s, d, n), invariant(c, s, d, m));
        let outcome = (|| {
            let left = delta_invariant(&dot_invariant(&y, &v)?);
            let right = pair_dot_invariant(&delta_invariant(&y), &delta_invariant(&v))?;
            Ok(left == right)
        })();
        r.record(outcome);
    }
    r
}

fn coproduct_star(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("coproduct-multiplicative-star");
    for _ in 0..c.trials {
        let (d, e) = (degree(c, s), degree(c, s));
        let n = s.range(0, c.n_max);
        let (x, v) = (invariant(c, s, d, n), invariant(c, s, e, n));
        let outcome = (|| {
            let xv = InvariantElement::new((c.star)(&c.ring, x.as_tensor(), v.as_tensor())?)?;
            let right = pair_star_invariant(&c.ring, &delta_invariant(&x), &delta_invariant(&v))?;
            Ok(delta_invariant(&xv) == right)
        })();
        r.record(outcome);
    }
    r
}

fn star_distributes_over_dot(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("star-distributes-over-dot");
    for _ in 0..c.trials {
        let (d, e) = (degree(c, s), degree(c, s));
        let (m, n) = split_sizes(c, s);
        let a = invariant(c, s, e, m + n);
        let (b, f) = (invariant(c, s, d, m), invariant(c, s, d, n));
        let outcome = (|| {
            let left = (c.star)(&c.ring, a.as_tensor(), dot_invariant(&b, &f)?.as_tensor())?;
            let right = pair_contract_dot(&pair_star_invariant(
                &c.ring,
                &delta_invariant(&a),
                &pair_of(&b, &f)?,
            )?)?;
            Ok(left == right)
        })();
        r.record(outcome);
    }
    r
}

fn symmetrization_dot(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("symmetrization-intertwines-dot");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let (n, m) = split_sizes(c, s);
        let (f, g) = (sym(c, s, d, n), sym(c, s, d, m));
        r.record((|| {
            Ok(frak_s(&dot_coinv(&f, &g)?) == dot_invariant(&frak_s(&f), &frak_s(&g))?)
        })());
    }
    r
}

fn symmetrization_coproduct(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("symmetrization-intertwines-coproduct");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let n = s.range(0, c.n_max);
        let f = sym(c, s, d, n);
        r.record(Ok(
            delta_invariant(&frak_s(&f)) == frak_s_pair(&delta_coinv(&f))
        ));
    }
    r
}

fn symmetrization_round_trip(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("symmetrization-round-trip");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let n = s.range(0, c.n_max);
        let f = sym(c, s, d, n);
        let x = invariant(c, s, d, n);
        r.record(Ok(
            frak_s_inv(&frak_s(&f)) == f && frak_s(&frak_s_inv(&x)) == x
        ));
    }
    r
}

fn coassociativity(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("coproduct-coassociativity");
    for _ in 0..c.trials {
        let d = degree(c, s);
        let n = s.range(0, c.n_max);
        let delta = delta_coinv(&sym(c, s, d, n));
        r.record(Ok(delta_then_left(&delta) == delta_then_right(&delta)));
    }
    r
}

/// Monomial actions `w ↦ m ·_σ (n * w)` on a polynomial ring with the configured variable count.
fn monomial_action(
    ring: &GradedRing,
    m: &TensorElement,
    n: &TensorElement,
    sigma: &Split,
    w: &TensorElement,
) -> Result<TensorElement> {
    shuffle_product(m, &star_product(ring, n, w)?, sigma)
}

struct ActionInputs {
    ring: GradedRing,
    m: TensorElement,
    n: TensorElement,
    sigma: Split,
    d: u32,
    len: usize,
}

fn action_inputs(c: &VerifyConfig, s: &mut Sampler) -> ActionInputs {
    let ring = GradedRing::free(c.ring.nvars());
    let (d, e) = (degree(c, s), degree(c, s));
    let (lm, len) = split_sizes(c, s);
    let m = s.monomial(ring.hilbert(d + e), d + e, lm);
    let n = s.monomial(ring.hilbert(e), e, len);
    let sigma = random_split(s, lm, len);
    ActionInputs {
        ring,
        m,
        n,
        sigma,
        d,
        len,
    }
}

fn order_preservation(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("monomial-action-preserves-order");
    for _ in 0..c.trials {
        let a = action_inputs(c, s);
        let k = a.ring.hilbert(a.d);
        let (w1, w2) = (s.word(k, a.len), s.word(k, a.len));
        let (lo, hi) = if word_leq_order(&w1, &w2).unwrap() {
            (w1, w2)
        } else {
            (w2, w1)
        };
        let outcome = (|| {
            let act = |w: Word| {
                monomial_action(
                    &a.ring,
                    &a.m,
                    &a.n,
                    &a.sigma,
                    &TensorElement::monomial(a.d, w, rat(1)),
                )
            };
            let (lo, hi) = (act(lo)?, act(hi)?);
            word_leq_order(&initial_term(&lo)?.0, &initial_term(&hi)?.0)
        })();
        r.record(outcome);
    }
    r
}

fn initial_term_action(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("initial-term-commutes-with-monomials");
    for _ in 0..c.trials {
        let a = action_inputs(c, s);
        let f = s.tensor(a.ring.hilbert(a.d), a.d, a.len, TERMS);
        let outcome = (|| {
            let (w, coeff) = initial_term(&f)?;
            let lead = TensorElement::monomial(a.d, w, coeff);
            let acted = monomial_action(&a.ring, &a.m, &a.n, &a.sigma, &f)?;
            let expected = monomial_action(&a.ring, &a.m, &a.n, &a.sigma, &lead)?;
            Ok(initial_term(&acted)? == initial_term(&expected)?)
        })();
        r.record(outcome);
    }
    r
}

/// Words over two variables with exponents at most `max_exp`, all letters of
/// one degree, of length at most `max_len`.
pub fn small_exponent_words(max_exp: u32, max_len: usize) -> Vec<Vec<ExponentVector>> {
    let letters: Vec<ExponentVector> = (0..=max_exp)
        .cartesian_product(0..=max_exp)
        .map(|(a, b)| ExponentVector(vec![a, b]))
        .collect();
    let mut out = vec![Vec::new()];
    for len in 1..=max_len {
        for deg in 0..=2 * max_exp {
            let same: Vec<&ExponentVector> = letters.iter().filter(|l| l.degree() == deg).collect();
            for w in (0..len).map(|_| same.iter()).multi_cartesian_product() {
                out.push(w.into_iter().map(|l| (*l).clone()).collect());
            }
        }
    }
    out
}

fn embedding_vs_membership(_: &VerifyConfig, _: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("embedding-order-matches-membership");
    let words = small_exponent_words(2, 3);
    for m in &words {
        for m2 in &words {
            r.record(monomial_membership_oracle(m, m2).map(|member| member == higman_leq(m, m2)));
        }
    }
    r
}

fn join_laws(c: &VerifyConfig, _: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("join-laws");
    let ring = Arc::clone(&c.ring);
    let ideals = SecantIdeals::new(Arc::clone(&ring));
    let (v, s2) = (ideals.ideal(1), ideals.ideal(2));
    let zero = BigradedSubspace::zero(Arc::clone(&ring));
    let aug = BigradedSubspace::augmentation(Arc::clone(&ring));
    let with_zero = BigradedSubspace::join(&v, &zero);
    let with_aug = BigradedSubspace::join(&v, &aug);
    let swapped = BigradedSubspace::join(&s2, &v);
    let vv = BigradedSubspace::join(&v, &v);
    let left_nested = BigradedSubspace::join(&vv, &s2);
    let right_nested = BigradedSubspace::join(&v, &BigradedSubspace::join(&v, &s2));
    for d in 1..=c.d_max {
        for n in 0..=c.n_max {
            r.record(Ok(with_zero.piece(d, n).is_zero()));
            r.record(Ok(with_aug.piece(d, n) == v.piece(d, n)));
            r.record(Ok(swapped.piece(d, n) == ideals.piece(3, d, n)));
            r.record(Ok(left_nested.piece(d, n) == right_nested.piece(d, n)));
        }
    }
    r
}

fn di_ideal_closure(c: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut r = SuiteReport::new("di-ideal-closure");
    let ideals = SecantIdeals::new(Arc::clone(&c.ring));
    let bounds = ClosureBounds {
        d_max: c.d_max,
        e_max: c.d_max,
        n_max: c.n_max,
    };
    for order in 1..=2 {
        let seed = s.range(0, usize::MAX >> 1) as u64;
        let report = di_ideal_closure_check(&ideals.ideal(order), bounds, c.trials, seed);
        r.checks += report.star_probes + report.dot_probes;
        r.failures += report.star_failures + report.dot_failures;
    }
    r
}
