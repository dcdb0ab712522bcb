use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{parse_poly, sym_monomials, ExponentVector, Polynomial};
use crate::error::{Error, Result};
use crate::exactlin::{normalize_row, Echelon, Rational, SparseRow, Subspace};

/// On-disk ring description: `{"vars": 3, "relations": ["x0*x2 - x1^2"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: usize,
    #[serde(default)]
    pub relations: Vec<String>,
}

/// Everything known about one graded piece `B_d`.
#[derive(Debug)]
pub struct DegreePiece {
    pub degree: u32,
    /// Monomials of `Sym^d`, descending lex; these index the ideal's coordinates.
    pub monomials: Vec<ExponentVector>,
    pub index: HashMap<ExponentVector, usize>,
    /// `I_d` in monomial coordinates.
    pub ideal: Subspace,
    /// Monomial indices of the basis of `B_d` (the non-pivots of `rref(I_d)`).
    pub basis: Vec<usize>,
    /// Normal form of each monomial in basis coordinates.
    pub reduction: Vec<SparseRow>,
}

impl DegreePiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_monomial(&self, i: usize) -> &ExponentVector {
        &self.monomials[self.basis[i]]
    }
}

/// Products of basis elements `B_d x B_e -> B_{d+e}`, row-major in `(i, j)`.
#[derive(Debug)]
struct MulTable {
    right_dim: usize,
    entries: Vec<SparseRow>,
}

/// A standard graded ring `k[x0..x{r-1}] / I` with `I` homogeneous.
#[derive(Debug)]
pub struct GradedRing {
    nvars: usize,
    relations: Vec<Polynomial>,
    pieces: RwLock<HashMap<u32, Arc<DegreePiece>>>,
    products: RwLock<HashMap<(u32, u32), Arc<MulTable>>>,
}

impl GradedRing {
    /// The polynomial ring in `nvars` variables.
    pub fn free(nvars: usize) -> Self {
        Self::new(nvars, Vec::new()).expect("no relations to validate")
    }

    pub fn new(nvars: usize, relations: Vec<Polynomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::RingSpec("a ring needs at least one variable".into()));
        }
        let mut kept = Vec::with_capacity(relations.len());
        for rel in relations {
            if rel.nvars() != nvars {
                return Err(Error::RingSpec(format!(
                    "relation in {} variables for a ring with {nvars}",
                    rel.nvars()
                )));
            }
            if rel.is_zero() {
                continue;
            }
            if rel.homogeneous_degree().is_none() {
                return Err(Error::Inhomogeneous(rel.to_string()));
            }
            kept.push(rel);
        }
        Ok(Self {
            nvars,
            relations: kept,
            pieces: RwLock::default(),
            products: RwLock::default(),
        })
    }

    pub fn from_spec(spec: &RingSpec) -> Result<Self> {
        let rels = spec
            .relations
            .iter()
            .map(|s| parse_poly(s, spec.vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec.vars, rels)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: RingSpec =
            serde_json::from_str(text).map_err(|e| Error::RingSpec(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec {
            vars: self.nvars,
            relations: self.relations.iter().map(|p| p.to_string()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    /// The graded piece `B_d`, computed once and cached.
    pub fn piece(&self, d: u32) -> Arc<DegreePiece> {
        if let Some(p) = self.pieces.read().unwrap().get(&d) {
            return Arc::clone(p);
        }
        let computed = Arc::new(self.compute_piece(d));
        let mut w = self.pieces.write().unwrap();
        Arc::clone(w.entry(d).or_insert(computed))
    }

    fn compute_piece(&self, d: u32) -> DegreePiece {
        let monomials = sym_monomials(self.nvars, d);
        let index: HashMap<ExponentVector, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut ech = Echelon::new(monomials.len());
        for rel in &self.relations {
            let e = rel.homogeneous_degree().expect("validated on construction");
            if e > d {
                continue;
            }
            for m in sym_monomials(self.nvars, d - e) {
                let row: Vec<(usize, Rational)> = rel
                    .mul_monomial(&m)
                    .terms()
                    .iter()
                    .map(|(exp, c)| (index[exp], c.clone()))
                    .collect();
                ech.insert(&normalize_row(row)).expect("row within ambient");
            }
        }
        let ideal = Subspace::from_echelon(ech);
        let basis = ideal.non_pivots();
        let reduction = ideal.quotient_table();
        DegreePiece {
            degree: d,
            monomials,
            index,
            ideal,
            basis,
            reduction,
        }
    }

    /// `I_d` as a subspace of `Sym^d` in [`sym_monomials`] coordinates.
    pub fn ideal_piece(&self, d: u32) -> Subspace {
        self.piece(d).ideal.clone()
    }

    pub fn graded_basis(&self, d: u32) -> Vec<ExponentVector> {
        let p = self.piece(d);
        p.basis.iter().map(|&i| p.monomials[i].clone()).collect()
    }

    /// `dim B_d`.
    pub fn hilbert(&self, d: u32) -> usize {
        self.piece(d).dim()
    }

    /// Normal form of a homogeneous degree-`d` polynomial in `B_d` coordinates.
    pub fn reduce(&self, d: u32, p: &Polynomial) -> Result<SparseRow> {
        let piece = self.piece(d);
        let mut out = Vec::new();
        for (exp, c) in p.terms() {
            if exp.degree() != d || exp.len() != self.nvars {
                return Err(Error::Inhomogeneous(p.to_string()));
            }
            out.extend(
                piece.reduction[piece.index[exp]]
                    .iter()
                    .map(|(j, v)| (*j, v * c)),
            );
        }
        Ok(normalize_row(out))
    }

    /// The polynomial represented by `B_d` coordinates.
    pub fn lift(&self, d: u32, coords: &[(usize, Rational)]) -> Polynomial {
        let piece = self.piece(d);
        let mut p = Polynomial::zero(self.nvars);
        for (i, c) in coords {
            p.add_term(piece.basis_monomial(*i).clone(), c.clone());
        }
        p
    }

    fn table(&self, d: u32, e: u32) -> Arc<MulTable> {
        if let Some(t) = self.products.read().unwrap().get(&(d, e)) {
            return Arc::clone(t);
        }
        let (left, right, target) = (self.piece(d), self.piece(e), self.piece(d + e));
        let mut entries = Vec::with_capacity(left.dim() * right.dim());
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                let m = left.basis_monomial(i).mul(right.basis_monomial(j));
                entries.push(target.reduction[target.index[&m]].clone());
            }
        }
        let t = Arc::new(MulTable {
            right_dim: right.dim(),
            entries,
        });
        let mut w = self.products.write().unwrap();
        Arc::clone(w.entry((d, e)).or_insert(t))
    }

    /// Product of the `i`-th basis element of `B_d` and the `j`-th of `B_e`.
    pub fn basis_product(&self, d: u32, i: usize, e: u32, j: usize) -> SparseRow {
        let t = self.table(d, e);
        t.entries[i * t.right_dim + j].clone()
    }

    /// Product of two elements given in graded-basis coordinates.
    pub fn multiply(
        &self,
        d: u32,
        a: &[(usize, Rational)],
        e: u32,
        b: &[(usize, Rational)],
    ) -> SparseRow {
        let t = self.table(d, e);
        let mut out = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                out.extend(
                    t.entries[i * t.right_dim + j]
                        .iter()
                        .map(|(k, v)| (*k, v * &xy)),
                );
            }
        }
        normalize_row(out)
    }

    /// The unit of `B_0`.
    pub fn one(&self) -> SparseRow {
        vec![(0, Rational::one())]
    }

    /// Product of the listed degree-`d` basis elements, in `B_{d * letters.len()}`.
    pub fn product_of_letters(&self, d: u32, letters: &[u32]) -> SparseRow {
        let mut acc = self.one();
        for (k, &l) in letters.iter().enumerate() {
            acc = self.multiply(d * k as u32, &acc, d, &[(l as usize, Rational::one())]);
            if acc.iter().all(|(_, v)| v.is_zero()) {
                return Vec::new();
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::polyring::{binomial, sym_dim};
    use proptest::prelude::*;

    fn conic_cone() -> GradedRing {
        GradedRing::from_json(r#"{"vars": 3, "relations": ["x0*x2 - x1^2"]}"#).unwrap()
    }

    fn twisted_cubic_cone() -> GradedRing {
        GradedRing::from_json(
            r#"{"vars": 4, "relations": ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]}"#,
        )
        .unwrap()
    }

    #[test]
    fn ideal_piece_dimensions() {
        assert!(GradedRing::free(3).ideal_piece(4).is_zero());
        let r = conic_cone();
        assert_eq!(r.ideal_piece(2).dim(), 1);
        assert_eq!(r.ideal_piece(3).dim(), 3);
        assert_eq!(r.ideal_piece(1).dim(), 0);
    }

    #[test]
    fn graded_basis_sizes() {
        assert_eq!(GradedRing::free(2).graded_basis(3).len(), 4);
        let r = conic_cone();
        assert_eq!(r.graded_basis(2).len(), 5);
        assert_eq!(r.graded_basis(3).len(), 7);
        assert_eq!(r.hilbert(0), 1);
        // xz is the pivot, so it leaves the basis
        assert!(!r.graded_basis(2).contains(&ExponentVector(vec![1, 0, 1])));
    }

    #[test]
    fn free_ring_dimensions_are_binomial() {
        for v in 1..4 {
            let r = GradedRing::free(v);
            for d in 0..7 {
                assert_eq!(r.hilbert(d), sym_dim(v, d));
                assert_eq!(sym_dim(v, d), binomial(d as usize + v - 1, v - 1));
            }
        }
    }

    #[test]
    fn conic_cone_hilbert_function() {
        // k[x,y,z]/(xz - y^2) is the coordinate ring of the conic: 2d + 1
        let r = conic_cone();
        for d in 0..=6u32 {
            assert_eq!(r.hilbert(d), 2 * d as usize + 1, "d = {d}");
        }
    }

    #[test]
    fn twisted_cubic_hilbert_function() {
        let r = twisted_cubic_cone();
        for d in 0..=6u32 {
            assert_eq!(r.hilbert(d), 3 * d as usize + 1, "d = {d}");
        }
    }

    #[test]
    fn multiplication_examples() {
        let free = GradedRing::free(2);
        // x * y = xy; basis of B_1 is [x, y], of B_2 is [x^2, xy, y^2]
        assert_eq!(free.basis_product(1, 0, 1, 1), vec![(1, rat(1))]);
        let unit = free.one();
        let a = vec![(0, rat(2)), (2, rat(-1))];
        assert_eq!(free.multiply(0, &unit, 2, &a), a);

        let r = conic_cone();
        let x = r.reduce(1, &parse_poly("x0", 3).unwrap()).unwrap();
        let z = r.reduce(1, &parse_poly("x2", 3).unwrap()).unwrap();
        let xz = r.multiply(1, &x, 1, &z);
        let y2 = r.reduce(2, &parse_poly("x1^2", 3).unwrap()).unwrap();
        assert_eq!(xz, y2);
        assert_eq!(r.lift(2, &xz).to_string(), "x1^2");
    }

    #[test]
    fn rejects_inhomogeneous_relations() {
        let err = GradedRing::from_json(r#"{"vars": 2, "relations": ["x0^2 - x1"]}"#).unwrap_err();
        assert!(matches!(err, Error::Inhomogeneous(_)));
        assert!(matches!(
            GradedRing::from_json(r#"{"vars": 0}"#),
            Err(Error::RingSpec(_))
        ));
        assert!(matches!(
            GradedRing::from_json(r#"{"vars": 2, "relations": ["x2"]}"#),
            Err(Error::VariableOutOfRange { .. })
        ));
        assert!(matches!(
            GradedRing::from_json("{"),
            Err(Error::RingSpec(_))
        ));
    }

    #[test]
    fn spec_round_trip() {
        let r = conic_cone();
        let again = GradedRing::from_spec(&r.spec()).unwrap();
        assert_eq!(again.spec(), r.spec());
    }

    fn random_elem(dim: usize, coeffs: &[i64]) -> SparseRow {
        normalize_row(
            coeffs
                .iter()
                .take(dim)
                .enumerate()
                .map(|(i, &c)| (i, rat(c)))
                .collect(),
        )
    }

    proptest! {
        #[test]
        fn reduction_is_a_projection(coeffs in proptest::collection::vec(-4i64..5, 10)) {
            let r = conic_cone();
            let piece = r.piece(3);
            let mut p = Polynomial::zero(3);
            for (m, c) in piece.monomials.iter().zip(&coeffs) {
                p.add_term(m.clone(), rat(*c));
            }
            let once = r.reduce(3, &p).unwrap();
            let twice = r.reduce(3, &r.lift(3, &once)).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn multiplication_commutes_and_associates(
            a in proptest::collection::vec(-3i64..4, 5),
            b in proptest::collection::vec(-3i64..4, 5),
            c in proptest::collection::vec(-3i64..4, 3),
        ) {
            let r = conic_cone();
            let (a, b, c) = (random_elem(5, &a), random_elem(5, &b), random_elem(3, &c));
            prop_assert_eq!(r.multiply(2, &a, 2, &b), r.multiply(2, &b, 2, &a));
            let ab_c = r.multiply(4, &r.multiply(2, &a, 2, &b), 1, &c);
            let a_bc = r.multiply(2, &a, 3, &r.multiply(2, &b, 1, &c));
            prop_assert_eq!(ab_c, a_bc);
        }
    }
}
