//! Exact linear algebra over the rationals.
//!
//! Matrices are stored as sorted sparse rows. Row reduction always produces
//! the canonical reduced row echelon form, so two spanning sets of the same
//! space reduce to identical matrices; subspace equality is matrix equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A sparse vector: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sorts entries, merges duplicate columns and drops zeros.
pub fn normalize_row(mut row: Vec<(usize, Rational)>) -> SparseRow {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn check_row(row: &[(usize, Rational)], ncols: usize) -> Result<()> {
    if let Some((c, _)) = row.last() {
        if *c >= ncols {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                got: c + 1,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl RatMatrix {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Builds a matrix from arbitrary `(column, value)` lists; entries are normalized.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<(usize, Rational)>>) -> Result<Self> {
        let mut m = Self::new(ncols);
        for row in rows {
            m.push_row(row)?;
        }
        Ok(m)
    }

    pub fn from_dense(ncols: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::new(ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            m.push_row(row.iter().cloned().enumerate().collect())?;
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_dense(ncols, &dense).expect("ragged integer matrix")
    }

    pub fn identity(n: usize) -> Self {
        Self {
            ncols: n,
            rows: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn push_row(&mut self, row: Vec<(usize, Rational)>) -> Result<()> {
        let row = normalize_row(row);
        check_row(&row, self.ncols)?;
        self.rows.push(row);
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<SparseRow> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.rows[r]
            .binary_search_by_key(&c, |(col, _)| *col)
            .map(|i| self.rows[r][i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|row| {
                let mut d = vec![Rational::zero(); self.ncols];
                for (c, v) in row {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    /// `self * v` for a sparse column vector `v`.
    pub fn apply(&self, v: &[(usize, Rational)]) -> Vec<Rational> {
        self.rows.iter().map(|row| sparse_dot(row, v)).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut cols: Vec<SparseRow> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                cols[*c].push((r, v.clone()));
            }
        }
        RatMatrix {
            ncols: self.rows.len(),
            rows: cols,
        }
    }
}

pub fn sparse_dot(a: &[(usize, Rational)], b: &[(usize, Rational)]) -> Rational {
    let (mut i, mut j) = (0, 0);
    let mut acc = Rational::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Incremental row echelon form. Every stored row has a leading 1 at its pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn to_dense(&self, row: &[(usize, Rational)]) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.ncols];
        for (c, v) in row {
            acc[*c] = v.clone();
        }
        acc
    }

    fn reduce_dense(&self, acc: &mut [Rational]) {
        for c in 0..self.ncols {
            if acc[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = acc[c].clone();
                for (j, v) in &self.rows[r] {
                    acc[*j] -= &f * v;
                }
            }
        }
    }

    /// The remainder of `row` after eliminating every pivot column.
    pub fn reduce(&self, row: &[(usize, Rational)]) -> Result<SparseRow> {
        check_row(row, self.ncols)?;
        let mut acc = self.to_dense(row);
        self.reduce_dense(&mut acc);
        Ok(acc
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect())
    }

    pub fn contains(&self, row: &[(usize, Rational)]) -> Result<bool> {
        Ok(self.reduce(row)?.is_empty())
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> Result<bool> {
        let rem = self.reduce(row)?;
        let Some((pivot, lead)) = rem.first().cloned() else {
            return Ok(false);
        };
        let inv = lead.recip();
        let normalized: SparseRow = rem.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(normalized);
        Ok(true)
    }

    /// Back-substitutes into reduced row echelon form; rows sorted by pivot.
    pub fn into_rref(self) -> (RatMatrix, Vec<usize>) {
        let ncols = self.ncols;
        let order: Vec<usize> = self.pivot_row.iter().filter_map(|r| *r).collect();
        let pivots: Vec<usize> = (0..ncols)
            .filter(|c| self.pivot_row[*c].is_some())
            .collect();
        let mut reduced: Vec<Option<SparseRow>> = vec![None; ncols];
        for (&p, &r) in pivots.iter().zip(order.iter()).rev() {
            let mut acc = vec![Rational::zero(); ncols];
            for (c, v) in &self.rows[r] {
                acc[*c] = v.clone();
            }
            for c in (p + 1)..ncols {
                if acc[c].is_zero() {
                    continue;
                }
                if let Some(prow) = &reduced[c] {
                    let f = acc[c].clone();
                    for (j, v) in prow {
                        acc[*j] -= &f * v;
                    }
                }
            }
            reduced[p] = Some(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        let rows = pivots.iter().map(|p| reduced[*p].take().unwrap()).collect();
        (RatMatrix { ncols, rows }, pivots)
    }
}

/// Reduced row echelon form with zero rows dropped, plus the pivot columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut ech = Echelon::new(m.ncols);
    for row in &m.rows {
        ech.insert(row).expect("rows are in range by construction");
    }
    ech.into_rref()
}

pub fn rank(m: &RatMatrix) -> usize {
    let mut ech = Echelon::new(m.ncols);
    for row in &m.rows {
        ech.insert(row).expect("rows are in range by construction");
    }
    ech.rank()
}

fn kernel_from_rref(rref_m: &RatMatrix, pivots: &[usize]) -> RatMatrix {
    let ncols = rref_m.ncols;
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut vecs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); ncols];
    for (row, &p) in rref_m.rows.iter().zip(pivots) {
        for (c, v) in row {
            if *c != p {
                vecs[*c].push((p, -v.clone()));
            }
        }
    }
    let rows = (0..ncols)
        .filter(|c| !is_pivot[*c])
        .map(|f| {
            let mut v = std::mem::take(&mut vecs[f]);
            v.push((f, Rational::one()));
            v.sort_by_key(|(c, _)| *c);
            v
        })
        .collect();
    RatMatrix { ncols, rows }
}

/// Basis of `{v : m v = 0}`, one row per free column.
pub fn kernel_basis(m: &RatMatrix) -> RatMatrix {
    let (r, pivots) = rref(m);
    kernel_from_rref(&r, &pivots)
}

/// Whether `v` lies in the row space of `space`, which must already be in rref.
pub fn subspace_contains(space: &RatMatrix, v: &[(usize, Rational)]) -> Result<bool> {
    check_row(v, space.ncols)?;
    let mut acc = vec![Rational::zero(); space.ncols];
    for (c, x) in v {
        acc[*c] = x.clone();
    }
    for row in &space.rows {
        let Some((p, lead)) = row.first() else {
            continue;
        };
        if acc[*p].is_zero() {
            continue;
        }
        let f = &acc[*p] / lead;
        for (j, x) in row {
            acc[*j] -= &f * x;
        }
    }
    Ok(acc.iter().all(Zero::is_zero))
}

/// A linear subspace of `Q^ambient`, held as its canonical rref basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: RatMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            basis: RatMatrix::new(ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            basis: RatMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(m: &RatMatrix) -> Self {
        let (basis, pivots) = rref(m);
        Self { basis, pivots }
    }

    pub fn from_echelon(e: Echelon) -> Self {
        let (basis, pivots) = e.into_rref();
        Self { basis, pivots }
    }

    pub fn kernel_of(m: &RatMatrix) -> Self {
        Self::span(&kernel_basis(m))
    }

    pub fn ambient(&self) -> usize {
        self.basis.ncols
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.nrows() == 0
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|c| !is_pivot[*c]).collect()
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> Result<bool> {
        subspace_contains(&self.basis, v)
    }

    pub fn contains_all(&self, other: &Subspace) -> Result<bool> {
        if other.ambient() != self.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                got: other.ambient(),
            });
        }
        for row in other.basis.rows() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient() != self.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                got: other.ambient(),
            });
        }
        let mut e = Echelon::new(self.ambient());
        for row in self.basis.rows().iter().chain(other.basis.rows()) {
            e.insert(row)?;
        }
        Ok(Subspace::from_echelon(e))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum(other)?.dim())
    }

    /// Coordinates of the class of `e_col` in the quotient by this subspace,
    /// using the complement spanned by the non-pivot unit vectors.
    /// Indexing follows [`Subspace::non_pivots`].
    pub fn quotient_table(&self) -> Vec<SparseRow> {
        let n = self.ambient();
        let mut pos = vec![usize::MAX; n];
        for (i, c) in self.non_pivots().into_iter().enumerate() {
            pos[c] = i;
        }
        let mut table: Vec<SparseRow> = vec![Vec::new(); n];
        for c in 0..n {
            if pos[c] != usize::MAX {
                table[c] = vec![(pos[c], Rational::one())];
            }
        }
        for (row, &p) in self.basis.rows().iter().zip(&self.pivots) {
            table[p] = row
                .iter()
                .filter(|(c, _)| *c != p)
                .map(|(c, v)| (pos[*c], -v.clone()))
                .collect();
        }
        table
    }
}

/// Greatest absolute numerator; handy for reporting coefficient growth.
pub fn max_abs_numerator(m: &RatMatrix) -> BigInt {
    m.rows()
        .iter()
        .flatten()
        .map(|(_, v)| v.numer().abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(m: &RatMatrix) -> Vec<Vec<Rational>> {
        m.to_dense()
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = RatMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let (r, p) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rank_one_drops_zero_rows() {
        let (r, p) = rref(&RatMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(dense(&r), vec![vec![rat(1), rat(2)]]);
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn hand_eliminated_rank_two() {
        let (r, p) = rref(&RatMatrix::from_i64(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 2]]));
        assert_eq!(p, vec![0, 1]);
        assert_eq!(
            dense(&r),
            vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)]]
        );
    }

    #[test]
    fn rref_normalizes_fractions() {
        let (r, _) = rref(&RatMatrix::from_i64(&[&[2, 3], &[4, 1]]));
        assert_eq!(r, RatMatrix::identity(2));
        let (r, _) = rref(&RatMatrix::from_i64(&[&[3, 1, 0]]));
        assert_eq!(r.get(0, 1), rat_frac(1, 3));
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(kernel_basis(&RatMatrix::identity(3)).nrows(), 0);
        let zero = RatMatrix::from_i64(&[&[0, 0, 0]]);
        assert_eq!(kernel_basis(&zero).nrows(), 3);
        let m = RatMatrix::from_i64(&[&[1, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.nrows(), 2);
        for row in k.rows() {
            assert!(m.apply(row).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn containment() {
        let s = Subspace::span(&RatMatrix::from_i64(&[&[1, 0]]));
        assert!(s.contains(&[]).unwrap());
        assert!(!s.contains(&[(1, rat(1))]).unwrap());
        let t = Subspace::span(&RatMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]));
        assert!(t.contains(&[(0, rat(1)), (2, rat(-1))]).unwrap());
        assert!(!t.contains(&[(0, rat(1))]).unwrap());
        assert!(matches!(
            t.contains(&[(5, rat(1))]),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 6
            })
        ));
        assert!(subspace_contains(t.basis(), &[(0, rat(2)), (1, rat(3)), (2, rat(1))]).unwrap());
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span(&RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]));
        let b = Subspace::span(&RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(a.sum(&b).unwrap().dim(), 3);
        assert_eq!(a.intersection_dim(&b).unwrap(), 1);
        assert!(a.contains_all(&Subspace::zero(3)).unwrap());
        assert!(Subspace::full(3).contains_all(&a).unwrap());
    }

    #[test]
    fn quotient_table_kills_subspace() {
        let s = Subspace::span(&RatMatrix::from_i64(&[&[1, -1, 0], &[0, 2, 1]]));
        let q = s.quotient_table();
        // the quotient map applied to each basis vector of s gives zero
        for row in s.basis().rows() {
            let mut img: Vec<(usize, Rational)> = Vec::new();
            for (c, v) in row {
                img.extend(q[*c].iter().map(|(i, x)| (*i, x * v)));
            }
            assert!(normalize_row(img).is_empty());
        }
        assert_eq!(s.non_pivots(), vec![2]);
    }

    fn arb_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r).prop_map(
                move |rows| {
                    let dense: Vec<Vec<Rational>> = rows
                        .iter()
                        .map(|r| r.iter().map(|&x| rat(x)).collect())
                        .collect();
                    RatMatrix::from_dense(c, &dense).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let (r1, p1) = rref(&m);
            let (r2, p2) = rref(&r1);
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.nrows(), m.ncols());
            for row in k.rows() {
                prop_assert!(m.apply(row).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn row_space_preserved(m in arb_matrix()) {
            let s = Subspace::span(&m);
            for row in m.rows() {
                prop_assert!(s.contains(row).unwrap());
            }
        }
    }
}
