//! Sparse exact linear algebra over `Q`.
//!
//! Ranks are computed by fraction-free integer elimination: each rational row
//! is scaled to a primitive integer row, and rows are reduced against a
//! semi-echelon form keyed by leading column. The elimination runs in `i64`
//! and restarts in `BigInt` if any intermediate value overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::polyring::Rational;

/// Sparse vector: strictly increasing column indices, nonzero values.
pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    /// Rows must already be sorted by column without zero entries.
    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| is_canonical(r, ncols)));
        SparseMatrix {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(nrows: usize, columns: Vec<SparseVec>) -> Self {
        SparseMatrix::from_rows(nrows, columns).transpose()
    }

    pub fn transpose(&self) -> Self {
        let mut out = vec![Vec::new(); self.ncols];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                out[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            rows: out,
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix::from_rows(ncols, rows)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| {
                let mut dense = vec![Rational::zero(); self.ncols];
                for (j, v) in r {
                    dense[*j] = v.clone();
                }
                dense
            })
            .collect()
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.rows[i][k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Stacks `other` below `self`; column counts must agree.
    pub fn vstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.ncols, "column mismatch in vstack");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        SparseMatrix::from_rows(self.ncols, rows)
    }

    /// Places `other` to the right of `self`; row counts must agree.
    pub fn hstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.nrows, other.nrows, "row mismatch in hstack");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, v)| (j + self.ncols, v.clone())));
                r
            })
            .collect();
        SparseMatrix::from_rows(self.ncols + other.ncols, rows)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in mul");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = std::collections::BTreeMap::<usize, Rational>::new();
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix::from_rows(other.ncols, rows)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let col = SparseMatrix::from_columns(self.ncols, vec![v.clone()]);
        self.mul(&col)
            .transpose()
            .rows
            .into_iter()
            .next()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.rows)
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }
}

fn is_canonical(row: &SparseVec, ncols: usize) -> bool {
    row.windows(2).all(|w| w[0].0 < w[1].0) && row.iter().all(|(j, v)| *j < ncols && !v.is_zero())
}

/// Rank of the span of the given rows.
pub fn rank_of_rows(rows: &[SparseVec]) -> usize {
    let int_rows: Vec<Vec<(usize, BigInt)>> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(integer_row)
        .collect();
    let small: Option<Vec<Vec<(usize, i64)>>> = int_rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|(j, v)| v.to_i64().filter(|&x| x != i64::MIN).map(|x| (*j, x)))
                .collect()
        })
        .collect();
    if let Some(small) = small {
        let mut ech = Echelon::<i64>::default();
        let mut ok = true;
        for r in small {
            if ech.insert(r).is_none() {
                ok = false;
                break;
            }
        }
        if ok {
            return ech.rank();
        }
    }
    let mut ech = Echelon::<BigInt>::default();
    for r in int_rows {
        ech.insert(r).expect("BigInt elimination cannot overflow");
    }
    ech.rank()
}

/// Scales a rational row to a primitive integer row with the same span.
fn integer_row(row: &SparseVec) -> Vec<(usize, BigInt)> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: Vec<(usize, BigInt)> = row
        .iter()
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    ints.into_iter().map(|(j, v)| (j, v / &g)).collect()
}

/// Integer scalars usable by the fraction-free echelon. Operations return
/// `None` on overflow.
pub(crate) trait EchelonInt: Clone + PartialEq + Sized {
    fn int_zero() -> Self;
    fn int_is_zero(&self) -> bool;
    fn int_mul(&self, o: &Self) -> Option<Self>;
    fn int_sub(&self, o: &Self) -> Option<Self>;
    fn int_gcd(&self, o: &Self) -> Self;
    fn int_div_exact(&self, o: &Self) -> Self;
    fn int_is_negative(&self) -> bool;
    fn int_neg(&self) -> Option<Self>;
}

impl EchelonInt for i64 {
    fn int_zero() -> Self {
        0
    }
    fn int_is_zero(&self) -> bool {
        *self == 0
    }
    // i64::MIN is excluded so that gcd and negation never overflow.
    fn int_mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o).filter(|&x| x != i64::MIN)
    }
    fn int_sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o).filter(|&x| x != i64::MIN)
    }
    fn int_gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn int_div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn int_is_negative(&self) -> bool {
        *self < 0
    }
    fn int_neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl EchelonInt for BigInt {
    fn int_zero() -> Self {
        Zero::zero()
    }
    fn int_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn int_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn int_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn int_gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn int_div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn int_is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn int_neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Semi-echelon form: at most one stored row per leading column.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<T> {
    pivots: std::collections::HashMap<usize, Vec<(usize, T)>>,
}

impl<T> Default for Echelon<T> {
    fn default() -> Self {
        Echelon {
            pivots: Default::default(),
        }
    }
}

impl<T: EchelonInt> Echelon<T> {
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` and stores it if it is independent. Returns
    /// `Some(true)` if the row was new, `Some(false)` if it was in the span,
    /// `None` on overflow.
    pub(crate) fn insert(&mut self, row: Vec<(usize, T)>) -> Option<bool> {
        let mut row = row;
        loop {
            let Some((lead, _)) = row.first() else {
                return Some(false);
            };
            match self.pivots.get(lead) {
                None => {
                    let row = normalize(row)?;
                    self.pivots.insert(row[0].0, row);
                    return Some(true);
                }
                Some(p) => row = eliminate(&row, p)?,
            }
        }
    }
}

fn normalize<T: EchelonInt>(row: Vec<(usize, T)>) -> Option<Vec<(usize, T)>> {
    let g = row.iter().fold(T::int_zero(), |acc, (_, v)| acc.int_gcd(v));
    let flip = row[0].1.int_is_negative();
    row.into_iter()
        .map(|(j, v)| {
            let v = v.int_div_exact(&g);
            let v = if flip { v.int_neg()? } else { v };
            Some((j, v))
        })
        .collect()
}

/// `p_lead * a - a_lead * p` (scaled by their gcd), divided by its content.
fn eliminate<T: EchelonInt>(a: &[(usize, T)], p: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let ca = &a[0].1;
    let cp = &p[0].1;
    let g = ca.int_gcd(cp);
    let ma = cp.int_div_exact(&g);
    let mp = ca.int_div_exact(&g);
    let mut out = Vec::with_capacity(a.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < a.len() || j < p.len() {
        let ka = a.get(i).map_or(usize::MAX, |x| x.0);
        let kp = p.get(j).map_or(usize::MAX, |x| x.0);
        let (col, v) = if ka < kp {
            i += 1;
            (ka, a[i - 1].1.int_mul(&ma)?)
        } else if kp < ka {
            j += 1;
            (kp, T::int_zero().int_sub(&p[j - 1].1.int_mul(&mp)?)?)
        } else {
            i += 1;
            j += 1;
            (
                ka,
                a[i - 1]
                    .1
                    .int_mul(&ma)?
                    .int_sub(&p[j - 1].1.int_mul(&mp)?)?,
            )
        };
        if !v.int_is_zero() {
            out.push((col, v));
        }
    }
    if out.is_empty() {
        return Some(out);
    }
    let g = out.iter().fold(T::int_zero(), |acc, (_, v)| acc.int_gcd(v));
    Some(
        out.into_iter()
            .map(|(c, v)| (c, v.int_div_exact(&g)))
            .collect(),
    )
}

/// Incremental span membership over `Q`, used when rows arrive one at a time.
#[derive(Debug, Clone, Default)]
pub struct SpanBuilder {
    echelon: Echelon<BigInt>,
}

impl SpanBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Adds `row` to the span; returns true if it was linearly independent.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        if row.is_empty() {
            return false;
        }
        self.echelon
            .insert(integer_row(row))
            .expect("BigInt elimination cannot overflow")
    }
}

/// Reduced row echelon form of a row span.
#[derive(Debug, Clone)]
pub struct Rref {
    ncols: usize,
    /// Rows sorted by pivot column; each has a 1 at its pivot and zeros in
    /// every other pivot column.
    rows: Vec<SparseVec>,
}

impl Rref {
    pub fn of(m: &SparseMatrix) -> Self {
        Self::of_rows(m.ncols(), m.rows())
    }

    pub fn of_rows(ncols: usize, rows: &[SparseVec]) -> Self {
        let mut ech = SpanBuilder::new();
        for r in rows {
            ech.insert(r);
        }
        let mut semi: Vec<SparseVec> = ech
            .echelon
            .pivots
            .into_values()
            .map(|r| {
                let lead = Rational::from_integer(r[0].1.clone());
                r.into_iter()
                    .map(|(j, v)| (j, Rational::from_integer(v) / &lead))
                    .collect()
            })
            .collect();
        semi.sort_by_key(|r: &SparseVec| r[0].0);
        for i in (0..semi.len()).rev() {
            let pivot = semi[i][0].0;
            let (head, tail) = semi.split_at_mut(i);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                if let Ok(k) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                    let c = row[k].1.clone();
                    *row = axpy(row, &-c, pivot_row);
                }
            }
        }
        Rref { ncols, rows: semi }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Canonical nullspace basis of the row space's orthogonal complement:
    /// one vector per free column, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        // column -> list of (row's pivot, coefficient)
        let mut by_col: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.ncols];
        for row in &self.rows {
            let p = row[0].0;
            for (j, v) in &row[1..] {
                by_col[*j].push((p, v.clone()));
            }
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v: SparseVec = by_col[f].iter().map(|(p, c)| (*p, -c)).collect();
                v.push((f, Rational::one()));
                v.sort_by_key(|(j, _)| *j);
                v
            })
            .collect()
    }

    /// Reduces `v` modulo the row span; the result is supported on non-pivot
    /// columns and depends only on the class of `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for row in &self.rows {
            let p = row[0].0;
            if let Ok(k) = out.binary_search_by_key(&p, |(c, _)| *c) {
                let c = out[k].1.clone();
                out = axpy(&out, &-c, row);
            }
        }
        out
    }
}

/// `a + c * b` for sparse vectors.
pub fn axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(usize::MAX, |x| x.0);
        let kb = b.get(j).map_or(usize::MAX, |x| x.0);
        let (col, v) = if ka < kb {
            i += 1;
            (ka, a[i - 1].1.clone())
        } else if kb < ka {
            j += 1;
            (kb, c * &b[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (ka, &a[i - 1].1 + c * &b[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    /// Textbook dense Gaussian elimination over Q, kept independent of the
    /// sparse fraction-free path.
    #[allow(clippy::needless_range_loop)]
    fn dense_rank(mut m: Vec<Vec<Rational>>) -> usize {
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank][col].clone();
            for i in 0..m.len() {
                if i != rank && !m[i][col].is_zero() {
                    let f = &m[i][col] / &pivot;
                    for j in 0..ncols {
                        let delta = &f * &m[rank][j];
                        m[i][j] -= delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(dense(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(dense(&[&[1, 0], &[1, 1]]).rank(), 2);
        assert_eq!(dense(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(SparseMatrix::zeros(0, 3).nullity(), 3);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let m = dense(&[&[big, 1, 0], &[3, big, 1], &[1, 1, big]]);
        assert_eq!(m.rank(), dense_rank(m.to_dense()));
    }

    #[test]
    fn nullspace_is_kernel() {
        let m = dense(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let rref = Rref::of(&m);
        let ns = rref.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v).is_empty());
        }
    }

    proptest! {
        #[test]
        fn rank_matches_dense_oracle(
            entries in prop::collection::vec(-3i64..=3, 30),
            rows in 1usize..6,
        ) {
            let cols = 30 / rows;
            let m: Vec<Vec<Rational>> = (0..rows)
                .map(|i| (0..cols).map(|j| q(entries[i * cols + j])).collect())
                .collect();
            let sparse = SparseMatrix::from_dense(&m);
            let r = dense_rank(m.clone());
            prop_assert_eq!(sparse.rank(), r);
            prop_assert_eq!(sparse.transpose().rank(), r);
            let rref = Rref::of(&sparse);
            prop_assert_eq!(rref.rank(), r);
            let ns = rref.nullspace();
            prop_assert_eq!(ns.len() + r, cols);
            for v in &ns {
                prop_assert!(sparse.apply(v).is_empty());
            }
        }
    }
}
