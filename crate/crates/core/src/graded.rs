//! Finitely generated free graded modules over `R`, degree-preserving maps
//! between them, and exact degreewise linear algebra.
//!
//! The degree-`d` piece of a free module with generator degrees `g_1..g_n` has
//! the basis `{m * e_j}` with `m` running over `monomial_basis(d - g_j)`. Bases
//! are ordered generator-major, then by monomial.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{rank_of_rows, Rref, SpanBuilder, SparseMatrix, SparseVec};
use crate::polyring::{
    monomial_basis, monomial_count, monomial_index, HomogeneousPolynomial, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    ring_rank: usize,
    generator_degrees: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(ring_rank: usize, generator_degrees: Vec<i64>) -> Self {
        GradedFreeModule {
            ring_rank,
            generator_degrees,
        }
    }

    pub fn zero(ring_rank: usize) -> Self {
        Self::new(ring_rank, Vec::new())
    }

    /// `R` itself.
    pub fn ring(ring_rank: usize) -> Self {
        Self::new(ring_rank, vec![0])
    }

    pub fn direct_sum<'a, I: IntoIterator<Item = &'a GradedFreeModule>>(
        ring_rank: usize,
        parts: I,
    ) -> Self {
        let mut degrees = Vec::new();
        for p in parts {
            debug_assert_eq!(p.ring_rank, ring_rank);
            degrees.extend_from_slice(&p.generator_degrees);
        }
        Self::new(ring_rank, degrees)
    }

    /// Same generators, all degrees raised by `by`.
    pub fn shifted(&self, by: i64) -> Self {
        Self::new(
            self.ring_rank,
            self.generator_degrees.iter().map(|g| g + by).collect(),
        )
    }

    pub fn ring_rank(&self) -> usize {
        self.ring_rank
    }

    pub fn rank(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn generator_degrees(&self) -> &[i64] {
        &self.generator_degrees
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.generator_degrees.iter().copied().min()
    }

    pub fn dim(&self, d: i64) -> usize {
        self.generator_degrees
            .iter()
            .map(|g| monomial_count(d - g, self.ring_rank))
            .sum()
    }

    /// Offsets of each generator's block inside the degree-`d` basis.
    pub fn offsets(&self, d: i64) -> Vec<usize> {
        let mut acc = 0;
        self.generator_degrees
            .iter()
            .map(|g| {
                let o = acc;
                acc += monomial_count(d - g, self.ring_rank);
                o
            })
            .collect()
    }

    /// Degree-`d` basis as `(generator, monomial)` pairs.
    pub fn basis(&self, d: i64) -> Vec<(usize, Vec<u32>)> {
        self.generator_degrees
            .iter()
            .enumerate()
            .flat_map(|(j, g)| {
                monomial_basis(d - g, self.ring_rank)
                    .into_iter()
                    .map(move |m| (j, m))
            })
            .collect()
    }

    /// Converts a degree-`d` coordinate vector into one polynomial per
    /// generator.
    pub fn vector_to_polys(&self, d: i64, v: &SparseVec) -> Vec<HomogeneousPolynomial> {
        let basis = self.basis(d);
        let mut terms: Vec<Vec<(Vec<u32>, Rational)>> = vec![Vec::new(); self.rank()];
        for (k, c) in v {
            let (j, m) = &basis[*k];
            terms[*j].push((m.clone(), c.clone()));
        }
        terms
            .into_iter()
            .zip(&self.generator_degrees)
            .map(|(t, g)| {
                let deg = (d - g).max(0) as u32;
                HomogeneousPolynomial::from_terms(self.ring_rank, Some(deg), t)
                    .expect("basis terms are homogeneous")
            })
            .collect()
    }

    /// Coordinates of `m * v` in degree `d`, where `v` is a per-generator
    /// polynomial vector and `m` a monomial.
    pub fn shifted_vector(&self, d: i64, polys: &[HomogeneousPolynomial], m: &[u32]) -> SparseVec {
        let offsets = self.offsets(d);
        let mut out: SparseVec = Vec::new();
        for (j, p) in polys.iter().enumerate() {
            for (e, c) in p.terms() {
                let shifted: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                out.push((offsets[j] + monomial_index(&shifted), c.clone()));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        out
    }
}

/// Lowest degree worth tabulating for a collection of modules.
pub fn degree_floor<'a, I: IntoIterator<Item = &'a GradedFreeModule>>(modules: I) -> i64 {
    modules
        .into_iter()
        .filter_map(GradedFreeModule::min_degree)
        .fold(0, i64::min)
}

/// Dimensions of graded pieces for degrees `start..=cutoff`. Degrees below
/// `start` are zero; degrees above the cutoff are unknown.
#[derive(Clone, Debug, Eq)]
pub struct HilbertFunction {
    start: i64,
    cutoff: i64,
    dims: Vec<usize>,
}

impl HilbertFunction {
    pub fn from_fn<F: Fn(i64) -> usize + Send + Sync>(start: i64, cutoff: i64, f: F) -> Self {
        let dims = if cutoff < start {
            Vec::new()
        } else {
            (start..=cutoff).into_par_iter().map(f).collect()
        };
        HilbertFunction {
            start,
            cutoff,
            dims,
        }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn dim(&self, d: i64) -> Option<usize> {
        if d > self.cutoff {
            None
        } else if d < self.start {
            Some(0)
        } else {
            Some(self.dims[(d - self.start) as usize])
        }
    }

    /// `(degree, dim)` pairs over the tabulated range.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .map(move |(i, &v)| (self.start + i as i64, v))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Pointwise sum; ranges must share the cutoff.
    pub fn add(&self, other: &HilbertFunction) -> HilbertFunction {
        assert_eq!(
            self.cutoff, other.cutoff,
            "Hilbert functions with different cutoffs"
        );
        let start = self.start.min(other.start);
        HilbertFunction::from_fn(start, self.cutoff, |d| {
            self.dim(d).unwrap() + other.dim(d).unwrap()
        })
    }

    pub fn zero(start: i64, cutoff: i64) -> Self {
        Self::from_fn(start, cutoff, |_| 0)
    }
}

impl PartialEq for HilbertFunction {
    fn eq(&self, other: &Self) -> bool {
        self.cutoff == other.cutoff
            && (self.start.min(other.start)..=self.cutoff).all(|d| self.dim(d) == other.dim(d))
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, v)| format!("{d}:{v}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn hilbert_function(m: &GradedFreeModule, cutoff: i64) -> HilbertFunction {
    HilbertFunction::from_fn(degree_floor([m]), cutoff, |d| m.dim(d))
}

/// Degree-preserving map between free graded modules. `entries[i][j]` sends
/// source generator `j` into target generator `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    entries: Vec<Vec<HomogeneousPolynomial>>,
}

impl GradedMap {
    /// Checks shape, ring rank, and that each nonzero entry `(i, j)` has degree
    /// `deg(source_j) - deg(target_i)`.
    pub fn new(
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<HomogeneousPolynomial>>,
    ) -> Result<Self> {
        if source.ring_rank != target.ring_rank {
            return Err(Error::RankMismatch {
                expected: source.ring_rank,
                found: target.ring_rank,
            });
        }
        if entries.len() != target.rank() || entries.iter().any(|row| row.len() != source.rank()) {
            return Err(Error::InvalidInput(format!(
                "entry matrix must be {}x{}",
                target.rank(),
                source.rank()
            )));
        }
        let r = source.ring_rank;
        let mut checked = Vec::with_capacity(entries.len());
        for (i, row) in entries.into_iter().enumerate() {
            let mut out_row = Vec::with_capacity(row.len());
            for (j, p) in row.into_iter().enumerate() {
                if p.rank() != r {
                    return Err(Error::RankMismatch {
                        expected: r,
                        found: p.rank(),
                    });
                }
                let diff = source.generator_degrees[j] - target.generator_degrees[i];
                if p.is_zero() {
                    out_row.push(HomogeneousPolynomial::zero(r, diff.max(0) as u32));
                } else if diff < 0 || diff as u32 != p.degree() {
                    return Err(Error::DegreeMismatch(format!(
                        "entry ({i}, {j}) has degree {} but the generator degrees require {diff}",
                        p.degree()
                    )));
                } else {
                    out_row.push(p);
                }
            }
            checked.push(out_row);
        }
        Ok(GradedMap {
            source,
            target,
            entries: checked,
        })
    }

    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let r = source.ring_rank;
        let entries = target
            .generator_degrees
            .iter()
            .map(|t| {
                source
                    .generator_degrees
                    .iter()
                    .map(|s| HomogeneousPolynomial::zero(r, (s - t).max(0) as u32))
                    .collect()
            })
            .collect();
        GradedMap {
            source,
            target,
            entries,
        }
    }

    pub fn identity(m: GradedFreeModule) -> Self {
        let r = m.ring_rank;
        let mut f = Self::zero(m.clone(), m);
        for i in 0..f.entries.len() {
            f.entries[i][i] = HomogeneousPolynomial::one(r);
        }
        f
    }

    /// Multiplication by a homogeneous polynomial `p` of degree `k`, as a map
    /// from `m` shifted up by `k` onto `m`.
    pub fn scalar(m: &GradedFreeModule, p: &HomogeneousPolynomial) -> Self {
        let source = m.shifted(p.degree() as i64);
        let mut f = Self::zero(source, m.clone());
        for i in 0..f.entries.len() {
            f.entries[i][i] = p.clone();
        }
        f
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<HomogeneousPolynomial>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &HomogeneousPolynomial {
        &self.entries[i][j]
    }

    pub fn ring_rank(&self) -> usize {
        self.source.ring_rank
    }

    /// Block matrix assembled from `(target_block, source_block, map)` triples.
    /// Unlisted blocks are zero.
    pub fn from_blocks(
        ring_rank: usize,
        sources: &[GradedFreeModule],
        targets: &[GradedFreeModule],
        blocks: Vec<(usize, usize, GradedMap)>,
    ) -> Result<Self> {
        let source = GradedFreeModule::direct_sum(ring_rank, sources);
        let target = GradedFreeModule::direct_sum(ring_rank, targets);
        let src_off: Vec<usize> = prefix_sums(sources.iter().map(GradedFreeModule::rank));
        let tgt_off: Vec<usize> = prefix_sums(targets.iter().map(GradedFreeModule::rank));
        let mut f = Self::zero(source, target);
        for (ti, sj, block) in blocks {
            if block.source != sources[sj] || block.target != targets[ti] {
                return Err(Error::InvalidInput(format!(
                    "block ({ti}, {sj}) does not fit its slot"
                )));
            }
            for (i, row) in block.entries.into_iter().enumerate() {
                for (j, p) in row.into_iter().enumerate() {
                    if !p.is_zero() {
                        f.entries[tgt_off[ti] + i][src_off[sj] + j] = p;
                    }
                }
            }
        }
        Ok(f)
    }

    /// Images of the degree-`d` source basis, each in target coordinates.
    pub fn realize_columns(&self, d: i64) -> Vec<SparseVec> {
        let r = self.ring_rank();
        let tgt_offsets = self.target.offsets(d);
        let mut columns = Vec::with_capacity(self.source.dim(d));
        for (j, g) in self.source.generator_degrees.iter().enumerate() {
            for m in monomial_basis(d - g, r) {
                let mut col: SparseVec = Vec::new();
                for (i, row) in self.entries.iter().enumerate() {
                    let p = &row[j];
                    for (e, c) in p.terms() {
                        let shifted: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                        col.push((tgt_offsets[i] + monomial_index(&shifted), c.clone()));
                    }
                }
                col.sort_by_key(|(k, _)| *k);
                columns.push(merge_duplicates(col));
            }
        }
        columns
    }

    /// The `Q`-linear map `source_d -> target_d` in the lexicographic bases.
    pub fn realize(&self, d: i64) -> SparseMatrix {
        SparseMatrix::from_columns(self.target.dim(d), self.realize_columns(d))
    }

    pub fn rank_in_degree(&self, d: i64) -> usize {
        rank_of_rows(&self.realize_columns(d))
    }

    fn floor(&self) -> i64 {
        degree_floor([&self.source, &self.target])
    }
}

fn merge_duplicates(col: SparseVec) -> SparseVec {
    let mut out: SparseVec = Vec::with_capacity(col.len());
    for (k, c) in col {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn prefix_sums<I: IntoIterator<Item = usize>>(it: I) -> Vec<usize> {
    let mut acc = 0;
    it.into_iter()
        .map(|x| {
            let o = acc;
            acc += x;
            o
        })
        .collect()
}

pub fn realize_in_degree(f: &GradedMap, d: i64) -> SparseMatrix {
    f.realize(d)
}

pub fn kernel_hilbert(f: &GradedMap, cutoff: i64) -> HilbertFunction {
    HilbertFunction::from_fn(f.floor(), cutoff, |d| f.source.dim(d) - f.rank_in_degree(d))
}

pub fn cokernel_hilbert(f: &GradedMap, cutoff: i64) -> HilbertFunction {
    HilbertFunction::from_fn(f.floor(), cutoff, |d| f.target.dim(d) - f.rank_in_degree(d))
}

pub fn image_hilbert(f: &GradedMap, cutoff: i64) -> HilbertFunction {
    HilbertFunction::from_fn(f.floor(), cutoff, |d| f.rank_in_degree(d))
}

/// Canonical basis of `ker(f)_d`: the reduced nullspace basis of the realized
/// matrix, one vector per free column.
pub fn kernel_basis(f: &GradedMap, d: i64) -> Vec<SparseVec> {
    Rref::of(&f.realize(d)).nullspace()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerator {
    pub degree: i64,
    /// One polynomial per source generator.
    pub coords: Vec<HomogeneousPolynomial>,
}

/// Minimal generators of `ker(f)`, certified complete only up to `cutoff`.
#[derive(Clone, Debug)]
pub struct KernelModule {
    map: GradedMap,
    cutoff: i64,
    generators: Vec<KernelGenerator>,
}

impl KernelModule {
    pub fn defining_map(&self) -> &GradedMap {
        &self.map
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn generators(&self) -> &[KernelGenerator] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    /// Coordinates in `source_d` of all products `m * g` with `g` a generator
    /// of degree at most `d`.
    pub fn span_in_degree(&self, d: i64) -> Vec<SparseVec> {
        let source = &self.map.source;
        self.generators
            .iter()
            .filter(|g| g.degree <= d)
            .flat_map(|g| {
                monomial_basis(d - g.degree, source.ring_rank)
                    .into_iter()
                    .map(move |m| source.shifted_vector(d, &g.coords, &m))
            })
            .collect()
    }
}

/// Degree-ascending minimal generators of `ker(f)` up to `cutoff`. In each
/// degree, the new generators are the canonical kernel basis vectors that
/// are independent of the `R`-span of earlier generators, taken in pivot
/// order.
pub fn minimal_generators(f: &GradedMap, cutoff: i64) -> KernelModule {
    let floor = f.floor();
    let degrees: Vec<i64> = if cutoff < floor {
        Vec::new()
    } else {
        (floor..=cutoff).collect()
    };
    let bases: Vec<Vec<SparseVec>> = degrees.par_iter().map(|&d| kernel_basis(f, d)).collect();
    let mut module = KernelModule {
        map: f.clone(),
        cutoff,
        generators: Vec::new(),
    };
    for (&d, basis) in degrees.iter().zip(bases) {
        if basis.is_empty() {
            continue;
        }
        let mut span = SpanBuilder::new();
        for v in module.span_in_degree(d) {
            span.insert(&v);
        }
        let mut fresh = Vec::new();
        for v in basis {
            if span.insert(&v) {
                fresh.push(KernelGenerator {
                    degree: d,
                    coords: f.source.vector_to_polys(d, &v),
                });
            }
        }
        module.generators.extend(fresh);
    }
    module
}

/// Rank of `f` over the fraction field of `R`, by fraction-free elimination.
pub fn generic_rank(f: &GradedMap) -> usize {
    bareiss(f.entries.clone(), f.ring_rank()).0
}

pub fn determinant(f: &GradedMap) -> Result<HomogeneousPolynomial> {
    let n = f.target.rank();
    if f.source.rank() != n {
        return Err(Error::NonSquare {
            rows: n,
            cols: f.source.rank(),
        });
    }
    let r = f.ring_rank();
    if n == 0 {
        return Ok(HomogeneousPolynomial::one(r));
    }
    let (rank, last_pivot, sign) = bareiss(f.entries.clone(), r);
    if rank < n {
        return Ok(HomogeneousPolynomial::zero(r, 0));
    }
    Ok(if sign < 0 {
        last_pivot.neg()
    } else {
        last_pivot
    })
}

/// Bareiss elimination with row pivoting. Returns the rank, the last pivot
/// (the determinant up to sign for full-rank square input), and the sign of
/// the row permutation.
#[allow(clippy::needless_range_loop)]
fn bareiss(
    mut m: Vec<Vec<HomogeneousPolynomial>>,
    ring_rank: usize,
) -> (usize, HomogeneousPolynomial, i32) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = HomogeneousPolynomial::one(ring_rank);
    let mut rank = 0;
    let mut sign = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        let pivot = m[rank][col].clone();
        for i in rank + 1..nrows {
            let lead = m[i][col].clone();
            for j in col + 1..ncols {
                let a = pivot.checked_mul(&m[i][j]).expect("same ring");
                let b = lead.checked_mul(&m[rank][j]).expect("same ring");
                let num = a.checked_sub(&b).expect("minors are homogeneous");
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][col] = HomogeneousPolynomial::zero(ring_rank, 0);
        }
        prev = pivot;
        rank += 1;
    }
    (rank, prev, sign)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    Pass,
    Fail { degree: i64, torsion_dim: usize },
}

impl ProbeVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, ProbeVerdict::Pass)
    }
}

/// The fixed test form `x1 + 2 x2 + ... + r x_r`.
pub fn probe_form(ring_rank: usize) -> HomogeneousPolynomial {
    let terms = (0..ring_rank).map(|i| {
        let mut e = vec![0; ring_rank];
        e[i] = 1;
        (e, Rational::from_integer((i as i64 + 1).into()))
    });
    HomogeneousPolynomial::from_terms(ring_rank, Some(2), terms).expect("linear form")
}

/// Checks that multiplication by the fixed probe form is injective on each
/// graded piece of `ker(f)`, for all degrees `d <= cutoff - 2`. A pass is
/// evidence of torsion-freeness, not a proof.
pub fn torsion_free_probe(k: &KernelModule, cutoff: i64) -> ProbeVerdict {
    subquotient_torsion_probe(&k.map, None, cutoff)
}

/// Torsion probe on the subquotient `ker(f) / im(g)`, where `g` maps into the
/// source of `f` and `f . g = 0`.
///
/// In degree `d` the torsion dimension is
/// `nullity(B) - nullity(g_{d+2}) - rank(g_d)` with
/// `B = [[f_d, 0], [l_d, -g_{d+2}]]`.
pub fn subquotient_torsion_probe(
    f: &GradedMap,
    g: Option<&GradedMap>,
    cutoff: i64,
) -> ProbeVerdict {
    let source = &f.source;
    let form = probe_form(source.ring_rank);
    let mult = GradedMap::scalar(source, &form);
    let mut floor = f.floor();
    if let Some(g) = g {
        floor = floor.min(g.floor());
    }
    let degrees: Vec<i64> = if cutoff - 2 < floor {
        Vec::new()
    } else {
        (floor..=cutoff - 2).collect()
    };
    let dims: Vec<(i64, usize)> = degrees
        .par_iter()
        .map(|&d| {
            let n = source.dim(d);
            let mut cols = f.realize_columns(d);
            // Stack f_d on top of l_d: column k is (f(e_k), l * e_k).
            let shift = f.target.dim(d);
            let lcols = mult.realize_columns(d + 2);
            for (c, l) in cols.iter_mut().zip(lcols) {
                c.extend(l.into_iter().map(|(i, v)| (i + shift, v)));
            }
            let torsion = match g {
                None => n - rank_of_rows(&cols),
                Some(g) => {
                    let gcols: Vec<SparseVec> = g
                        .realize_columns(d + 2)
                        .into_iter()
                        .map(|c| c.into_iter().map(|(i, v)| (i + shift, -v)).collect())
                        .collect();
                    let g_next_rank = rank_of_rows(&gcols);
                    let width = n + gcols.len();
                    cols.extend(gcols);
                    let nullity_b = width - rank_of_rows(&cols);
                    let nullity_g_next = g.source.dim(d + 2) - g_next_rank;
                    nullity_b - nullity_g_next - g.rank_in_degree(d)
                }
            };
            (d, torsion)
        })
        .collect();
    dims.into_iter()
        .find(|&(_, t)| t > 0)
        .map_or(ProbeVerdict::Pass, |(degree, torsion_dim)| {
            ProbeVerdict::Fail {
                degree,
                torsion_dim,
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn x(r: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::var(r, i)
    }

    fn one(r: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::one(r)
    }

    fn zero(r: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::zero(r, 0)
    }

    fn sphere_res() -> GradedMap {
        GradedMap::new(
            GradedFreeModule::new(1, vec![0, 2]),
            GradedFreeModule::new(1, vec![0, 0]),
            vec![vec![one(1), x(1, 0)], vec![one(1), zero(1)]],
        )
        .unwrap()
    }

    #[test]
    fn hilbert_examples() {
        let h = hilbert_function(&GradedFreeModule::ring(1), 4);
        assert_eq!(
            h.iter().map(|(_, v)| v).collect::<Vec<_>>(),
            vec![1, 0, 1, 0, 1]
        );
        let m = GradedFreeModule::new(2, vec![0, 2]);
        assert_eq!(hilbert_function(&m, 2).dim(2), Some(3));
        let m = GradedFreeModule::new(2, vec![1]);
        let h = hilbert_function(&m, 4);
        assert_eq!(h.dim(1), Some(1));
        assert_eq!(h.dim(2), Some(0));
        assert_eq!(h.dim(6), None);
    }

    #[test]
    fn realization_examples() {
        let m = GradedFreeModule::new(2, vec![0, 2]);
        let z = GradedMap::zero(m.clone(), GradedFreeModule::new(2, vec![0]));
        let a = z.realize(4);
        assert_eq!((a.nrows(), a.ncols()), (3, 5));
        assert!(a.is_zero());

        let id = GradedMap::identity(GradedFreeModule::ring(1));
        for d in [0, 2, 4] {
            assert_eq!(id.realize(d).to_dense(), vec![vec![q(1)]]);
        }

        // Images of x*e1 and e2 in the basis {x*f1, x*f2}.
        let a = sphere_res().realize(2);
        assert_eq!(a.to_dense(), vec![vec![q(1), q(1)], vec![q(1), q(0)]]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn kernel_and_cokernel_examples() {
        let id = GradedMap::identity(GradedFreeModule::new(2, vec![0, 2]));
        assert!(kernel_hilbert(&id, 8).is_zero());
        assert!(cokernel_hilbert(&id, 8).is_zero());
        let m = GradedFreeModule::new(2, vec![0, 2]);
        let z = GradedMap::zero(m.clone(), m.clone());
        assert_eq!(kernel_hilbert(&z, 8), hilbert_function(&m, 8));
        assert_eq!(cokernel_hilbert(&z, 8), hilbert_function(&m, 8));

        // coker = R/(x): a single copy of Q over one variable, one dimension
        // per even degree over two.
        let coker = cokernel_hilbert(&sphere_res(), 4);
        assert_eq!([0, 2, 4].map(|d| coker.dim(d).unwrap()), [1, 0, 0]);
        let res2 = GradedMap::new(
            GradedFreeModule::new(2, vec![0, 2]),
            GradedFreeModule::new(2, vec![0, 0]),
            vec![vec![one(2), x(2, 0)], vec![one(2), zero(2)]],
        )
        .unwrap();
        let coker = cokernel_hilbert(&res2, 4);
        assert_eq!([0, 2, 4].map(|d| coker.dim(d).unwrap()), [1, 1, 1]);
    }

    #[test]
    fn generators_of_zero_map_on_ring() {
        let z = GradedMap::zero(GradedFreeModule::ring(2), GradedFreeModule::zero(2));
        let k = minimal_generators(&z, 10);
        assert_eq!(k.generator_degrees(), vec![0]);
        assert_eq!(k.generators()[0].coords, vec![one(2)]);
        assert!(torsion_free_probe(&k, 10).passed());
    }

    #[test]
    fn generic_rank_examples() {
        let id = GradedMap::identity(GradedFreeModule::new(2, vec![0, 0, 4]));
        assert_eq!(generic_rank(&id), 3);
        let row = GradedMap::new(
            GradedFreeModule::new(2, vec![2, 2]),
            GradedFreeModule::new(2, vec![0]),
            vec![vec![x(2, 0), x(2, 1)]],
        )
        .unwrap();
        assert_eq!(generic_rank(&row), 1);
        assert_eq!(generic_rank(&sphere_res()), 2);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&sphere_res()).unwrap(), x(1, 0).neg());
        assert_eq!(
            determinant(&GradedMap::identity(GradedFreeModule::new(1, vec![0, 2]))).unwrap(),
            one(1)
        );
        let m = GradedMap::new(
            GradedFreeModule::new(2, vec![2, 2]),
            GradedFreeModule::new(2, vec![0, 0]),
            vec![vec![x(2, 0), x(2, 1)], vec![x(2, 1), x(2, 0)]],
        )
        .unwrap();
        let expected = x(2, 0).pow(2).checked_sub(&x(2, 1).pow(2)).unwrap();
        assert_eq!(determinant(&m).unwrap(), expected);
        let rect = GradedMap::zero(
            GradedFreeModule::new(1, vec![0]),
            GradedFreeModule::new(1, vec![0, 0]),
        );
        assert!(matches!(determinant(&rect), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn degree_checks_on_entries() {
        let r = GradedMap::new(
            GradedFreeModule::new(1, vec![0]),
            GradedFreeModule::new(1, vec![0]),
            vec![vec![x(1, 0)]],
        );
        assert!(matches!(r, Err(Error::DegreeMismatch(_))));
        let r = GradedMap::new(
            GradedFreeModule::new(1, vec![0]),
            GradedFreeModule::new(1, vec![2]),
            vec![vec![one(1)]],
        );
        assert!(matches!(r, Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn planted_torsion_fails_probe() {
        // R/(x) as ker(R -> 0) / im(x: R(-2) -> R).
        let ring = GradedFreeModule::ring(1);
        let f = GradedMap::zero(ring.clone(), GradedFreeModule::zero(1));
        let g = GradedMap::scalar(&ring, &x(1, 0));
        assert_eq!(
            subquotient_torsion_probe(&f, Some(&g), 10),
            ProbeVerdict::Fail {
                degree: 0,
                torsion_dim: 1
            }
        );
        // Over two variables the probe form x1 + 2 x2 is a zero divisor on
        // R/(x1 + 2 x2) but not on R/(x1): the probe only sees torsion it
        // happens to multiply to zero.
        let ring = GradedFreeModule::ring(2);
        let f = GradedMap::zero(ring.clone(), GradedFreeModule::zero(2));
        let g = GradedMap::scalar(&ring, &probe_form(2));
        assert!(matches!(
            subquotient_torsion_probe(&f, Some(&g), 10),
            ProbeVerdict::Fail { degree: 0, .. }
        ));
        let g = GradedMap::scalar(&ring, &x(2, 0));
        assert!(subquotient_torsion_probe(&f, Some(&g), 10).passed());
        // Quotient by nothing is free.
        let g0 = GradedMap::zero(GradedFreeModule::zero(2), ring);
        assert!(subquotient_torsion_probe(&f, Some(&g0), 10).passed());
    }
}
