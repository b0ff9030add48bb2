//! Exact arithmetic in `R = Q[x_1, ..., x_r]` with cohomological grading
//! (every variable has degree 2), plus torus weights and their projective
//! classes.
//!
//! Monomials are exponent vectors. The monomial order used for every basis in
//! this crate is lexicographic with the largest exponent vector first, so the
//! degree-4 basis in two variables is `x1^2, x1 x2, x2^2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Exponent = Vec<u32>;

/// An element of the weight lattice, stored as integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

/// Primitive, sign-normalized representative of a projective weight class:
/// the entries have gcd 1 and the first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveWeight(Vec<i64>);

impl ProjectiveWeight {
    /// Normalizes any nonzero integer vector.
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        normalize_projective(&Weight(coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn linear_form(&self) -> HomogeneousPolynomial {
        let rank = self.rank();
        let terms = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mut e = vec![0; rank];
                e[i] = 1;
                (e, Rational::from_integer(BigInt::from(c)))
            });
        HomogeneousPolynomial::from_terms_unchecked(rank, 2, terms)
    }
}

impl fmt::Display for ProjectiveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub fn normalize_projective(w: &Weight) -> Result<ProjectiveWeight> {
    if w.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let g = w.0.iter().fold(0i64, |acc, &c| acc.gcd(&c));
    let first = *w.0.iter().find(|&&c| c != 0).unwrap();
    let sign = if first < 0 { -1 } else { 1 };
    Ok(ProjectiveWeight(
        w.0.iter().map(|&c| sign * c / g).collect(),
    ))
}

/// The degree-2 linear form `sum w_i x_i` of a projective weight, checked
/// against the rank of the ambient ring.
pub fn weight_to_linear_form(w: &ProjectiveWeight, rank: usize) -> Result<HomogeneousPolynomial> {
    if w.rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: w.rank(),
        });
    }
    Ok(w.linear_form())
}

/// All exponent vectors of cohomological degree `degree` in `rank` variables,
/// largest first in lexicographic order. Empty for odd or negative degrees.
pub fn monomial_basis(degree: i64, rank: usize) -> Vec<Exponent> {
    if degree < 0 || degree % 2 != 0 {
        return Vec::new();
    }
    let total = (degree / 2) as u32;
    if rank == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; rank];
    fill_monomials(total, 0, &mut current, &mut out);
    out
}

fn fill_monomials(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Exponent>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_monomials(remaining - e, pos + 1, current, out);
    }
    current[pos] = 0;
}

/// Position of `exponents` in `monomial_basis` of its own degree.
pub fn monomial_index(exponents: &[u32]) -> usize {
    let rank = exponents.len();
    let mut remaining: u32 = exponents.iter().sum();
    let mut index = 0;
    for (i, &e) in exponents.iter().enumerate() {
        let slots = rank - i - 1;
        for v in (e + 1)..=remaining {
            index += completions(remaining - v, slots);
        }
        remaining -= e;
    }
    index
}

fn completions(sum: u32, slots: usize) -> usize {
    if slots == 0 {
        return usize::from(sum == 0);
    }
    binomial(sum as usize + slots - 1, slots - 1)
}

/// `|monomial_basis(degree, rank)|` without enumerating.
pub fn monomial_count(degree: i64, rank: usize) -> usize {
    if degree < 0 || degree % 2 != 0 {
        return 0;
    }
    let t = (degree / 2) as usize;
    if rank == 0 {
        return usize::from(t == 0);
    }
    binomial(t + rank - 1, rank - 1)
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// A homogeneous polynomial with exact rational coefficients.
///
/// The zero polynomial keeps a declared degree so that degree bookkeeping in
/// products stays meaningful, but it is accepted wherever a polynomial of any
/// degree is expected. Zero polynomials compare equal regardless of their
/// declared degree.
#[derive(Clone, Debug, Eq)]
pub struct HomogeneousPolynomial {
    rank: usize,
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

impl PartialEq for HomogeneousPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.terms == other.terms
            && (self.is_zero() || self.degree == other.degree)
    }
}

impl std::hash::Hash for HomogeneousPolynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.terms.hash(state);
    }
}

impl HomogeneousPolynomial {
    pub fn zero(rank: usize, degree: u32) -> Self {
        HomogeneousPolynomial {
            rank,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        Self::monomial(rank, vec![0; rank], c)
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Rational::one())
    }

    pub fn from_int(rank: usize, c: i64) -> Self {
        Self::constant(rank, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        Self::monomial(rank, e, Rational::one())
    }

    pub fn monomial(rank: usize, exponents: Exponent, c: Rational) -> Self {
        debug_assert_eq!(exponents.len(), rank);
        let degree = 2 * exponents.iter().sum::<u32>();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        HomogeneousPolynomial {
            rank,
            degree,
            terms,
        }
    }

    /// Builds a polynomial from terms, merging repeated exponents and checking
    /// that all exponent vectors have length `rank` and the same degree.
    /// `degree` is the declared degree used when every term cancels; if
    /// `None`, an empty term list gives degree 0.
    pub fn from_terms<I>(rank: usize, degree: Option<u32>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        let mut seen_degree = degree;
        for (e, c) in terms {
            if e.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: e.len(),
                });
            }
            let d = 2 * e.iter().sum::<u32>();
            match seen_degree {
                Some(sd) if sd != d => {
                    return Err(Error::NotHomogeneous(format!(
                        "term of degree {d} in a polynomial of degree {sd}"
                    )))
                }
                _ => seen_degree = Some(d),
            }
            let slot = map.entry(e).or_insert_with(Rational::zero);
            *slot += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomogeneousPolynomial {
            rank,
            degree: seen_degree.unwrap_or(0),
            terms: map,
        })
    }

    fn from_terms_unchecked<I>(rank: usize, degree: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        HomogeneousPolynomial {
            rank,
            degree,
            terms,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants (units of R).
    pub fn is_unit(&self) -> bool {
        self.degree == 0 && !self.is_zero()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    /// Terms in basis order (lexicographically largest exponent first).
    pub fn terms_in_basis_order(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Returns the same polynomial with a different declared degree; only
    /// meaningful for zero, errors otherwise when the degrees disagree.
    pub fn with_degree(mut self, degree: u32) -> Result<Self> {
        if !self.is_zero() && self.degree != degree {
            return Err(Error::DegreeMismatch(format!(
                "polynomial of degree {} used where degree {degree} is required",
                self.degree
            )));
        }
        self.degree = degree;
        Ok(self)
    }

    fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        Ok(HomogeneousPolynomial {
            rank: self.rank,
            degree: self.degree,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut terms: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let slot = terms.entry(e).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(HomogeneousPolynomial {
            rank: self.rank,
            degree: self.degree + other.degree,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        HomogeneousPolynomial {
            rank: self.rank,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank, self.degree);
        }
        HomogeneousPolynomial {
            rank: self.rank,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by a monomial with coefficient 1.
    pub fn shift(&self, exponents: &[u32]) -> Self {
        let degree = self.degree + 2 * exponents.iter().sum::<u32>();
        HomogeneousPolynomial {
            rank: self.rank,
            degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(exponents).map(|(a, b)| a + b).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same rank");
        }
        acc
    }

    /// Exact division. Returns `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.rank != divisor.rank {
            return None;
        }
        let (lead_e, lead_c) = divisor.leading()?;
        if self.is_zero() {
            return Some(Self::zero(
                self.rank,
                self.degree.saturating_sub(divisor.degree),
            ));
        }
        if divisor.degree > self.degree {
            return None;
        }
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((e, c)) = rem.leading() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponent = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = c / lead_c;
            let step = divisor.shift(&qe).scale(&qc);
            rem = rem.checked_sub(&step).ok()?;
            quotient.insert(qe, qc);
        }
        Some(HomogeneousPolynomial {
            rank: self.rank,
            degree: self.degree - divisor.degree,
            terms: quotient,
        })
    }

    /// Largest `k` such that `factor^k` divides `self`, and the cofactor.
    /// `self` must be nonzero.
    pub fn strip_factor(&self, factor: &Self) -> (u32, Self) {
        let mut k = 0;
        let mut current = self.clone();
        if factor.degree == 0 {
            return (0, current);
        }
        while let Some(q) = current.div_exact(factor) {
            k += 1;
            current = q;
        }
        (k, current)
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms_in_basis_order() {
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let is_const = e.iter().all(|&x| x == 0);
            if is_const {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut first_var = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "x{}", i + 1)?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}
