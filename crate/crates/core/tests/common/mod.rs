#![allow(dead_code)]

use std::collections::BTreeSet;

use gkm_core::builders::{canonical_sheaf, example, LabeledGraph};
use gkm_core::document::load_sheaf;
use gkm_core::polyring::{normalize_projective, Weight};
use gkm_core::sheaf::GkmSheaf;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMED: [&str; 7] = ["point", "sphere", "theta", "cp1", "cp2", "cp3", "identity"];

/// A canonical sheaf on a random labeled graph with at most 6 vertices, 4
/// weights and torus rank 3.
pub fn random_canonical(seed: u64) -> GkmSheaf {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = rng.gen_range(1..=3);
    let n = rng.gen_range(1..=6);
    let vertices: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
    let mut keys = BTreeSet::new();
    let mut weights = Vec::new();
    let wanted = rng.gen_range(1..=4);
    for _ in 0..64 {
        if weights.len() == wanted {
            break;
        }
        let w: Vec<i64> = (0..r).map(|_| rng.gen_range(-2..=2)).collect();
        if let Ok(key) = normalize_projective(&Weight::new(w.clone())) {
            if keys.insert(key) {
                weights.push(w);
            }
        }
    }
    let mut edges = Vec::new();
    for w in weights {
        let classes = rng.gen_range(1..=n);
        let mut order = vertices.clone();
        order.shuffle(&mut rng);
        let mut blocks: Vec<Vec<String>> = vec![Vec::new(); classes];
        for v in order {
            blocks[rng.gen_range(0..classes)].push(v);
        }
        for b in blocks.into_iter().filter(|b| !b.is_empty()) {
            edges.push((b, w.clone()));
        }
    }
    canonical_sheaf(&LabeledGraph {
        torus_rank: r,
        vertices,
        edges,
    })
    .expect("random labeled graph is valid")
}

pub fn random_fixtures() -> Vec<(String, GkmSheaf)> {
    (0..25)
        .map(|s| (format!("random-{s}"), random_canonical(0x6b6d + s)))
        .collect()
}

pub fn fixtures() -> Vec<(String, GkmSheaf)> {
    let mut all: Vec<(String, GkmSheaf)> = NAMED
        .iter()
        .map(|n| (n.to_string(), example(n).unwrap()))
        .collect();
    all.extend(random_fixtures());
    all
}

/// The sphere graph with weight x1 over r = 2 but a restriction through x2.
pub const MISMATCHED_WEIGHT: &str = r#"{
  "name": "mismatched-weight",
  "torus_rank": 2,
  "vertices": ["N", "S"],
  "relations": [{"weight": [1, 0], "blocks": [["N", "S"]]}],
  "sheaf": {
    "vertex_stalks": {"N": [0], "S": [0]},
    "edge_stalks": [{
      "weight": [1, 0],
      "block": ["N", "S"],
      "generator_degrees": [0, 2],
      "restrictions": {
        "N": [[[{"coeff": "1", "exponents": [0, 0]}], [{"coeff": "1", "exponents": [0, 1]}]]],
        "S": [[[{"coeff": "1", "exponents": [0, 0]}], []]]
      }
    }]
  }
}"#;

pub fn mismatched_weight() -> GkmSheaf {
    load_sheaf(MISMATCHED_WEIGHT).unwrap().sheaf
}

// Independent oracle: dense linear algebra over Q on explicit coefficient
// vectors, sharing nothing with the engine.

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[allow(clippy::needless_range_loop)]
pub fn dense_rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for j in c..cols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for i in 0..rows {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &m[rank][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exponent vectors of total exponent `k` in `r` variables, any order.
pub fn monomials(k: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in 0..=k {
        for mut rest in monomials(k - a, r - 1) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Dimension in cohomological degree `d` of
/// `{(f_v) : f_u ≡ f_v mod ℓ for every edge {u, v} labeled ℓ}`, where each
/// `f_v` lies in `Q[x1..xr]`. Edges are `(u, v, ℓ coefficients)`.
pub fn congruence_dim(
    r: usize,
    nvertices: usize,
    edges: &[(usize, usize, Vec<i64>)],
    d: i64,
) -> usize {
    if d < 0 || d % 2 != 0 {
        return 0;
    }
    let k = (d / 2) as u32;
    let top = monomials(k, r);
    let index = |m: &Vec<u32>| top.iter().position(|t| t == m).unwrap();
    let low = if k == 0 {
        Vec::new()
    } else {
        monomials(k - 1, r)
    };
    let nf = nvertices * top.len();
    let ncols = nf + edges.len() * low.len();
    let mut rows = Vec::new();
    for (e, (u, v, ell)) in edges.iter().enumerate() {
        for t in 0..top.len() {
            let mut row = vec![q(0); ncols];
            row[u * top.len() + t] += q(1);
            row[v * top.len() + t] -= q(1);
            rows.push(row);
        }
        let base = rows.len() - top.len();
        for (s, m) in low.iter().enumerate() {
            for (i, c) in ell.iter().enumerate() {
                if *c != 0 {
                    let mut shifted = m.clone();
                    shifted[i] += 1;
                    rows[base + index(&shifted)][nf + e * low.len() + s] -= q(*c);
                }
            }
        }
    }
    // The ℓ·q columns are injective, so every solution is determined by its
    // f-part and the solution space has the dimension of the f-part.
    ncols - dense_rank(rows)
}

/// Dimension of `(R / (ideal generated by the given variables))_d`.
pub fn quotient_by_variables_dim(r: usize, vars: &[usize], d: i64) -> usize {
    if d < 0 || d % 2 != 0 {
        return 0;
    }
    monomials((d / 2) as u32, r)
        .into_iter()
        .filter(|m| vars.iter().all(|&i| m[i] == 0))
        .count()
}

pub fn binomial(n: i64, k: i64) -> usize {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// `dim R_d` for `R = Q[x1..xr]` with variables in degree 2.
pub fn ring_dim(r: usize, d: i64) -> usize {
    if d < 0 || d % 2 != 0 || r == 0 {
        return usize::from(d == 0 && r == 0);
    }
    binomial(d / 2 + r as i64 - 1, r as i64 - 1)
}

/// Hilbert function of a free module with the given generator degrees.
pub fn free_dim(r: usize, gens: &[i64], d: i64) -> usize {
    gens.iter().map(|g| ring_dim(r, d - g)).sum()
}
