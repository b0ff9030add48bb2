//! Canonical GKM-sheaves on labeled graphs, the built-in examples, and the
//! Chang–Skjelbred report.

use std::collections::{BTreeMap, BTreeSet};

use crate::cohomology::{
    connecting_map_columns, h0_hilbert, h1, local_h1, sheaf_floor, LocalCohomology,
};
use crate::error::{Error, Result};
use crate::graded::{GradedFreeModule, HilbertFunction};
use crate::hypergraph::{build_hypergraph, GkmHypergraph, Hyperedge, VertexId};
use crate::linalg::rank_of_rows;
use crate::polyring::{normalize_projective, HomogeneousPolynomial, ProjectiveWeight, Weight};
use crate::sheaf::{build_sheaf, nondegenerate_edges, EdgeSpec, GkmSheaf};

/// A moment-graph style description: edges (or larger blocks) labeled by
/// weights. Blocks under one weight that share a vertex are merged, and
/// vertices not listed under a weight become singletons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub torus_rank: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(Vec<VertexId>, Vec<i64>)>,
}

impl LabeledGraph {
    pub fn to_hypergraph(&self) -> Result<GkmHypergraph> {
        let known: BTreeSet<&VertexId> = self.vertices.iter().collect();
        let mut by_weight: BTreeMap<ProjectiveWeight, Vec<BTreeSet<VertexId>>> = BTreeMap::new();
        for (block, w) in &self.edges {
            if w.len() != self.torus_rank {
                return Err(Error::RankMismatch {
                    expected: self.torus_rank,
                    found: w.len(),
                });
            }
            if block.is_empty() {
                return Err(Error::NotAPartition("empty edge".into()));
            }
            if let Some(v) = block.iter().find(|v| !known.contains(v)) {
                return Err(Error::UnknownElement(format!("vertex {v}")));
            }
            let key = normalize_projective(&Weight::new(w.clone()))?;
            let blocks = by_weight.entry(key).or_default();
            let mut merged: BTreeSet<VertexId> = block.iter().cloned().collect();
            blocks.retain(|b| {
                if b.is_disjoint(&merged) {
                    true
                } else {
                    merged.extend(b.iter().cloned());
                    false
                }
            });
            blocks.push(merged);
        }
        let relations = by_weight
            .into_iter()
            .map(|(w, mut blocks)| {
                let covered: BTreeSet<VertexId> = blocks.iter().flatten().cloned().collect();
                blocks.extend(
                    self.vertices
                        .iter()
                        .filter(|v| !covered.contains(*v))
                        .map(|v| BTreeSet::from([v.clone()])),
                );
                let blocks: Vec<Vec<VertexId>> = blocks
                    .into_iter()
                    .map(|b| b.into_iter().collect())
                    .collect();
                (Weight::from(w), blocks)
            })
            .collect();
        build_hypergraph(self.torus_rank, self.vertices.clone(), relations)
    }
}

/// Edge stalk and restrictions of the canonical sheaf on one block.
///
/// The edge stalk is free on `(1, …, 1)` in degree 0 and `ℓ·u_j` in degree 2
/// for the first `k - 1` vertices `u_j` of the block; the last vertex sees
/// only the constant generator. A singleton gets the identity.
pub fn canonical_edge_spec(rank: usize, edge: &Hyperedge) -> EdgeSpec {
    let k = edge.block().len();
    let ell = edge.weight().linear_form();
    let mut degrees = vec![0];
    degrees.extend(std::iter::repeat_n(2, k - 1));
    let restrictions = edge
        .block()
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let mut row = vec![HomogeneousPolynomial::one(rank)];
            row.extend((1..k).map(|c| {
                if c == j + 1 {
                    ell.clone()
                } else {
                    HomogeneousPolynomial::zero(rank, 2)
                }
            }));
            (v.clone(), vec![row])
        })
        .collect();
    EdgeSpec {
        stalk: GradedFreeModule::new(rank, degrees),
        restrictions,
    }
}

/// The canonical sheaf on a hypergraph: rank-one vertex stalks `R`, and on
/// each block the sections that agree modulo the block's weight.
pub fn canonical_sheaf_on(graph: GkmHypergraph) -> Result<GkmSheaf> {
    let r = graph.torus_rank();
    let stalks = graph
        .vertices()
        .iter()
        .map(|v| (v.clone(), GradedFreeModule::ring(r)))
        .collect();
    let specs = graph
        .explicit_hyperedges()
        .into_iter()
        .map(|e| {
            let spec = canonical_edge_spec(r, &e);
            (e, spec)
        })
        .collect();
    build_sheaf(graph, stalks, specs)
}

pub fn canonical_sheaf(g: &LabeledGraph) -> Result<GkmSheaf> {
    canonical_sheaf_on(g.to_hypergraph()?)
}

fn names(prefix: &str, n: usize) -> Vec<VertexId> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn example_point(r: usize) -> GkmSheaf {
    canonical_sheaf(&LabeledGraph {
        torus_rank: r,
        vertices: vec!["p".into()],
        edges: vec![],
    })
    .expect("point is valid")
}

pub fn example_sphere(alpha: &[i64]) -> Result<GkmSheaf> {
    canonical_sheaf(&LabeledGraph {
        torus_rank: alpha.len(),
        vertices: vec!["N".into(), "S".into()],
        edges: vec![(vec!["N".into(), "S".into()], alpha.to_vec())],
    })
}

/// Two vertices joined by two edges with distinct weights. A valid
/// GKM-hypergraph with `H^1 != 0`; synthetic, not the graph of a manifold.
pub fn example_theta(alpha: &[i64], beta: &[i64]) -> Result<GkmSheaf> {
    if alpha.len() != beta.len() {
        return Err(Error::RankMismatch {
            expected: alpha.len(),
            found: beta.len(),
        });
    }
    let a = normalize_projective(&Weight::new(alpha.to_vec()))?;
    if a == normalize_projective(&Weight::new(beta.to_vec()))? {
        return Err(Error::DuplicateWeight(a.coeffs().to_vec()));
    }
    let pair = vec!["N".to_string(), "S".to_string()];
    canonical_sheaf(&LabeledGraph {
        torus_rank: alpha.len(),
        vertices: pair.clone(),
        edges: vec![(pair.clone(), alpha.to_vec()), (pair, beta.to_vec())],
    })
}

/// `CP^n` with the standard action of a rank `n + 1` torus: vertices
/// `v0..vn`, and an edge `{vi, vj}` with weight `e_i - e_j` for each `i < j`.
pub fn example_cpn(n: usize) -> Result<GkmSheaf> {
    if n == 0 {
        return Err(Error::InvalidInput("example_cpn needs n >= 1".into()));
    }
    let r = n + 1;
    let vertices = names("v", r);
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut w = vec![0; r];
            w[i] = 1;
            w[j] = -1;
            edges.push((vec![vertices[i].clone(), vertices[j].clone()], w));
        }
    }
    canonical_sheaf(&LabeledGraph {
        torus_rank: r,
        vertices,
        edges,
    })
}

/// Two vertices with stalks `R ⊕ R(-2)` and only singleton edges, all
/// restricting by the identity.
pub fn example_all_identity() -> GkmSheaf {
    let r = 2;
    let graph = build_hypergraph(
        r,
        vec!["a".into(), "b".into()],
        vec![
            (vec![1, 0], vec![vec!["a".into()], vec!["b".into()]]),
            (vec![1, 1], vec![vec!["a".into()], vec!["b".into()]]),
        ],
    )
    .expect("valid graph");
    let stalk = GradedFreeModule::new(r, vec![0, 2]);
    let stalks = graph
        .vertices()
        .iter()
        .map(|v| (v.clone(), stalk.clone()))
        .collect();
    let specs = graph
        .explicit_hyperedges()
        .into_iter()
        .map(|e| {
            let v = e.block().first().unwrap().clone();
            let spec = identity_spec(&stalk);
            (
                e,
                EdgeSpec {
                    stalk: spec.0,
                    restrictions: BTreeMap::from([(v, spec.1)]),
                },
            )
        })
        .collect();
    build_sheaf(graph, stalks, specs).expect("valid sheaf")
}

fn identity_spec(m: &GradedFreeModule) -> (GradedFreeModule, Vec<Vec<HomogeneousPolynomial>>) {
    let r = m.ring_rank();
    let n = m.rank();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        HomogeneousPolynomial::one(r)
                    } else {
                        let deg = m.generator_degrees()[j] - m.generator_degrees()[i];
                        HomogeneousPolynomial::zero(r, deg.max(0) as u32)
                    }
                })
                .collect()
        })
        .collect();
    (m.clone(), entries)
}

/// Names accepted by [`example`].
pub const EXAMPLE_NAMES: [&str; 7] = ["point", "sphere", "theta", "cp1", "cp2", "cp3", "identity"];

pub fn example(name: &str) -> Option<GkmSheaf> {
    Some(match name {
        "point" => example_point(1),
        "sphere" => example_sphere(&[1]).unwrap(),
        "theta" => example_theta(&[1, 0], &[0, 1]).unwrap(),
        "cp1" => example_cpn(1).unwrap(),
        "cp2" => example_cpn(2).unwrap(),
        "cp3" => example_cpn(3).unwrap(),
        "identity" => example_all_identity(),
        _ => return None,
    })
}

/// Adds a new weight whose classes are all singletons, each restricting to
/// its vertex stalk by the identity. Such edges are degenerate.
pub fn insert_degenerate_edge(sheaf: &GkmSheaf, weight: &[i64]) -> Result<GkmSheaf> {
    let graph = sheaf.graph();
    let mut relations: Vec<(Weight, Vec<Vec<VertexId>>)> = graph
        .relations()
        .iter()
        .map(|(w, blocks)| {
            (
                Weight::from(w.clone()),
                blocks.iter().map(|b| b.iter().cloned().collect()).collect(),
            )
        })
        .collect();
    relations.push((
        Weight::new(weight.to_vec()),
        graph.vertices().iter().map(|v| vec![v.clone()]).collect(),
    ));
    let new_graph = build_hypergraph(
        graph.torus_rank(),
        graph.vertices().iter().cloned().collect(),
        relations,
    )?;
    let mut specs: BTreeMap<Hyperedge, EdgeSpec> = sheaf
        .edges()
        .iter()
        .map(|d| {
            let restrictions = d
                .restrictions
                .iter()
                .map(|(v, m)| (v.clone(), m.entries().to_vec()))
                .collect();
            (
                d.edge.clone(),
                EdgeSpec {
                    stalk: d.stalk.clone(),
                    restrictions,
                },
            )
        })
        .collect();
    for e in new_graph.explicit_hyperedges() {
        if let std::collections::btree_map::Entry::Vacant(slot) = specs.entry(e) {
            let v = slot.key().block().first().unwrap().clone();
            let (stalk, entries) = identity_spec(&sheaf.vertex_stalks()[&v]);
            slot.insert(EdgeSpec {
                stalk,
                restrictions: BTreeMap::from([(v, entries)]),
            });
        }
    }
    build_sheaf(new_graph, sheaf.vertex_stalks().clone(), specs)
}

/// `0 -> H^0 -> ⊕ F_v -> ⊕ coker(res_e) -> H^1 -> 0` with the vertex stalks
/// modeling `H_T(X_0)` and the edge cokernels modeling `H_T^{+1}(X_1, X_0)`.
#[derive(Clone, Debug)]
pub struct ChangSkjelbredReport {
    pub x0_model: GradedFreeModule,
    pub x1_rel_model: LocalCohomology,
    pub kernel: HilbertFunction,
    pub cokernel: HilbertFunction,
    pub h0: HilbertFunction,
    pub h1: HilbertFunction,
}

impl ChangSkjelbredReport {
    pub fn kernel_matches_h0(&self) -> bool {
        self.kernel == self.h0
    }

    pub fn cokernel_matches_h1(&self) -> bool {
        self.cokernel == self.h1
    }

    pub fn passed(&self) -> bool {
        self.kernel_matches_h0() && self.cokernel_matches_h1()
    }
}

pub fn chang_skjelbred_report(sheaf: &GkmSheaf, cutoff: i64) -> ChangSkjelbredReport {
    let edges = nondegenerate_edges(sheaf);
    let start = sheaf_floor(sheaf);
    let ranks = HilbertFunction::from_fn(start, cutoff, |d| {
        rank_of_rows(&connecting_map_columns(sheaf, &edges, d).0)
    });
    let x0_model = crate::cohomology::vertex_sections(sheaf);
    let x1_rel_model = local_h1(sheaf, cutoff);
    let kernel =
        HilbertFunction::from_fn(start, cutoff, |d| x0_model.dim(d) - ranks.dim(d).unwrap());
    let cokernel = HilbertFunction::from_fn(start, cutoff, |d| {
        x1_rel_model.total.dim(d).unwrap() - ranks.dim(d).unwrap()
    });
    ChangSkjelbredReport {
        x0_model,
        x1_rel_model,
        kernel,
        cokernel,
        h0: h0_hilbert(sheaf, cutoff),
        h1: h1(sheaf, cutoff),
    }
}
