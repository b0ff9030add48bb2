//! Cohomology of GKM-sheaves.
//!
//! On `Top(Γ)` the Godement resolution has two nonzero terms, so
//! `H^0 = ker(δ̃)` and `H^1 = coker(δ̃)` for
//!
//! ```text
//! δ̃: ∏_{x ∈ V ∪ E} F_x  ->  ∏_e ∏_{v ∈ I(e)} F_v,   δ̃(s)_(e,v) = res_(e,v)(s_e) - s_v
//! ```
//!
//! and higher cohomology vanishes. Edges whose restriction is an isomorphism
//! drop out, leaving the finite map `β` over the vertices and the
//! non-degenerate edges; everything below is computed from `β` and checked
//! against the full `δ̃`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::{
    degree_floor, minimal_generators, subquotient_torsion_probe, GradedFreeModule, GradedMap,
    HilbertFunction, KernelModule, ProbeVerdict,
};
use crate::hypergraph::{Hyperedge, VertexId};
use crate::linalg::{rank_of_rows, Rref, SparseVec};
use crate::polyring::HomogeneousPolynomial;
use crate::sheaf::{nondegenerate_edges, GkmSheaf};

/// Default cohomological cutoff degree.
pub const DEFAULT_CUTOFF: i64 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummandLabel {
    Vertex(VertexId),
    Edge(Hyperedge),
    EdgeVertex(Hyperedge, VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub label: SummandLabel,
    pub module: GradedFreeModule,
}

/// A map of free modules presented as a block matrix over labeled summands.
#[derive(Clone, Debug)]
pub struct BetaComplex {
    pub domain: Vec<Summand>,
    pub codomain: Vec<Summand>,
    pub map: GradedMap,
}

impl BetaComplex {
    pub fn domain_module(&self) -> &GradedFreeModule {
        self.map.source()
    }

    pub fn codomain_module(&self) -> &GradedFreeModule {
        self.map.target()
    }

    /// Number of domain summands that are vertex stalks (they come first).
    pub fn vertex_summands(&self) -> usize {
        self.domain
            .iter()
            .take_while(|s| matches!(s.label, SummandLabel::Vertex(_)))
            .count()
    }
}

/// Block map over the vertices and the given edges: row `(e, v)` carries
/// `-id` in the `F_v` column and `res_(e,v)` in the `F_e` column.
fn assemble(sheaf: &GkmSheaf, edges: &[Hyperedge]) -> BetaComplex {
    let r = sheaf.torus_rank();
    let mut domain: Vec<Summand> = sheaf
        .vertex_stalks()
        .iter()
        .map(|(v, m)| Summand {
            label: SummandLabel::Vertex(v.clone()),
            module: m.clone(),
        })
        .collect();
    let vertex_index: BTreeMap<&VertexId, usize> = sheaf
        .vertex_stalks()
        .keys()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut codomain = Vec::new();
    let mut blocks = Vec::new();
    for e in edges {
        let data = sheaf.edge_data(e).expect("explicit edge");
        let edge_col = domain.len();
        domain.push(Summand {
            label: SummandLabel::Edge(e.clone()),
            module: data.stalk.clone(),
        });
        for v in e.block() {
            let row = codomain.len();
            let vm = sheaf.vertex_stalks()[v].clone();
            codomain.push(Summand {
                label: SummandLabel::EdgeVertex(e.clone(), v.clone()),
                module: vm.clone(),
            });
            let minus_id = GradedMap::scalar(&vm, &HomogeneousPolynomial::from_int(r, -1));
            blocks.push((row, vertex_index[v], minus_id));
            blocks.push((row, edge_col, data.restrictions[v].clone()));
        }
    }
    let sources: Vec<GradedFreeModule> = domain.iter().map(|s| s.module.clone()).collect();
    let targets: Vec<GradedFreeModule> = codomain.iter().map(|s| s.module.clone()).collect();
    let map =
        GradedMap::from_blocks(r, &sources, &targets, blocks).expect("blocks fit by construction");
    BetaComplex {
        domain,
        codomain,
        map,
    }
}

/// `β` over the vertices and the non-degenerate edges.
pub fn beta_map(sheaf: &GkmSheaf) -> BetaComplex {
    assemble(sheaf, &nondegenerate_edges(sheaf))
}

/// The full `δ̃` over the vertices and every explicit edge.
pub fn delta_tilde(sheaf: &GkmSheaf) -> BetaComplex {
    assemble(sheaf, &sheaf.graph().explicit_hyperedges())
}

/// Lowest tabulated degree for reports on this sheaf.
pub fn sheaf_floor(sheaf: &GkmSheaf) -> i64 {
    let edge_stalks = sheaf.edges().iter().map(|d| &d.stalk);
    degree_floor(sheaf.vertex_stalks().values().chain(edge_stalks))
}

/// Kernel and cokernel dimensions of a map in every degree of a range.
fn kernel_cokernel(map: &GradedMap, start: i64, cutoff: i64) -> (HilbertFunction, HilbertFunction) {
    let ranks = HilbertFunction::from_fn(start, cutoff, |d| map.rank_in_degree(d));
    let ker = HilbertFunction::from_fn(start, cutoff, |d| {
        map.source().dim(d) - ranks.dim(d).unwrap()
    });
    let coker = HilbertFunction::from_fn(start, cutoff, |d| {
        map.target().dim(d) - ranks.dim(d).unwrap()
    });
    (ker, coker)
}

/// `H^0` as a graded module: Hilbert function plus minimal generators
/// (complete up to the cutoff).
#[derive(Clone, Debug)]
pub struct GlobalSections {
    pub hilbert: HilbertFunction,
    pub module: KernelModule,
}

pub fn h0(sheaf: &GkmSheaf, cutoff: i64) -> GlobalSections {
    let beta = beta_map(sheaf);
    let start = sheaf_floor(sheaf);
    let hilbert = HilbertFunction::from_fn(start, cutoff, |d| {
        beta.map.source().dim(d) - beta.map.rank_in_degree(d)
    });
    GlobalSections {
        hilbert,
        module: minimal_generators(&beta.map, cutoff),
    }
}

pub fn h0_hilbert(sheaf: &GkmSheaf, cutoff: i64) -> HilbertFunction {
    let beta = beta_map(sheaf);
    kernel_cokernel(&beta.map, sheaf_floor(sheaf), cutoff).0
}

pub fn h1(sheaf: &GkmSheaf, cutoff: i64) -> HilbertFunction {
    let beta = beta_map(sheaf);
    kernel_cokernel(&beta.map, sheaf_floor(sheaf), cutoff).1
}

/// Representatives of a basis of `H^1` in degree `d`: the codomain basis
/// vectors in the non-pivot positions of the reduced image of `β_d`, one
/// polynomial per codomain generator.
pub fn h1_representatives(sheaf: &GkmSheaf, d: i64) -> Vec<Vec<HomogeneousPolynomial>> {
    let beta = beta_map(sheaf);
    let target = beta.map.target();
    let rref = Rref::of_rows(target.dim(d), &beta.map.realize_columns(d));
    let pivots: std::collections::BTreeSet<usize> = rref.pivots().into_iter().collect();
    (0..target.dim(d))
        .filter(|i| !pivots.contains(i))
        .map(|i| target.vector_to_polys(d, &vec![(i, num_traits::One::one())]))
        .collect()
}

/// Why `H^n` vanishes for `n >= 2`: vertex stalks of `F^1` are zero, edge
/// stalks of `F^1` are the products of incident vertex stalks, and so every
/// stalk of `F^2` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingCertificate {
    pub degree: usize,
    /// `(vertex, rank of F^1_v)`; always 0 since `U_v = {v}`.
    pub vertex_f1_ranks: Vec<(VertexId, usize)>,
    /// `(edge, rank of F^1_e)`: `F^1_e = coker(F_e -> F_e × ∏ F_v) ≅ ∏ F_v`.
    pub edge_f1_ranks: Vec<(Hyperedge, usize)>,
    /// Rank of every stalk of `F^2`; `F^2_e = coker(F^1_e -> F^1_e × ∏ F^1_v)`
    /// and the map is an isomorphism because `F^1_v = 0`.
    pub f2_ranks: Vec<usize>,
}

impl VanishingCertificate {
    pub fn holds(&self) -> bool {
        self.vertex_f1_ranks.iter().all(|(_, r)| *r == 0) && self.f2_ranks.iter().all(|r| *r == 0)
    }
}

pub fn hn_vanishing(sheaf: &GkmSheaf, n: usize) -> Result<VanishingCertificate> {
    if n < 2 {
        return Err(Error::LowDegree(n));
    }
    // F^1_v = coker(F_v -> C^0(F)_v = F_v), the identity.
    let vertex_f1_ranks: Vec<(VertexId, usize)> = sheaf
        .vertex_stalks()
        .iter()
        .map(|(v, m)| {
            (
                v.clone(),
                m.rank() - GradedMap::identity(m.clone()).source().rank(),
            )
        })
        .collect();
    // F^1_e = coker(ε) with ε = (id, res_e); the identity component splits ε.
    let edge_f1_ranks: Vec<(Hyperedge, usize)> = sheaf
        .edges()
        .iter()
        .map(|d| {
            let incident: usize = d
                .edge
                .block()
                .iter()
                .map(|v| sheaf.vertex_stalks()[v].rank())
                .sum();
            (d.edge.clone(), d.stalk.rank() + incident - d.stalk.rank())
        })
        .collect();
    // F^2_e = coker(F^1_e -> F^1_e × ∏ F^1_v) where every F^1_v is zero.
    let f2_ranks = edge_f1_ranks
        .iter()
        .map(|(e, f1)| {
            let f1_vertices: usize = e
                .block()
                .iter()
                .map(|v| {
                    vertex_f1_ranks
                        .iter()
                        .find(|(w, _)| w == v)
                        .map_or(0, |(_, r)| *r)
                })
                .sum();
            f1 + f1_vertices - f1
        })
        .chain(vertex_f1_ranks.iter().map(|_| 0))
        .collect();
    Ok(VanishingCertificate {
        degree: n,
        vertex_f1_ranks,
        edge_f1_ranks,
        f2_ranks,
    })
}

#[derive(Clone, Debug)]
pub struct LocalCohomology {
    pub per_edge: Vec<(Hyperedge, HilbertFunction)>,
    pub total: HilbertFunction,
}

/// `H^1_E ≅ ⊕_{e ∈ E^nd} coker(res_e)`.
pub fn local_h1(sheaf: &GkmSheaf, cutoff: i64) -> LocalCohomology {
    let start = sheaf_floor(sheaf);
    let per_edge: Vec<(Hyperedge, HilbertFunction)> = nondegenerate_edges(sheaf)
        .into_iter()
        .map(|e| {
            let res = sheaf.restriction_product(&e).expect("explicit edge");
            let coker = kernel_cokernel(&res, start, cutoff).1;
            (e, coker)
        })
        .collect();
    let total = per_edge
        .iter()
        .fold(HilbertFunction::zero(start, cutoff), |acc, (_, h)| {
            acc.add(h)
        });
    LocalCohomology { per_edge, total }
}

/// `H^0(V, F) = ⊕_v F_v`.
pub fn vertex_sections(sheaf: &GkmSheaf) -> GradedFreeModule {
    GradedFreeModule::direct_sum(sheaf.torus_rank(), sheaf.vertex_stalks().values())
}

/// Quotient map `⊕_{v ∈ I(e)} F_v,d -> coker(res_e)_d` in coordinates: the
/// cokernel basis is the set of non-pivot positions of the reduced image.
struct EdgeQuotient {
    /// For each coordinate of the target of `res_e`, its image in cokernel
    /// coordinates.
    images: Vec<SparseVec>,
    dim: usize,
}

impl EdgeQuotient {
    fn new(res: &GradedMap, d: i64) -> Self {
        let n = res.target().dim(d);
        let rref = Rref::of_rows(n, &res.realize_columns(d));
        let mut slot = vec![usize::MAX; n];
        let mut is_pivot = vec![false; n];
        for p in rref.pivots() {
            is_pivot[p] = true;
        }
        let mut dim = 0;
        for i in 0..n {
            if !is_pivot[i] {
                slot[i] = dim;
                dim += 1;
            }
        }
        let mut images = vec![Vec::new(); n];
        for i in 0..n {
            if !is_pivot[i] {
                images[i] = vec![(slot[i], num_traits::One::one())];
            }
        }
        for row in rref.rows() {
            let p = row[0].0;
            images[p] = row[1..].iter().map(|(j, c)| (slot[*j], -c)).collect();
        }
        EdgeQuotient { images, dim }
    }
}

/// The connecting map `⊕_v F_v -> ⊕_{e ∈ E^nd} coker(res_e)` in degree `d`,
/// sending a vertex tuple to the classes of its incident components. Returns
/// its columns (one per basis vector of `⊕_v F_v,d`) and the codomain
/// dimension.
pub fn connecting_map_columns(
    sheaf: &GkmSheaf,
    edges: &[Hyperedge],
    d: i64,
) -> (Vec<SparseVec>, usize) {
    let vertices: Vec<&VertexId> = sheaf.vertex_stalks().keys().collect();
    let vertex_offsets: BTreeMap<&VertexId, usize> = {
        let mut acc = 0;
        vertices
            .iter()
            .map(|v| {
                let o = acc;
                acc += sheaf.vertex_stalks()[*v].dim(d);
                (*v, o)
            })
            .collect()
    };
    let total_vertex_dim: usize = sheaf.vertex_stalks().values().map(|m| m.dim(d)).sum();
    let mut columns: Vec<SparseVec> = vec![Vec::new(); total_vertex_dim];
    let mut row_offset = 0;
    for e in edges {
        let res = sheaf.restriction_product(e).expect("explicit edge");
        let quotient = EdgeQuotient::new(&res, d);
        let mut local = 0;
        for v in e.block() {
            let vd = sheaf.vertex_stalks()[v].dim(d);
            for k in 0..vd {
                let col = &mut columns[vertex_offsets[v] + k];
                col.extend(
                    quotient.images[local + k]
                        .iter()
                        .map(|(i, c)| (row_offset + i, c.clone())),
                );
            }
            local += vd;
        }
        row_offset += quotient.dim;
    }
    (columns, row_offset)
}

/// Verdicts on `0 -> H^0 -> ⊕ F_v -> H^1_E -> H^1 -> 0` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeExactness {
    pub degree: i64,
    pub h0: usize,
    pub vertex_sections: usize,
    pub local_h1: usize,
    pub h1: usize,
    /// `h0 - vertex_sections + local_h1 - h1`.
    pub alternating_sum: i64,
    /// `H^0 -> ⊕ F_v` is injective.
    pub injective: bool,
    /// The composite `H^0 -> ⊕ F_v -> H^1_E` is zero and the kernel of the
    /// connecting map has the dimension of the image of `H^0`.
    pub exact_at_vertices: bool,
    /// `H^1_E -> H^1` is surjective with kernel the image of the connecting
    /// map.
    pub exact_at_local: bool,
}

impl DegreeExactness {
    pub fn passed(&self) -> bool {
        self.alternating_sum == 0 && self.injective && self.exact_at_vertices && self.exact_at_local
    }
}

pub fn check_local_sequence(sheaf: &GkmSheaf, cutoff: i64) -> Vec<DegreeExactness> {
    let beta = beta_map(sheaf);
    let edges = nondegenerate_edges(sheaf);
    let start = sheaf_floor(sheaf);
    if cutoff < start {
        return Vec::new();
    }
    let nvertex = beta.vertex_summands();
    let vertex_module = vertex_sections(sheaf);
    (start..=cutoff)
        .into_par_iter()
        .map(|d| {
            let beta_cols = beta.map.realize_columns(d);
            let domain_dim = beta_cols.len();
            let codomain_dim = beta.map.target().dim(d);
            let beta_rank = rank_of_rows(&beta_cols);
            let h0 = domain_dim - beta_rank;
            let h1 = codomain_dim - beta_rank;
            let vdim = vertex_module.dim(d);
            debug_assert_eq!(
                vdim,
                beta.domain[..nvertex]
                    .iter()
                    .map(|s| s.module.dim(d))
                    .sum::<usize>()
            );

            let (delta_cols, local_dim) = connecting_map_columns(sheaf, &edges, d);
            let delta_rank = rank_of_rows(&delta_cols);

            // [β; π]: a kernel element with zero vertex part.
            let mut stacked: Vec<SparseVec> = beta_cols.clone();
            for (k, col) in stacked.iter_mut().enumerate().take(vdim) {
                col.push((codomain_dim + k, num_traits::One::one()));
            }
            let injective = domain_dim - rank_of_rows(&stacked) == 0;

            // [β; δ∘π] has the rank of β iff δ∘π vanishes on ker β.
            let mut composite: Vec<SparseVec> = beta_cols;
            for (col, dcol) in composite.iter_mut().zip(&delta_cols) {
                col.extend(dcol.iter().map(|(i, c)| (codomain_dim + i, c.clone())));
            }
            let composite_zero = rank_of_rows(&composite) == beta_rank;
            let image_of_h0 = h0 - (domain_dim - rank_of_rows(&stacked));
            let kernel_delta = vdim - delta_rank;
            let exact_at_vertices = composite_zero && kernel_delta == image_of_h0;
            let exact_at_local = h1 == local_dim - delta_rank;

            DegreeExactness {
                degree: d,
                h0,
                vertex_sections: vdim,
                local_h1: local_dim,
                h1,
                alternating_sum: h0 as i64 - vdim as i64 + local_dim as i64 - h1 as i64,
                injective,
                exact_at_vertices,
                exact_at_local,
            }
        })
        .collect()
}

/// Structural evidence that `H^0` is reflexive: it is the kernel of a map
/// between finitely generated free modules (a second syzygy), plus the
/// torsion probe as a computational sanity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexivityEvidence {
    pub free_source: GradedFreeModule,
    pub free_target: GradedFreeModule,
    /// `β` has zero codomain, so `H^0` is the free module `⊕ F_v`.
    pub free: bool,
    pub probe: ProbeVerdict,
    pub cutoff: i64,
}

impl ReflexivityEvidence {
    pub fn passed(&self) -> bool {
        self.probe.passed()
    }
}

pub fn reflexivity_evidence(sheaf: &GkmSheaf, cutoff: i64) -> ReflexivityEvidence {
    let beta = beta_map(sheaf);
    let probe = subquotient_torsion_probe(&beta.map, None, cutoff);
    ReflexivityEvidence {
        free_source: beta.map.source().clone(),
        free_target: beta.map.target().clone(),
        free: beta.map.target().rank() == 0,
        probe,
        cutoff,
    }
}

/// `H^0`/`H^1` from `β` compared with kernel/cokernel of the full `δ̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub beta_h0: HilbertFunction,
    pub beta_h1: HilbertFunction,
    pub full_h0: HilbertFunction,
    pub full_h1: HilbertFunction,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch().is_none()
    }

    pub fn first_mismatch(&self) -> Option<i64> {
        (self.beta_h0.start()..=self.beta_h0.cutoff()).find(|&d| {
            self.beta_h0.dim(d) != self.full_h0.dim(d) || self.beta_h1.dim(d) != self.full_h1.dim(d)
        })
    }
}

pub fn godement_crosscheck(sheaf: &GkmSheaf, cutoff: i64) -> CrossCheck {
    let start = sheaf_floor(sheaf);
    let (beta_h0, beta_h1) = kernel_cokernel(&beta_map(sheaf).map, start, cutoff);
    let (full_h0, full_h1) = kernel_cokernel(&delta_tilde(sheaf).map, start, cutoff);
    CrossCheck {
        beta_h0,
        beta_h1,
        full_h0,
        full_h1,
    }
}

/// Hilbert data shared by every report on one sheaf.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub cutoff: i64,
    pub start: i64,
    pub h0: HilbertFunction,
    pub h1: HilbertFunction,
    pub h0_generators: Option<KernelModule>,
    pub local_h1: LocalCohomology,
    pub vertex_sections: HilbertFunction,
}

pub fn cohomology_report(sheaf: &GkmSheaf, cutoff: i64, with_generators: bool) -> CohomologyReport {
    let beta = beta_map(sheaf);
    let start = sheaf_floor(sheaf);
    let (h0, h1) = kernel_cokernel(&beta.map, start, cutoff);
    let vertex_module = vertex_sections(sheaf);
    CohomologyReport {
        cutoff,
        start,
        h0,
        h1,
        h0_generators: with_generators.then(|| minimal_generators(&beta.map, cutoff)),
        local_h1: local_h1(sheaf, cutoff),
        vertex_sections: HilbertFunction::from_fn(start, cutoff, |d| vertex_module.dim(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedFreeModule;
    use crate::hypergraph::build_hypergraph;
    use crate::sheaf::{build_sheaf, EdgeSpec};

    fn s(v: &str) -> String {
        v.to_string()
    }

    fn sphere() -> GkmSheaf {
        let r = 1;
        let g = build_hypergraph(
            r,
            vec![s("N"), s("S")],
            vec![(vec![1], vec![vec![s("N"), s("S")]])],
        )
        .unwrap();
        let e = g.explicit_hyperedges().remove(0);
        let one = HomogeneousPolynomial::one(r);
        let spec = EdgeSpec {
            stalk: GradedFreeModule::new(r, vec![0, 2]),
            restrictions: BTreeMap::from([
                (
                    s("N"),
                    vec![vec![one.clone(), HomogeneousPolynomial::var(r, 0)]],
                ),
                (s("S"), vec![vec![one, HomogeneousPolynomial::zero(r, 2)]]),
            ]),
        };
        let stalks = BTreeMap::from([
            (s("N"), GradedFreeModule::ring(r)),
            (s("S"), GradedFreeModule::ring(r)),
        ]);
        build_sheaf(g, stalks, BTreeMap::from([(e, spec)])).unwrap()
    }

    #[test]
    fn sphere_beta_shape() {
        let b = beta_map(&sphere());
        let ranks: Vec<usize> = b.domain.iter().map(|s| s.module.rank()).collect();
        assert_eq!(ranks, vec![1, 1, 2]);
        assert_eq!(b.codomain_module().rank(), 2);
        let m0 = b.map.realize(0);
        assert_eq!((m0.nrows(), m0.ncols()), (2, 3));
        assert_eq!(m0.rank(), 2);
        assert_eq!(m0.nullity(), 1);
    }

    #[test]
    fn sphere_cohomology() {
        let f = sphere();
        let h = h0(&f, 6);
        assert_eq!(
            [0, 2, 4, 6].map(|d| h.hilbert.dim(d).unwrap()),
            [1, 2, 2, 2]
        );
        assert_eq!(h.module.generator_degrees(), vec![0, 2]);
        assert!(h1(&f, 6).is_zero());
        assert!(h1_representatives(&f, 0).is_empty());
        let local = local_h1(&f, 4);
        assert_eq!(local.per_edge.len(), 1);
        assert_eq!([0, 2, 4].map(|d| local.total.dim(d).unwrap()), [1, 0, 0]);
        assert!(check_local_sequence(&f, 10)
            .iter()
            .all(DegreeExactness::passed));
        assert!(godement_crosscheck(&f, 10).passed());
        let ev = reflexivity_evidence(&f, 10);
        assert_eq!((ev.free_source.rank(), ev.free_target.rank()), (4, 2));
        assert!(ev.passed());
    }

    #[test]
    fn vanishing_certificate() {
        let f = sphere();
        for n in [2, 7] {
            let c = hn_vanishing(&f, n).unwrap();
            assert!(c.holds());
            assert_eq!(c.edge_f1_ranks[0].1, 2);
        }
        assert_eq!(hn_vanishing(&f, 1), Err(Error::LowDegree(1)));
    }

    #[test]
    fn vertex_sections_examples() {
        assert_eq!(vertex_sections(&sphere()).generator_degrees(), &[0, 0]);
        let g = build_hypergraph::<Vec<i64>>(1, vec![], vec![]).unwrap();
        let empty = build_sheaf(g, BTreeMap::new(), BTreeMap::new()).unwrap();
        assert_eq!(vertex_sections(&empty).rank(), 0);
        assert!(h0_hilbert(&empty, 4).is_zero());
    }
}
