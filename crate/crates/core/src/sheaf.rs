//! GKM-sheaves: free stalks on vertices and explicit hyperedges, restriction
//! maps from each edge stalk to the stalks of its incident vertices, and the
//! axiom checks.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graded::{determinant, GradedFreeModule, GradedMap};
use crate::hypergraph::{GkmHypergraph, Hyperedge, VertexId};
use crate::polyring::HomogeneousPolynomial;

/// Stalk and restriction data for one explicit hyperedge, as supplied by the
/// caller. Restrictions are raw entry matrices (vertex stalk rank by edge
/// stalk rank).
#[derive(Clone, Debug)]
pub struct EdgeSpec {
    pub stalk: GradedFreeModule,
    pub restrictions: BTreeMap<VertexId, Vec<Vec<HomogeneousPolynomial>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub edge: Hyperedge,
    pub stalk: GradedFreeModule,
    /// Keyed by incident vertex.
    pub restrictions: BTreeMap<VertexId, GradedMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmSheaf {
    graph: GkmHypergraph,
    vertex_stalks: BTreeMap<VertexId, GradedFreeModule>,
    /// Aligned with `graph.explicit_hyperedges()`.
    edges: Vec<EdgeData>,
}

pub fn build_sheaf(
    graph: GkmHypergraph,
    vertex_stalks: BTreeMap<VertexId, GradedFreeModule>,
    mut edge_specs: BTreeMap<Hyperedge, EdgeSpec>,
) -> Result<GkmSheaf> {
    let r = graph.torus_rank();
    for v in graph.vertices() {
        let stalk = vertex_stalks
            .get(v)
            .ok_or_else(|| Error::MissingData(format!("stalk for vertex {v}")))?;
        check_ring_rank(r, stalk)?;
    }
    if let Some(v) = vertex_stalks
        .keys()
        .find(|v| !graph.vertices().contains(*v))
    {
        return Err(Error::UnknownElement(format!("vertex {v}")));
    }
    let mut edges = Vec::new();
    for edge in graph.explicit_hyperedges() {
        let spec = edge_specs
            .remove(&edge)
            .ok_or_else(|| Error::MissingData(format!("stalk for hyperedge {edge}")))?;
        check_ring_rank(r, &spec.stalk)?;
        let mut given = spec.restrictions;
        let mut restrictions = BTreeMap::new();
        for v in edge.block() {
            let entries = given
                .remove(v)
                .ok_or_else(|| Error::MissingData(format!("restriction from {edge} to {v}")))?;
            let map = GradedMap::new(spec.stalk.clone(), vertex_stalks[v].clone(), entries)
                .map_err(|e| match e {
                    Error::DegreeMismatch(msg) => {
                        Error::DegreeMismatch(format!("restriction from {edge} to {v}: {msg}"))
                    }
                    other => other,
                })?;
            restrictions.insert(v.clone(), map);
        }
        if let Some(v) = given.keys().next() {
            return Err(Error::UnknownElement(format!(
                "restriction from {edge} to non-incident vertex {v}"
            )));
        }
        edges.push(EdgeData {
            edge,
            stalk: spec.stalk,
            restrictions,
        });
    }
    if let Some(e) = edge_specs.keys().next() {
        return Err(Error::UnknownElement(format!(
            "hyperedge {e} is not an explicit class"
        )));
    }
    Ok(GkmSheaf {
        graph,
        vertex_stalks,
        edges,
    })
}

fn check_ring_rank(r: usize, m: &GradedFreeModule) -> Result<()> {
    if m.ring_rank() != r {
        return Err(Error::RankMismatch {
            expected: r,
            found: m.ring_rank(),
        });
    }
    Ok(())
}

impl GkmSheaf {
    pub fn graph(&self) -> &GkmHypergraph {
        &self.graph
    }

    pub fn torus_rank(&self) -> usize {
        self.graph.torus_rank()
    }

    pub fn vertex_stalks(&self) -> &BTreeMap<VertexId, GradedFreeModule> {
        &self.vertex_stalks
    }

    pub fn vertex_stalk(&self, v: &str) -> Option<&GradedFreeModule> {
        self.vertex_stalks.get(v)
    }

    pub fn edges(&self) -> &[EdgeData] {
        &self.edges
    }

    pub fn edge_data(&self, e: &Hyperedge) -> Option<&EdgeData> {
        self.edges.iter().find(|d| &d.edge == e)
    }

    /// Stalk at a hyperedge. Implicit edges carry their vertex's stalk.
    pub fn edge_stalk(&self, e: &Hyperedge) -> Result<GradedFreeModule> {
        if let Some(d) = self.edge_data(e) {
            return Ok(d.stalk.clone());
        }
        if self.graph.contains_edge(e) {
            let v = e.block().iter().next().expect("nonempty block");
            return Ok(self.vertex_stalks[v].clone());
        }
        Err(Error::UnknownElement(format!("hyperedge {e}")))
    }

    /// `res_e: F_e -> ⊕_{v ∈ I(e)} F_v`, vertex blocks in vertex order.
    /// Implicit edges restrict by the identity.
    pub fn restriction_product(&self, e: &Hyperedge) -> Result<GradedMap> {
        let r = self.torus_rank();
        match self.edge_data(e) {
            Some(d) => {
                let targets: Vec<GradedFreeModule> = e
                    .block()
                    .iter()
                    .map(|v| self.vertex_stalks[v].clone())
                    .collect();
                let blocks = e
                    .block()
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (i, 0, d.restrictions[v].clone()))
                    .collect();
                GradedMap::from_blocks(r, std::slice::from_ref(&d.stalk), &targets, blocks)
            }
            None => Ok(GradedMap::identity(self.edge_stalk(e)?)),
        }
    }
}

/// Outcome of the localization axiom on one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Localization {
    /// `det(res_e) = unit * a(e)^multiplicity`.
    Pass {
        determinant: HomogeneousPolynomial,
        multiplicity: u32,
        unit: HomogeneousPolynomial,
    },
    RankMismatch {
        edge_rank: usize,
        vertex_rank: usize,
    },
    /// The determinant is not a unit times a power of the edge's linear form;
    /// `cofactor` is what remains after dividing out the form.
    Fail {
        determinant: HomogeneousPolynomial,
        multiplicity: u32,
        cofactor: HomogeneousPolynomial,
    },
}

impl Localization {
    pub fn passed(&self) -> bool {
        matches!(self, Localization::Pass { .. })
    }

    /// Whether `res_e` is an isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        matches!(
            self,
            Localization::Pass {
                multiplicity: 0,
                ..
            }
        )
    }
}

impl fmt::Display for Localization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Localization::Pass {
                determinant,
                multiplicity,
                unit,
            } => write!(f, "PASS det = {determinant} = ({unit}) * l^{multiplicity}"),
            Localization::RankMismatch { edge_rank, vertex_rank } => {
                write!(f, "FAIL rank mismatch: edge stalk rank {edge_rank}, incident vertex rank {vertex_rank}")
            }
            Localization::Fail {
                determinant,
                multiplicity,
                cofactor,
            } => write!(
                f,
                "FAIL det = {determinant} = l^{multiplicity} * ({cofactor}), cofactor is not a nonzero constant"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCheck {
    pub edge: Hyperedge,
    pub localization: Localization,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// Stalks are free by construction.
    pub locally_free: bool,
    pub localization: Vec<EdgeCheck>,
    /// Holds for any finite presentation; the non-isomorphism edges are
    /// listed in `nondegenerate`.
    pub finiteness: bool,
    pub nondegenerate: Vec<Hyperedge>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.locally_free
            && self.finiteness
            && self.localization.iter().all(|c| c.localization.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &EdgeCheck> {
        self.localization
            .iter()
            .filter(|c| !c.localization.passed())
    }
}

/// Localization check for one edge: equal ranks, and the determinant of
/// `res_e` divided by the linear form of `a(e)` as often as possible leaves
/// a nonzero constant.
pub fn check_localization(sheaf: &GkmSheaf, e: &Hyperedge) -> Result<Localization> {
    let res = sheaf.restriction_product(e)?;
    let edge_rank = res.source().rank();
    let vertex_rank = res.target().rank();
    if edge_rank != vertex_rank {
        return Ok(Localization::RankMismatch {
            edge_rank,
            vertex_rank,
        });
    }
    let det = determinant(&res)?;
    if det.is_zero() {
        return Ok(Localization::Fail {
            cofactor: det.clone(),
            determinant: det,
            multiplicity: 0,
        });
    }
    let (multiplicity, cofactor) = det.strip_factor(&e.weight().linear_form());
    Ok(if cofactor.is_unit() {
        Localization::Pass {
            determinant: det,
            multiplicity,
            unit: cofactor,
        }
    } else {
        Localization::Fail {
            determinant: det,
            multiplicity,
            cofactor,
        }
    })
}

pub fn validate_axioms(sheaf: &GkmSheaf) -> AxiomReport {
    let localization: Vec<EdgeCheck> = sheaf
        .edges
        .iter()
        .map(|d| EdgeCheck {
            edge: d.edge.clone(),
            localization: check_localization(sheaf, &d.edge).expect("explicit edge"),
        })
        .collect();
    let nondegenerate = localization
        .iter()
        .filter(|c| !c.localization.is_isomorphism())
        .map(|c| c.edge.clone())
        .collect();
    AxiomReport {
        locally_free: true,
        localization,
        finiteness: true,
        nondegenerate,
    }
}

/// Explicit edges whose restriction is not an isomorphism, in edge order.
pub fn nondegenerate_edges(sheaf: &GkmSheaf) -> Vec<Hyperedge> {
    sheaf
        .edges
        .iter()
        .filter(|d| {
            !check_localization(sheaf, &d.edge)
                .expect("explicit edge")
                .is_isomorphism()
        })
        .map(|d| d.edge.clone())
        .collect()
}
