//! GKM-hypergraphs and the finite space `Top(Γ)`.
//!
//! Only finitely many weights carry an explicit equivalence relation; every
//! other projective weight implicitly partitions the vertices into
//! singletons.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{normalize_projective, ProjectiveWeight, Weight};

pub type VertexId = String;

/// An equivalence class of `~_weight`, paired with its weight.
///
/// Ordered by weight, then by block (blocks of one weight are disjoint, so
/// this is the order of their smallest vertices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperedge {
    weight: ProjectiveWeight,
    block: BTreeSet<VertexId>,
}

impl Hyperedge {
    pub fn new(weight: ProjectiveWeight, block: BTreeSet<VertexId>) -> Self {
        Hyperedge { weight, block }
    }

    /// The axial function `a(e)`.
    pub fn weight(&self) -> &ProjectiveWeight {
        &self.weight
    }

    /// The incidence function `I(e)`, in vertex order.
    pub fn block(&self) -> &BTreeSet<VertexId> {
        &self.block
    }

    pub fn is_singleton(&self) -> bool {
        self.block.len() == 1
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.block.iter().map(String::as_str).collect();
        write!(f, "{{{}}}@{}", names.join(","), self.weight)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmHypergraph {
    torus_rank: usize,
    vertices: BTreeSet<VertexId>,
    relations: BTreeMap<ProjectiveWeight, Vec<BTreeSet<VertexId>>>,
}

/// A point of `Top(Γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Vertex(VertexId),
    Edge(Hyperedge),
}

pub fn build_hypergraph<W>(
    torus_rank: usize,
    vertices: Vec<VertexId>,
    relations: Vec<(W, Vec<Vec<VertexId>>)>,
) -> Result<GkmHypergraph>
where
    W: Into<Weight>,
{
    let mut vertex_set = BTreeSet::new();
    for v in vertices {
        if !vertex_set.insert(v.clone()) {
            return Err(Error::InvalidInput(format!("duplicate vertex {v}")));
        }
    }
    let mut rels = BTreeMap::new();
    for (w, blocks) in relations {
        let w: Weight = w.into();
        if w.coeffs().len() != torus_rank {
            return Err(Error::RankMismatch {
                expected: torus_rank,
                found: w.coeffs().len(),
            });
        }
        let key = normalize_projective(&w)?;
        let partition = check_partition(&vertex_set, &key, blocks)?;
        if rels.insert(key.clone(), partition).is_some() {
            return Err(Error::DuplicateWeight(key.coeffs().to_vec()));
        }
    }
    Ok(GkmHypergraph {
        torus_rank,
        vertices: vertex_set,
        relations: rels,
    })
}

fn check_partition(
    vertices: &BTreeSet<VertexId>,
    weight: &ProjectiveWeight,
    blocks: Vec<Vec<VertexId>>,
) -> Result<Vec<BTreeSet<VertexId>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(blocks.len());
    for block in blocks {
        if block.is_empty() {
            return Err(Error::NotAPartition(format!(
                "empty block under weight {weight}"
            )));
        }
        let mut set = BTreeSet::new();
        for v in block {
            if !vertices.contains(&v) {
                return Err(Error::UnknownElement(format!(
                    "vertex {v} under weight {weight}"
                )));
            }
            if !seen.insert(v.clone()) || !set.insert(v.clone()) {
                return Err(Error::NotAPartition(format!(
                    "vertex {v} appears twice under weight {weight}"
                )));
            }
        }
        out.push(set);
    }
    if let Some(missing) = vertices.iter().find(|v| !seen.contains(*v)) {
        return Err(Error::NotAPartition(format!(
            "vertex {missing} is not covered under weight {weight}"
        )));
    }
    out.sort();
    Ok(out)
}

impl GkmHypergraph {
    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn relations(&self) -> &BTreeMap<ProjectiveWeight, Vec<BTreeSet<VertexId>>> {
        &self.relations
    }

    /// Every block of every explicit relation, in weight then block order.
    /// Implicit singleton edges of unlisted weights are not enumerated.
    pub fn explicit_hyperedges(&self) -> Vec<Hyperedge> {
        self.relations
            .iter()
            .flat_map(|(w, blocks)| {
                blocks
                    .iter()
                    .map(move |b| Hyperedge::new(w.clone(), b.clone()))
            })
            .collect()
    }

    pub fn is_explicit(&self, e: &Hyperedge) -> bool {
        self.relations
            .get(e.weight())
            .is_some_and(|blocks| blocks.contains(e.block()))
    }

    /// True for explicit edges and for implicit singletons of unlisted
    /// weights.
    pub fn contains_edge(&self, e: &Hyperedge) -> bool {
        if e.weight().rank() != self.torus_rank {
            return false;
        }
        match self.relations.get(e.weight()) {
            Some(blocks) => blocks.contains(e.block()),
            None => e.is_singleton() && e.block().iter().all(|v| self.vertices.contains(v)),
        }
    }

    pub fn contains(&self, x: &Point) -> bool {
        match x {
            Point::Vertex(v) => self.vertices.contains(v),
            Point::Edge(e) => self.contains_edge(e),
        }
    }
}

/// Smallest open set containing `x`: `U_v = {v}`, `U_e = {e} ∪ I(e)`.
pub fn basic_open(graph: &GkmHypergraph, x: &Point) -> Result<BTreeSet<Point>> {
    if !graph.contains(x) {
        return Err(Error::UnknownElement(match x {
            Point::Vertex(v) => format!("vertex {v}"),
            Point::Edge(e) => format!("hyperedge {e}"),
        }));
    }
    let mut out = BTreeSet::new();
    out.insert(x.clone());
    if let Point::Edge(e) = x {
        out.extend(e.block().iter().cloned().map(Point::Vertex));
    }
    Ok(out)
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl From<ProjectiveWeight> for Weight {
    fn from(w: ProjectiveWeight) -> Self {
        Weight(w.coeffs().to_vec())
    }
}
