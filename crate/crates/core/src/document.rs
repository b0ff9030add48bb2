//! JSON documents: sheaf input files and machine-readable reports.
//!
//! A polynomial is a list of terms `{"coeff": "p/q", "exponents": [e1, …]}`
//! and the zero polynomial is the empty list. Weights are integer arrays.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::builders::canonical_sheaf_on;
use crate::error::{Error, Result};
use crate::graded::GradedFreeModule;
use crate::hypergraph::{build_hypergraph, Hyperedge, VertexId};
use crate::polyring::{normalize_projective, HomogeneousPolynomial, Rational, Weight};
use crate::sheaf::{build_sheaf, EdgeSpec, GkmSheaf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

pub type PolyDoc = Vec<TermDoc>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub weight: Vec<i64>,
    pub blocks: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeStalkDoc {
    pub weight: Vec<i64>,
    pub block: Vec<VertexId>,
    pub generator_degrees: Vec<i64>,
    /// Per incident vertex, a matrix with one row per vertex stalk generator
    /// and one column per edge stalk generator.
    pub restrictions: BTreeMap<VertexId, Vec<Vec<PolyDoc>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheafSection {
    pub vertex_stalks: BTreeMap<VertexId, Vec<i64>>,
    pub edge_stalks: Vec<EdgeStalkDoc>,
}

/// Input file. Without a `sheaf` section the canonical sheaf is used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheafDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub torus_rank: usize,
    pub vertices: Vec<VertexId>,
    pub relations: Vec<RelationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sheaf: Option<SheafSection>,
}

/// A parsed and validated document.
#[derive(Clone, Debug)]
pub struct Ingested {
    pub name: Option<String>,
    pub description: Option<String>,
    pub sheaf: GkmSheaf,
    /// Weights that were changed by normalization.
    pub warnings: Vec<String>,
}

pub fn poly_to_doc(p: &HomogeneousPolynomial) -> PolyDoc {
    p.terms_in_basis_order()
        .map(|(e, c)| TermDoc {
            coeff: c.to_string(),
            exponents: e.clone(),
        })
        .collect()
}

pub fn poly_from_doc(rank: usize, doc: &PolyDoc, at: &str) -> Result<HomogeneousPolynomial> {
    let mut terms = Vec::with_capacity(doc.len());
    for (i, t) in doc.iter().enumerate() {
        let c = Rational::from_str(t.coeff.trim()).map_err(|e| {
            Error::Parse(format!(
                "{at}[{i}].coeff: {:?} is not a rational ({e})",
                t.coeff
            ))
        })?;
        if t.exponents.len() != rank {
            return Err(Error::Parse(format!(
                "{at}[{i}].exponents: expected {rank} exponents, found {}",
                t.exponents.len()
            )));
        }
        terms.push((t.exponents.clone(), c));
    }
    HomogeneousPolynomial::from_terms(rank, None, terms)
        .map_err(|e| Error::Parse(format!("{at}: {e}")))
}

impl SheafDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Pretty JSON with a trailing newline; stable for a given document.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn ingest(&self) -> Result<Ingested> {
        let r = self.torus_rank;
        let mut warnings = Vec::new();
        let mut relations = Vec::with_capacity(self.relations.len());
        for (i, rel) in self.relations.iter().enumerate() {
            if rel.weight.len() == r {
                let normalized = normalize_projective(&Weight::new(rel.weight.clone()))
                    .map_err(|e| Error::Parse(format!("relations[{i}].weight: {e}")))?;
                if normalized.coeffs() != rel.weight.as_slice() {
                    warnings.push(format!(
                        "relations[{i}].weight {:?} normalized to {normalized}",
                        rel.weight
                    ));
                }
            }
            relations.push((rel.weight.clone(), rel.blocks.clone()));
        }
        let graph = build_hypergraph(r, self.vertices.clone(), relations)?;
        let sheaf = match &self.sheaf {
            None => canonical_sheaf_on(graph)?,
            Some(section) => {
                let stalks: BTreeMap<VertexId, GradedFreeModule> = section
                    .vertex_stalks
                    .iter()
                    .map(|(v, degs)| (v.clone(), GradedFreeModule::new(r, degs.clone())))
                    .collect();
                let mut specs = BTreeMap::new();
                for (i, es) in section.edge_stalks.iter().enumerate() {
                    let at = format!("sheaf.edge_stalks[{i}]");
                    if es.weight.len() != r {
                        return Err(Error::Parse(format!(
                            "{at}.weight: expected {r} entries, found {}",
                            es.weight.len()
                        )));
                    }
                    let w = normalize_projective(&Weight::new(es.weight.clone()))
                        .map_err(|e| Error::Parse(format!("{at}.weight: {e}")))?;
                    let block: BTreeSet<VertexId> = es.block.iter().cloned().collect();
                    let edge = Hyperedge::new(w, block);
                    let mut restrictions = BTreeMap::new();
                    for (v, rows) in &es.restrictions {
                        let mut matrix = Vec::with_capacity(rows.len());
                        for (a, row) in rows.iter().enumerate() {
                            let mut out = Vec::with_capacity(row.len());
                            for (b, p) in row.iter().enumerate() {
                                out.push(poly_from_doc(
                                    r,
                                    p,
                                    &format!("{at}.restrictions.{v}[{a}][{b}]"),
                                )?);
                            }
                            matrix.push(out);
                        }
                        restrictions.insert(v.clone(), matrix);
                    }
                    let spec = EdgeSpec {
                        stalk: GradedFreeModule::new(r, es.generator_degrees.clone()),
                        restrictions,
                    };
                    if specs.insert(edge.clone(), spec).is_some() {
                        return Err(Error::Parse(format!("{at}: duplicate stalk for {edge}")));
                    }
                }
                build_sheaf(graph, stalks, specs)?
            }
        };
        Ok(Ingested {
            name: self.name.clone(),
            description: self.description.clone(),
            sheaf,
            warnings,
        })
    }

    /// Canonical document for a sheaf, always with an explicit sheaf section.
    pub fn from_sheaf(sheaf: &GkmSheaf, name: Option<String>, description: Option<String>) -> Self {
        let graph = sheaf.graph();
        let relations = graph
            .relations()
            .iter()
            .map(|(w, blocks)| RelationDoc {
                weight: w.coeffs().to_vec(),
                blocks: blocks.iter().map(|b| b.iter().cloned().collect()).collect(),
            })
            .collect();
        let vertex_stalks = sheaf
            .vertex_stalks()
            .iter()
            .map(|(v, m)| (v.clone(), m.generator_degrees().to_vec()))
            .collect();
        let edge_stalks = sheaf
            .edges()
            .iter()
            .map(|d| EdgeStalkDoc {
                weight: d.edge.weight().coeffs().to_vec(),
                block: d.edge.block().iter().cloned().collect(),
                generator_degrees: d.stalk.generator_degrees().to_vec(),
                restrictions: d
                    .restrictions
                    .iter()
                    .map(|(v, m)| {
                        let rows = m
                            .entries()
                            .iter()
                            .map(|row| row.iter().map(poly_to_doc).collect())
                            .collect();
                        (v.clone(), rows)
                    })
                    .collect(),
            })
            .collect();
        SheafDocument {
            name,
            description,
            torus_rank: sheaf.torus_rank(),
            vertices: graph.vertices().iter().cloned().collect(),
            relations,
            sheaf: Some(SheafSection {
                vertex_stalks,
                edge_stalks,
            }),
        }
    }
}

pub fn load_sheaf(text: &str) -> Result<Ingested> {
    SheafDocument::from_json(text)?.ingest()
}

/// Fixed conventions stamped into every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub grading: String,
    pub monomial_order: String,
    pub vertex_order: String,
    pub beta_domain: String,
    pub beta_codomain: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            grading: "cohomological; each variable has degree 2".into(),
            monomial_order: "lexicographic, largest exponent of x1 first".into(),
            vertex_order: "lexicographic by vertex id".into(),
            beta_domain: "vertex stalks, then non-degenerate edge stalks".into(),
            beta_codomain: "by non-degenerate edge, then incident vertex".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeTable {
    pub edge: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub degree: i64,
    /// Coordinates over the summands listed in `GeneratorList::domain`.
    pub coordinates: Vec<PolyDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorList {
    pub complete_up_to_degree: i64,
    /// `(summand label, rank)` in coordinate order.
    pub domain: Vec<(String, usize)>,
    pub generators: Vec<GeneratorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeVerdict {
    pub edge: String,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomDoc {
    pub passed: bool,
    pub nondegenerate_edges: Vec<String>,
    pub edges: Vec<EdgeVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub passed: bool,
    pub exactness_passed: bool,
    pub alternating_sums: Vec<i64>,
    pub first_inexact_degree: Option<i64>,
    pub crosscheck_passed: bool,
    pub first_crosscheck_mismatch: Option<i64>,
    pub torsion_probe: String,
    pub free_source_degrees: Vec<i64>,
    pub free_target_degrees: Vec<i64>,
    pub higher_vanishing: Vec<usize>,
}

/// Machine-readable report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub torus_rank: usize,
    pub cutoff: i64,
    pub conventions: Conventions,
    pub degrees: Vec<i64>,
    pub h0: Vec<usize>,
    pub h1: Vec<usize>,
    pub local_h1: Vec<usize>,
    pub vertex_sections: Vec<usize>,
    pub local_h1_per_edge: Vec<EdgeTable>,
    pub axioms: AxiomDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_generators: Option<GeneratorList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckDoc>,
}

impl ReportDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
