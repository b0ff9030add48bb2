//! Sheaf cohomology of GKM-sheaves on GKM-hypergraphs.
//!
//! A GKM-sheaf is given by free graded `R`-modules on the vertices and
//! hyperedges of a GKM-hypergraph together with restriction maps. Its
//! cohomology is concentrated in degrees 0 and 1 and is computed here as the
//! kernel and cokernel of a single map of free modules, degree by degree and
//! in exact rational arithmetic.

pub mod builders;
pub mod cli;
pub mod cohomology;
pub mod document;
pub mod error;
pub mod graded;
pub mod hypergraph;
pub mod linalg;
pub mod polyring;
pub mod sheaf;

pub use error::{Error, Result};
