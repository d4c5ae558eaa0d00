//! Exact computations on ω-clique regular graphs.
//!
//! A graph is *ω-clique regular* when every edge lies in exactly one clique of
//! order ω. This crate builds the graphs attached to such a graph (line graph,
//! ω-clique graph, ω-clique subdivision), checks the spectral and counting
//! identities relating them, searches for strongly regular parameter sets with
//! λ = 1, and computes critical groups with exact integer arithmetic.
//!
//! ```
//! use cliquereg::{families, transforms, iso};
//!
//! let rook = families::rook_graph(3)?;
//! let c = transforms::clique_graph(&rook, 3)?;
//! let k33 = families::complete_bipartite(3, 3);
//! assert!(iso::is_isomorphic(&c, &k33)?.is_some());
//! # Ok::<(), cliquereg::Error>(())
//! ```

pub mod cliques;
pub mod critical;
mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod regularity;
pub mod report;
pub mod search;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use cliques::CliqueSet;
pub use error::{Error, GraphError, Result};
pub use graph::Graph;
pub use linalg::{IntMatrix, IntPoly};
pub use spectral::srg::{SrgParams, SrgSpectrum};
