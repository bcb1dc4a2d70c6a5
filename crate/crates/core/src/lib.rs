//! Tessellation covers of graphs: exact and heuristic solvers, bounds via
//! edge and clique-graph colourings, 2-tessellability recognition, and the
//! hardness constructions built on top of them.

pub mod bounds;
pub mod clique_graph;
pub mod coloring;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod io;
pub mod solver;
pub mod tessellation;
pub mod two_tess;

pub use error::{Error, Result};
