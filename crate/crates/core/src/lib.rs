//! Conflict-free open and closed neighborhood colorings of `K_{1,k}`-free
//! graphs.
//!
//! The main entry point is [`pipeline::cfon_color`], which builds a coloring
//! in which every vertex sees some color exactly once among its neighbors,
//! and returns it with a per-vertex certificate. The pieces it composes are
//! usable on their own:
//!
//! - [`decomposition`]: normalized layered proper colorings.
//! - [`contraction`]: coloring one side of a bipartition through a conflict graph.
//! - [`degree_colorer`]: conflict-free hypergraph coloring with `degree + 1` colors.
//! - [`resampling`]: conflict-free coloring of near-uniform hypergraphs by
//!   resampling bad edges, plus Monte-Carlo collision statistics.
//! - [`oracle`]: exact conflict-free chromatic numbers of small graphs.
//!
//! [`verify`] holds checkers that share no code with any construction.

pub mod bench;
pub mod coloring;
pub mod contraction;
pub mod decomposition;
pub mod degree_colorer;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod oracle;
pub mod pipeline;
pub mod resampling;
pub mod rng;
pub mod verify;

pub use coloring::PartialColoring;
pub use error::{Error, Result};
pub use graph::{find_induced_star, Graph, StarWitness};
pub use hypergraph::Hypergraph;
pub use pipeline::{cfcn_color, cfon_color, Mode, PipelineOptions};
