//! Exact strong metric dimension of connected graphs.
//!
//! The strong metric dimension `dim_s(G)` is the smallest size of a vertex
//! set that strongly resolves every vertex pair. This crate computes it
//! exactly by building the strong resolving graph `G_SR` (vertices: the
//! boundary of `G`; edges: mutually maximally distant pairs) and solving
//! minimum vertex cover on it, since `dim_s(G) = α(G_SR)`.
//!
//! Around that reduction it provides rooted and corona product
//! constructors, the closed formulas and bounds that express `dim_s` of
//! such products in terms of the factors, and verification harnesses that
//! check every formula against the reduction solver and an independent
//! brute-force oracle.
//!
//! ```
//! use strongdim::{generators, strong_dimension};
//!
//! let c5 = generators::cycle(5).unwrap();
//! assert_eq!(strong_dimension(&c5).unwrap().value, 3); // ceil(5/2)
//! ```
//!
//! See the crate `examples/` directory for one runnable walk-through per
//! capability, and the `strongdim` binary for batch use.

pub mod cli;
pub mod cover;
mod error;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod iso;
pub mod metrics;
pub mod products;

pub use cover::{min_vertex_cover, strong_dimension, DimReport, Method};
pub use error::{Error, Result};
pub use graph::{bfs_distances, diameter, is_connected, DistMatrix, Graph, VertexSet};
pub use graph6::{parse_graph6, serialize_graph6};
pub use metrics::{boundary, simplicial, strong_resolving_graph, RootContext, SRGraph};
pub use products::{corona_product, join_k1, rooted_product, FamilyFSpec, ProductMap};
