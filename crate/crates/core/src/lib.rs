//! Disperse hypergraphs: recognition, tight components, cohypergraph decompositions and
//! homogeneous-set extraction.

pub mod combinatorics;
pub mod cotree;
pub mod error;
pub mod extraction;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod limits;
pub mod splitlinks;
pub mod structure;
pub mod union_find;
pub mod vertex_set;

pub use cotree::{Cotree, HomogeneousKind, HomogeneousResult, Polarity, Recognition};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use hypergraph::{Hypergraph, Relabel};
pub use limits::Limits;
pub use vertex_set::VertexSet;
