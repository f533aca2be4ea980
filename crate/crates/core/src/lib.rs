//! Exact density parameters, forest decompositions, dense-part contraction,
//! pattern-free edge colorings and Ramsey-threshold bounds for sparse graphs.

pub mod bounds;
pub mod color;
pub mod constructions;
pub mod contract;
pub mod decompose;
pub mod error;
mod flow;
pub mod graph;
pub mod parameters;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{EdgeMultiset, Graph, MultiGraph, NamedGraph, VertexFamily};
pub use rational::Rational;
