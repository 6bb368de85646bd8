//! Gyárfás decompositions, strong and bipartite index witnesses, cosplits and
//! 2-cosplits of graphs excluding long paths and half graphs, and an exact
//! sparsification into colored graphs of small treedepth.

pub mod bitset;
pub mod error;
pub mod graph;
pub mod patterns;
pub mod tree_model;
pub mod gyarfas;
pub mod cosplit;
pub mod sparsify;
pub mod corpus;
pub mod cli;

pub use bitset::Bitset;
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph, Side};
