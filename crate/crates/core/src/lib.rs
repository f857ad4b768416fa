//! Structural width machinery for generalized convex bipartite graphs.
//!
//! A bipartite graph `G = (A, B, E)` is *H-convex* when some host graph on `A`
//! from a family (paths, cycles, stars, combs, trees with few branching
//! vertices) makes every neighbourhood `N(b)` connected. This crate recognizes
//! such hosts, builds branch decompositions whose mim-width is provably bounded
//! for the cycle and `(t, Δ)`-tree families, builds thin and proper-thin
//! representations, and carries exact small-instance oracles that certify all
//! of those bounds.
//!
//! The crate is `no_std` and only needs `alloc`; file formats and the command
//! line driver live in the companion `hconvex` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod chordal;
pub mod decomp;
mod error;
pub mod families;
pub mod graph;
pub mod pattern;
pub mod support;
pub mod thin;

pub use decomp::{BranchDecomposition, CutMode, CutReport};
pub use thin::{PathDecomposition, ThinRepresentation};
pub use error::Error;
pub use graph::{BipartiteGraph, Graph, Hypergraph};
pub use support::{SupportKind, SupportWitness};

pub type Result<T, E = Error> = core::result::Result<T, E>;
