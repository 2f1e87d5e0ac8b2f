//! Independent isolating sets of graphs.
//!
//! A set `S` of vertices is *isolating* when deleting `S` and its neighbors
//! leaves no edge; it is an *independent isolating set* when, in addition,
//! no two members of `S` are adjacent. This crate provides:
//!
//! * verifiers ([`isolation`]),
//! * exact solvers for the independent isolation number, the isolation
//!   number, total domination, and disjoint independent isolating sets
//!   ([`exact`]),
//! * constructive upper bounds for bipartite, 3-colorable and k-colorable
//!   graphs ([`constructive`]),
//! * gadgets and extremal families ([`gadgets`]) and seeded random
//!   instances ([`generate`]),
//! * text formats ([`io`]), batch property checks ([`checks`]) and the
//!   command-line front end ([`cli`]).

pub mod checks;
pub mod cli;
pub mod coloring;
pub mod constructive;
pub mod error;
pub mod exact;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod io;
pub mod isolation;

pub use error::{Error, Result};
pub use graph::{BfsLayers, Coloring, Graph, VertexSet};
