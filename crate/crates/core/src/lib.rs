//! Star edge-colorings of graphs.
//!
//! A star edge-coloring is a proper edge-coloring in which no path or cycle
//! on four edges is bi-colored. This crate provides
//!
//! * [`verify`]: a verifier with witnesses, plus the extension and gluing
//!   tests used to build colorings piece by piece;
//! * [`solver`]: an exact branch-and-bound solver for the star chromatic
//!   index of small graphs;
//! * [`constructions`]: explicit colorings of complete graphs from
//!   progression-free sets, of `K_{n,n}`, and of arbitrary graphs via frugal
//!   vertex colorings;
//! * [`counting`]: the double-counting lower bound for complete graphs;
//! * [`cubic`]: cycle patterns, 7-colorings of bridgeless cubic graphs, and
//!   the correspondence between star 4-colorings and covers of the cube.

pub mod coloring;
pub mod constructions;
pub mod counting;
pub mod cubic;
pub mod error;
pub mod format;
pub mod graph;
pub mod named;
pub mod solver;
pub mod verify;

pub use coloring::{Color, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Vertex};
pub use named::NamedGraph;
pub use verify::{verify_star, Verdict, Violation, ViolationKind};
