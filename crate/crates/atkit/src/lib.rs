//! Vertex ordering toolkit for AT-free graphs.
//!
//! The crate computes and verifies characterising vertex orderings of
//! AT-free graphs: convexity-guided BFS orders, monotone dominating pair
//! orders, and linear-time two-sweep orders for the claw-free and
//! bad-claw-free subclasses, together with brute-force oracles that
//! certify the structural claims at desk scale.

pub mod convexity;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod search;
pub mod verify;

pub use convexity::{find_asteroidal_triple, BetweennessOracle, ConvexSet};
pub use error::{Error, Result};
pub use graph::{Graph, LayerDecomposition, Path};
pub use search::{Ordering, SearchKind, SearchTrace};
pub use verify::{Violation, ViolationKind};
