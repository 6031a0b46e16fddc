//! Exact computation of [1,k]-domination parameters.
//!
//! The crate builds the graph families studied in this area (star-like
//! trees, lexicographic products, the triple-set-cover gadget, and an
//! extremal bipartite family), computes γ, γ_{[1,k]}, γ_t and γ_{t[1,k]}
//! exactly with two independent solvers, and checks the known structural
//! results on exhaustive catalogs of small instances.

pub mod catalog;
pub mod cli;
pub mod construction;
pub mod domination;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod product;
pub mod reduction;
pub mod suite;

pub use domination::{gamma_exact, DominationResult, GammaKind, Method};
pub use error::{Error, Result};
pub use graph::{Graph, StarLikeSpec, VertexSet};
