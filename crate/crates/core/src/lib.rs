//! Clique polynomials of simple graphs and exact real-rootedness checks.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: immutable simple graphs and local structure queries
//! - [`cliques`]: clique counting, with an exhaustive enumerator as oracle
//! - [`polynomial`]: exact integer polynomials and the clique polynomial
//! - [`realroots`]: square-free parts, Sturm sequences, root isolation
//! - [`classify`]: graph-class predicates (flat, chordal, `K_r`-free, ...)
//! - [`identities`]: per-graph identity and theorem checks
//! - [`catalog`]: graph6, edge lists and small-graph enumeration

pub mod catalog;
pub mod classify;
pub mod cliques;
pub mod graph;
pub mod identities;
pub mod polynomial;
pub mod realroots;
mod ser;

pub use catalog::{CatalogError, CatalogRecord};
pub use classify::{ClassificationReport, NeighborhoodShape};
pub use cliques::CliqueCounts;
pub use graph::{Graph, GraphError, VertexSet};
pub use identities::{IdentityReport, TheoremReport};
pub use polynomial::{Polynomial, Rational};
pub use realroots::{RootError, RootReport};
