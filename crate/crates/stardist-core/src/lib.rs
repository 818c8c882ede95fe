//! Distinguishing edge colourings of star-free graphs.
//!
//! A colouring of a graph is distinguishing if the identity is the only
//! automorphism preserving it; the distinguishing index D'(G) is the least
//! number of colours in a distinguishing edge colouring. For connected
//! locally finite K_{1,n}-free graphs of order at least six, n-1 colours
//! always suffice. This crate provides the machinery to construct and check
//! such colourings at desk scale:
//!
//! - [`graph`], [`graph6`], [`colouring`]: finite simple graphs, the graph6
//!   codec and edge colourings;
//! - [`automorphism`], [`group`], [`perm`]: a refinement-pruned backtracking
//!   automorphism engine with stabilizer-chain counting;
//! - [`starfree`]: induced-star detection and the exceptional graphs;
//! - [`oracle`]: exhaustive ground-truth computations of distinguishing
//!   indices and non-isomorphic colouring counts on small graphs;
//! - [`rooted`]: the constructive n-1 pairwise non-isomorphic distinguishing
//!   colourings of rooted star-free graphs;
//! - [`infinite`]: eventually-periodic descriptions of infinite locally
//!   finite graphs, the ray-decomposition colouring construction, and
//!   truncation-based rigidity verification;
//! - [`enumerate`]: exhaustive small-graph enumeration with isomorph
//!   rejection.

pub mod automorphism;
pub mod colouring;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod infinite;
pub mod oracle;
pub mod perm;
pub mod rooted;
mod search;
pub mod starfree;

pub use colouring::EdgeColouring;
pub use graph::{Edge, Graph};
pub use perm::Permutation;
