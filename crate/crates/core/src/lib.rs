//! Recognition, certification, construction and refutation of 1-perfectly
//! orientable graphs.
//!
//! A graph is *1-perfectly orientable* (1-p.o.) when its edges can be
//! directed so that every out-neighborhood induces a tournament, i.e. is a
//! clique of the underlying graph. The crate provides:
//!
//! - graph and orientation value types with the standard construction
//!   operators ([`graph`], [`orientation`], [`mod@format`]);
//! - an exhaustive orientation oracle used as ground truth at desk scale
//!   ([`oracle`]);
//! - polynomial recognition with witness orientations via a 2-SAT reduction
//!   ([`recognition`]);
//! - certificates converting between 1-perfect orientations and vertex-indexed
//!   edge clique covers, plus the complement (independent-set) form
//!   ([`cover`]);
//! - closure transformations that transfer 1-perfect orientations across
//!   disjoint unions, universal/twin/simplicial additions, 2-branch
//!   duplication in the complement, edge contraction and joins
//!   ([`transforms`]);
//! - good colorings and the three-way equivalence for co-bipartite graphs
//!   ([`cobipartite`]);
//! - cotree decomposition and the structural characterization of 1-p.o.
//!   cographs ([`cograph`]);
//! - generators and minimality verification for the known minimal forbidden
//!   induced minors, with desk-scale induced-minor containment ([`catalog`]).

pub mod catalog;
pub mod cobipartite;
pub mod cograph;
pub mod cover;
pub mod error;
pub mod format;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod orientation;
pub mod recognition;
pub mod transforms;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use graph::{Graph, TwoBranch};
pub use orientation::Orientation;
pub use recognition::recognize;
