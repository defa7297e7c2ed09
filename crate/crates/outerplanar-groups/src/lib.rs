//! Sandpile groups of outerplanar graphs from their weak dual data.
//!
//! A 2-connected outerplane graph is determined by its weak dual tree and
//! the lengths of its interior faces.  This crate computes the graph's
//! sandpile group directly from that data: the generalized Laplacian
//! `diag(lengths) − A(tree)` has its invariant divisors generated by
//! principal minors indexed over minimal 2-matchings of the looped tree, and
//! the quotients of the divisor chain are the cyclic orders of the group.
//!
//! Two families get closed forms on top of that: polygon chains (always
//! cyclic groups, counted by a three-term recurrence) and polygon flowers
//! (one chain per side of a central polygon, with the divisor chain read off
//! gcds of products of the chains' counts).

#![forbid(unsafe_code)]

mod chain;
mod delta;
mod error;
mod flower;
mod matching;

pub use chain::{
    ladder_tau_binomial, tau_polygon_chain, tau_polygon_chain_by_matchings, PolygonChainSpec,
    MAX_MATCHING_POLYGONS,
};
pub use delta::{delta_sequence, group_of_outerplane, polygon_matrix, DeltaSequence};
pub use error::OuterplanarError;
pub use flower::{
    build_flower_graph, flower_deltas, flower_group, flower_tau, Attachment, PolygonFlowerSpec,
};
pub use matching::{
    enumerate_2matchings, minimal_2matchings, TwoMatching, MAX_ENUMERATION_VERTICES,
};
