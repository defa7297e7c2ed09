//! Chip-firing on a connected multigraph with a designated sink.
//!
//! A pile of chips sits on the non-sink vertices. A vertex holding at least
//! as many chips as its degree may fire, sending one chip along each incident
//! edge; chips reaching the sink disappear. Every pile settles to a unique
//! stable pile no matter the firing order, stable piles reachable from large
//! ones form a group under add-and-settle, and that group's order is the
//! graph's spanning tree count.
//!
//! [`SandpileModel`] provides stabilization, the burning test for
//! recurrence, the neutral pile, and certified class representatives;
//! the exhaustive module re-derives the same answers by enumerating every
//! stable pile, for cross-checking on small graphs.

#![forbid(unsafe_code)]

mod error;
mod exhaustive;
mod model;

pub use error::SandpileError;
pub use exhaustive::{
    extremal_equivalent_stable, recurrent_count, stable_configurations,
    DEFAULT_ENUMERATION_BOUND,
};
pub use model::{
    Configuration, Representative, SandpileModel, Stabilization, DEFAULT_FIRING_BUDGET,
};
