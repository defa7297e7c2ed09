//! Orientations, oriented incidence matrices, integer flow solving, and the
//! transfer of sandpile configurations between a plane graph and its dual.
//!
//! Orient the edges, write the oriented incidence matrix ∂, and a
//! configuration (padded with a balancing sink entry) becomes a demand
//! vector `d`.  Any integer flow `f` with `∂f = d` reads off, unchanged, as
//! a flow on the dual — each dual edge crosses exactly one primal edge and
//! inherits its value under the right-left rule — and `∂(dual)·f` is then a
//! configuration on the dual equivalent to the transferred one.  Reducing it
//! to its recurrent representative makes the answer canonical.

#![forbid(unsafe_code)]

mod error;
mod flow;
mod orientation;
mod transfer;

pub use error::DualityError;
pub use flow::solve_flow;
pub use orientation::{incidence_matrix, right_left_orientation, Orientation};
pub use transfer::{transfer_config, Transfer};
