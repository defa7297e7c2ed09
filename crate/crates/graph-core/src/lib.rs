#![forbid(unsafe_code)]
//! Graph layer: loop-free multigraphs with exact integer Laplacians,
//! rotation-system plane drawings with face tracing, dual and weak-dual
//! graphs, cycle-intersection matrices, and the two tree-driven
//! constructions used throughout the workspace — polygon fans glued along a
//! tree and cones over degree-prescribed trees.

mod blocks;
mod dual;
mod error;
mod iso;
mod multigraph;
mod outerplane;
mod plane;
mod tree;

pub use blocks::biconnected_blocks;
pub use dual::{cycle_intersection_matrix, dual, weak_dual, WeakDual};
pub use error::GraphError;
pub use iso::{graphs_isomorphic, trees_isomorphic, trees_isomorphic_weighted};
pub use multigraph::MultiGraph;
pub use outerplane::{build_g_tc, build_outerplane};
pub use plane::{trace_faces, DirectedEdge, Face, PlaneGraph};
pub use tree::Tree;
