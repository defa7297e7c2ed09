//! Shared fixture: a seven-vertex plane multigraph with doubled spokes whose
//! dual carries the worked configuration transfer.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use graph_core::{MultiGraph, PlaneGraph};
use num_bigint::BigInt;

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// A plane multigraph on seven vertices and thirteen edges: a ring of six
/// vertices around a hub, with four of the spokes doubled.  Vertex 6 is the
/// hub and the natural sink; the drawing has eight faces, and the outer one
/// — the lobe between the two parallel hub edges of vertex 5 — is traced
/// fifth (index 5).
pub fn example_plane_graph() -> PlaneGraph {
    let edges = vec![
        (0, 4),
        (1, 0),
        (2, 1),
        (3, 1),
        (4, 6),
        (5, 0),
        (5, 6),
        (6, 2),
        (6, 2),
        (6, 3),
        (6, 3),
        (6, 4),
        (6, 5),
    ];
    let graph = MultiGraph::new(7, edges).unwrap();
    let rotation = vec![
        vec![1, 0, 5],
        vec![2, 1, 3],
        vec![8, 7, 2],
        vec![3, 9, 10],
        vec![11, 4, 0],
        vec![5, 6, 12],
        vec![4, 11, 7, 8, 10, 9, 12, 6],
    ];
    PlaneGraph::new(graph, rotation, 5).unwrap()
}
