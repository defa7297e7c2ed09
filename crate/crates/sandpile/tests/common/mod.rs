//! Shared fixtures: a hand-checked pair of plane-dual graphs used across the
//! chip-firing tests, plus small helpers.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use graph_core::MultiGraph;
use num_bigint::BigInt;

/// A tree fanned out from two hub vertices, coned to an apex: vertices 0..5
/// carry the tree edges, vertex 6 is the apex, and every vertex has degree 3
/// except the apex with 8. Spanning-tree count 360.
pub fn cone_graph() -> (MultiGraph, usize) {
    let g = MultiGraph::new(
        7,
        vec![
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
        ],
    )
    .unwrap();
    (g, 6)
}

/// The plane dual of the drawing behind [`cone_graph`]: eight vertices with
/// degrees (4, 2, 5, 2, 4, 2, 5, 2), vertex 7 playing the outer role.
/// Spanning-tree count 360 again.
pub fn dual_graph() -> (MultiGraph, usize) {
    let g = MultiGraph::new(
        8,
        vec![
            (2, 0),
            (2, 6),
            (2, 4),
            (4, 6),
            (1, 0),
            (6, 0),
            (0, 7),
            (2, 3),
            (3, 4),
            (5, 6),
            (4, 5),
            (1, 2),
            (6, 7),
        ],
    )
    .unwrap();
    (g, 7)
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
