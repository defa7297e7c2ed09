//! Hand-checked fixtures for multigraphs, embeddings, faces, duals, and the
//! cycle-intersection matrix. Every expected value here was computed by hand
//! or by an independent brute-force method in `common`.

mod common;

use common::{same_multiset, spanning_tree_count_bruteforce};
use graph_core::{
    biconnected_blocks, cycle_intersection_matrix, dual, graphs_isomorphic, trees_isomorphic,
    trees_isomorphic_weighted, weak_dual, GraphError, MultiGraph, PlaneGraph, Tree,
};
use int_linalg::{cokernel_torsion, determinant};
use num_bigint::BigInt;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// 4-cycle 0-1-2-3-0 with edge ids in ring order.
fn cycle4() -> MultiGraph {
    MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

/// Two vertices joined by three parallel edges.
fn theta() -> MultiGraph {
    MultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
}

#[test]
fn multigraph_basics_and_input_validation() {
    let g = cycle4();
    assert_eq!(g.vertex_count(), 4);
    assert_eq!(g.edge_count(), 4);
    assert_eq!(g.degree(0), 2);
    assert_eq!(g.endpoints(1), (1, 2));
    assert_eq!(g.other_end(1, 2), 1);
    assert_eq!(g.incident_edges(0), vec![0, 3]);
    assert_eq!(g.multiplicity(0, 1), 1);
    assert_eq!(g.multiplicity(0, 2), 0);
    assert!(g.is_connected());

    let t = theta();
    assert_eq!(t.multiplicity(0, 1), 3);
    assert_eq!(t.multiplicity(1, 0), 3);
    assert_eq!(t.degree(0), 3);
    assert_eq!(t.incident_edges(1), vec![0, 1, 2]);

    // Loops are rejected: every edge must join two distinct vertices.
    assert!(MultiGraph::new(2, vec![(0, 0)]).is_err());
    // Endpoints must be in range.
    assert!(MultiGraph::new(2, vec![(0, 2)]).is_err());

    let disconnected = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
    assert!(!disconnected.is_connected());
}

#[test]
fn laplacian_of_ring_and_reduction() {
    let g = cycle4();
    let l = g.laplacian();
    let expect = int_linalg::IntMatrix::from_i64_rows(&[
        vec![2, -1, 0, -1],
        vec![-1, 2, -1, 0],
        vec![0, -1, 2, -1],
        vec![-1, 0, -1, 2],
    ]);
    assert_eq!(l, expect);

    let reduced = g.reduced_laplacian(3);
    let expect_reduced = int_linalg::IntMatrix::from_i64_rows(&[
        vec![2, -1, 0],
        vec![-1, 2, -1],
        vec![0, -1, 2],
    ]);
    assert_eq!(reduced, expect_reduced);
    assert_eq!(determinant(&reduced), big(4));
}

#[test]
fn spanning_tree_counts_match_bruteforce() {
    // Ring on four vertices: remove any one edge.
    assert_eq!(cycle4().spanning_tree_count(), big(4));
    // Three parallel edges: pick any one.
    assert_eq!(theta().spanning_tree_count(), big(3));
    // Complete graph on four vertices: 16 by Cayley's formula.
    let k4 = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(k4.spanning_tree_count(), big(16));
    // A path is its own unique spanning tree.
    let path = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    assert_eq!(path.spanning_tree_count(), big(1));
    // Disconnected graphs have none.
    let disc = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
    assert_eq!(disc.spanning_tree_count(), big(0));
    // Single vertex: the empty tree.
    let single = MultiGraph::new(1, vec![]).unwrap();
    assert_eq!(single.spanning_tree_count(), big(1));
    // Four parallel edges.
    let par4 = MultiGraph::new(2, vec![(0, 1); 4]).unwrap();
    assert_eq!(par4.spanning_tree_count(), big(4));

    for g in [&cycle4(), &theta(), &k4, &path, &disc, &single, &par4] {
        assert_eq!(
            g.spanning_tree_count(),
            spanning_tree_count_bruteforce(g.vertex_count(), g.edges()),
            "matrix count disagrees with subset enumeration"
        );
    }
}

#[test]
fn tree_parsing_and_validation() {
    let t = Tree::parse_text("0 1\n1 2\n").unwrap();
    assert_eq!(t.vertex_count(), 3);
    assert_eq!(t.degree(1), 2);
    assert_eq!(t.neighbors(1), vec![0, 2]);
    assert_eq!(t.edges(), &[(0, 1), (1, 2)]);

    // Blank lines are ignored.
    let t2 = Tree::parse_text("\n0 1\n\n0 2\n").unwrap();
    assert_eq!(t2.vertex_count(), 3);
    assert_eq!(t2.degree(0), 2);

    // A cycle is not a tree.
    assert!(Tree::parse_text("0 1\n1 2\n2 0\n").is_err());
    // Wrong edge count for the vertex range.
    assert!(Tree::parse_text("0 1\n2 3\n").is_err());
    // Repeated edges are rejected.
    assert!(Tree::parse_text("0 1\n0 1\n").is_err());
    // Malformed tokens are rejected.
    assert!(Tree::parse_text("0 x\n").is_err());
    assert!(Tree::parse_text("0\n").is_err());
    assert!(Tree::parse_text("").is_err());

    // The same validation applies to the direct constructor.
    assert!(Tree::from_edges(3, &[(0, 1), (1, 2)]).is_ok());
    assert!(Tree::from_edges(3, &[(0, 1)]).is_err());
    assert!(Tree::from_edges(1, &[]).is_ok());
}

#[test]
fn tree_isomorphism_with_and_without_weights() {
    let path4 = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let path4_relabeled = Tree::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
    let star4 = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(trees_isomorphic(&path4, &path4_relabeled));
    assert!(!trees_isomorphic(&path4, &star4));

    // Weighted version: the map must also carry weights across.
    let w_ends = [5, 2, 2, 5];
    let w_ends_relabeled = [2, 5, 5, 2]; // relabeling above sends 0->2, 1->0, 2->3, 3->1
    assert!(trees_isomorphic_weighted(
        &path4,
        &w_ends,
        &path4_relabeled,
        &w_ends_relabeled
    ));
    // Same shapes, incompatible weights.
    assert!(!trees_isomorphic_weighted(
        &path4,
        &[5, 2, 2, 5],
        &path4_relabeled,
        &[5, 2, 2, 5]
    ));
    // Symmetric weights on a path are invariant under the flip.
    assert!(trees_isomorphic_weighted(
        &path4,
        &[7, 1, 1, 7],
        &path4,
        &[7, 1, 1, 7]
    ));
}

#[test]
fn multigraph_isomorphism() {
    let c4 = cycle4();
    let c4_relabeled = MultiGraph::new(4, vec![(2, 0), (0, 3), (3, 1), (1, 2)]).unwrap();
    assert!(graphs_isomorphic(&c4, &c4_relabeled));

    let path4 = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(!graphs_isomorphic(&c4, &path4));

    // Parallel-edge multiplicities must be carried over.
    let a = MultiGraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
    let b = MultiGraph::new(3, vec![(0, 1), (1, 2), (1, 2)]).unwrap();
    let c = MultiGraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
    assert!(graphs_isomorphic(&a, &b));
    assert!(!graphs_isomorphic(&a, &c));

    // Same degree sequence, different structure.
    let c6 = MultiGraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let two_triangles =
        MultiGraph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
    assert!(!graphs_isomorphic(&c6, &two_triangles));
}

#[test]
fn faces_of_triangle_and_parallel_edges() {
    let tri = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    let pg = PlaneGraph::new(tri, vec![vec![0, 2], vec![0, 1], vec![1, 2]], 0).unwrap();
    assert_eq!(pg.faces().len(), 2);
    assert!(pg.faces().iter().all(|f| f.len() == 3));
    // The two sides of an edge see the two distinct faces.
    assert_ne!(pg.face_of(0, true), pg.face_of(0, false));

    // Parallel arcs appear in opposite cyclic orders at their two endpoints;
    // keeping the same order at both ends would leave the plane.
    let pg = PlaneGraph::new(theta(), vec![vec![0, 1, 2], vec![0, 2, 1]], 0).unwrap();
    assert_eq!(pg.faces().len(), 3);
    assert!(pg.faces().iter().all(|f| f.len() == 2));
    match PlaneGraph::new(theta(), vec![vec![0, 1, 2], vec![0, 1, 2]], 0) {
        Err(GraphError::BadEmbedding(_)) => {}
        other => panic!("expected a bad-embedding error, got {other:?}"),
    }
}

#[test]
fn embedding_validation() {
    let k4 = || MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let planar_rotation = vec![vec![0, 2, 1], vec![3, 4, 0], vec![1, 5, 3], vec![2, 4, 5]];
    let pg = PlaneGraph::new(k4(), planar_rotation.clone(), 0).unwrap();
    assert_eq!(pg.faces().len(), 4);
    assert!(pg.faces().iter().all(|f| f.len() == 3));

    // Swapping two entries in one rotation list makes the face count violate
    // the sphere identity V - E + F = 2.
    let twisted = vec![vec![0, 2, 1], vec![3, 4, 0], vec![1, 5, 3], vec![2, 5, 4]];
    match PlaneGraph::new(k4(), twisted, 0) {
        Err(GraphError::BadEmbedding(_)) => {}
        other => panic!("expected a bad-embedding error, got {other:?}"),
    }

    // A rotation list that is not a permutation of the incident edges.
    let wrong_list = vec![vec![0, 2, 1], vec![3, 4, 0], vec![1, 5, 3], vec![2, 4, 4]];
    assert!(PlaneGraph::new(k4(), wrong_list, 0).is_err());

    // Rotation table length must match the vertex count.
    assert!(PlaneGraph::new(k4(), vec![vec![0, 2, 1]], 0).is_err());

    // Outer face index must be a valid face.
    assert!(PlaneGraph::new(k4(), planar_rotation, 99).is_err());

    // Disconnected graphs have no single planar drawing here.
    let disc = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
    match PlaneGraph::new(disc, vec![vec![0], vec![0], vec![1], vec![1]], 0) {
        Err(GraphError::Disconnected) => {}
        other => panic!("expected a disconnectedness error, got {other:?}"),
    }
}

/// A ring 0..7 with a center vertex 8 joined to the four odd ring vertices.
/// Edge ids: e0..e7 are the ring edges (i, i+1 mod 8), e8..e11 the spokes to
/// 1, 3, 5, 7. The drawing has four square faces around the center and the
/// ring as outer boundary.
fn spoked_ring() -> PlaneGraph {
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 0),
        (8, 1),
        (8, 3),
        (8, 5),
        (8, 7),
    ];
    let g = MultiGraph::new(9, edges).unwrap();
    let rotation = vec![
        vec![0, 7],
        vec![1, 8, 0],
        vec![2, 1],
        vec![3, 9, 2],
        vec![4, 3],
        vec![5, 10, 4],
        vec![6, 5],
        vec![7, 11, 6],
        vec![8, 9, 10, 11],
    ];
    let faces_only = PlaneGraph::new(g.clone(), rotation.clone(), 0).unwrap();
    let outer = (0..faces_only.faces().len())
        .find(|&i| faces_only.faces()[i].len() == 8)
        .expect("the ring boundary face");
    PlaneGraph::new(g, rotation, outer).unwrap()
}

#[test]
fn spoked_ring_faces_weak_dual_and_cycle_matrix() {
    let pg = spoked_ring();
    assert_eq!(pg.faces().len(), 5);
    let lens: Vec<usize> = pg.faces().iter().map(|f| f.len()).collect();
    assert!(same_multiset(&lens, &[4, 4, 4, 4, 8]));
    assert_eq!(pg.faces()[pg.outer_face()].len(), 8);

    // Dropping the outer face leaves a 4-ring of square faces.
    let wd = weak_dual(&pg).unwrap();
    assert_eq!(wd.graph.vertex_count(), 4);
    assert!(graphs_isomorphic(&wd.graph, &cycle4()));

    let c = cycle_intersection_matrix(&pg).unwrap();
    assert_eq!(c.rows(), 4);
    // Every interior face has four boundary edges and borders two others.
    for i in 0..4 {
        assert_eq!(c.at(i, i), &big(4));
        let off: BigInt = (0..4).filter(|&j| j != i).map(|j| c.at(i, j).clone()).sum();
        assert_eq!(off, big(-2));
    }
    assert_eq!(determinant(&c), big(192));
    assert_eq!(cokernel_torsion(&c).to_string(), "Z_8 \u{2295} Z_24");

    // The cycle-intersection matrix is exactly the dual graph's Laplacian
    // with the outer-face row and column removed, in the same index order.
    let d = dual(&pg).unwrap();
    assert_eq!(c, d.graph().reduced_laplacian(pg.outer_face()));
}

#[test]
fn dual_graphs_of_small_drawings() {
    // Ring on four vertices: two faces joined by four parallel dual edges.
    let pg = PlaneGraph::new(
        cycle4(),
        vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]],
        0,
    )
    .unwrap();
    let d = dual(&pg).unwrap();
    assert_eq!(d.graph().vertex_count(), 2);
    assert_eq!(d.graph().edge_count(), 4);
    assert_eq!(d.graph().multiplicity(0, 1), 4);

    // Triangle <-> three parallel edges.
    let tri = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
    let pg = PlaneGraph::new(tri, vec![vec![0, 2], vec![0, 1], vec![1, 2]], 0).unwrap();
    let d = dual(&pg).unwrap();
    assert!(graphs_isomorphic(d.graph(), &theta()));
    // Taking the dual twice returns the original graph shape.
    let dd = dual(&d).unwrap();
    assert!(graphs_isomorphic(dd.graph(), pg.graph()));

    // A single edge bounds the same face on both sides; no dual exists here.
    let p2 = MultiGraph::new(2, vec![(0, 1)]).unwrap();
    let pg = PlaneGraph::new(p2, vec![vec![0], vec![0]], 0).unwrap();
    match dual(&pg) {
        Err(GraphError::Bridge) => {}
        other => panic!("expected a bridge error, got {other:?}"),
    }
}

#[test]
fn dual_of_spoked_ring() {
    let pg = spoked_ring();
    let d = dual(&pg).unwrap();
    assert_eq!(d.graph().vertex_count(), 5);
    assert_eq!(d.graph().edge_count(), 12);
    let mut degs: Vec<usize> = (0..5).map(|v| d.graph().degree(v)).collect();
    degs.sort();
    assert_eq!(degs, vec![4, 4, 4, 4, 8]);
    // Dual vertices inherit the face indices, so the outer face's dual vertex
    // has the full ring as its incident edges.
    assert_eq!(d.graph().degree(pg.outer_face()), 8);

    let dd = dual(&d).unwrap();
    assert!(graphs_isomorphic(dd.graph(), pg.graph()));
}

#[test]
fn blocks_of_cut_vertex_graphs() {
    // Two triangles sharing a single vertex.
    let bowtie = MultiGraph::new(
        5,
        vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)],
    )
    .unwrap();
    let mut blocks = biconnected_blocks(&bowtie);
    for b in &mut blocks {
        b.sort();
    }
    blocks.sort();
    assert_eq!(blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert_eq!(bowtie.spanning_tree_count(), big(9));

    // Two triangles joined by a bridge: the bridge is its own block.
    let g = MultiGraph::new(
        6,
        vec![
            (0, 1),
            (1, 2),
            (2, 0),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 3),
        ],
    )
    .unwrap();
    let mut blocks = biconnected_blocks(&g);
    for b in &mut blocks {
        b.sort();
    }
    blocks.sort();
    assert_eq!(blocks, vec![vec![0, 1, 2], vec![3], vec![4, 5, 6]]);
    assert_eq!(g.spanning_tree_count(), big(9));

    // A single block covers a ring.
    let mut ring_blocks = biconnected_blocks(&cycle4());
    for b in &mut ring_blocks {
        b.sort();
    }
    assert_eq!(ring_blocks, vec![vec![0, 1, 2, 3]]);
}
