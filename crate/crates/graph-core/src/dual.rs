//! Dual graphs of plane drawings, the weak dual, and the cycle-intersection
//! matrix of the bounded faces.

use crate::{GraphError, MultiGraph, PlaneGraph};
use int_linalg::IntMatrix;
use num_bigint::BigInt;

/// The dual drawing of a plane graph.
///
/// Vertex `i` of the dual is face `i` of the input, and dual edge `j` crosses
/// input edge `j`; both correspondences are by index, so no lookup tables are
/// needed. The stored direction of dual edge `j` runs from the face on the
/// right of input edge `j` (traversed tail to head) to the face on its left.
/// The rotation at dual vertex `i` lists the crossing edges in the boundary
/// walk order of face `i`, and face `0` of the dual is taken as its outer
/// face.
///
/// Fails with [`GraphError::Bridge`] if some edge has the same face on both
/// sides, since a loop would be required there.
pub fn dual(pg: &PlaneGraph) -> Result<PlaneGraph, GraphError> {
    let m = pg.graph().edge_count();
    let mut dual_edges = Vec::with_capacity(m);
    for e in 0..m {
        let left = pg.face_of(e, true);
        let right = pg.face_of(e, false);
        if left == right {
            return Err(GraphError::Bridge);
        }
        dual_edges.push((right, left));
    }
    let dual_graph = MultiGraph::new(pg.faces().len(), dual_edges)?;
    let rotation: Vec<Vec<usize>> = pg.faces().iter().map(|f| f.edge_ids()).collect();
    PlaneGraph::new(dual_graph, rotation, 0)
}

/// The weak dual: the dual with the outer face's vertex (and its edges)
/// removed.
#[derive(Debug, Clone)]
pub struct WeakDual {
    pub graph: MultiGraph,
    /// For each weak-dual vertex, the index of the bounded face it stands
    /// for; ascending in face index.
    pub face_of_vertex: Vec<usize>,
    /// For each weak-dual edge, the id of the input edge it crosses.
    pub edge_of_edge: Vec<usize>,
}

/// Builds the weak dual of a plane drawing.
pub fn weak_dual(pg: &PlaneGraph) -> Result<WeakDual, GraphError> {
    let interior = pg.interior_face_indices();
    let mut vertex_of_face = vec![usize::MAX; pg.faces().len()];
    for (i, &f) in interior.iter().enumerate() {
        vertex_of_face[f] = i;
    }
    let mut edges = Vec::new();
    let mut edge_of_edge = Vec::new();
    for e in 0..pg.graph().edge_count() {
        let left = pg.face_of(e, true);
        let right = pg.face_of(e, false);
        if left == right {
            return Err(GraphError::Bridge);
        }
        if left != pg.outer_face() && right != pg.outer_face() {
            edges.push((vertex_of_face[right], vertex_of_face[left]));
            edge_of_edge.push(e);
        }
    }
    Ok(WeakDual {
        graph: MultiGraph::new(interior.len(), edges)?,
        face_of_vertex: interior,
        edge_of_edge,
    })
}

/// The cycle-intersection matrix of the bounded faces, in ascending face
/// order: boundary length of face `i` on the diagonal, minus the number of
/// edges shared by faces `i` and `j` elsewhere. Equals the dual graph's
/// Laplacian with the outer face's row and column deleted.
pub fn cycle_intersection_matrix(pg: &PlaneGraph) -> Result<IntMatrix, GraphError> {
    let interior = pg.interior_face_indices();
    let mut vertex_of_face = vec![usize::MAX; pg.faces().len()];
    for (i, &f) in interior.iter().enumerate() {
        vertex_of_face[f] = i;
    }
    let k = interior.len();
    let mut m = IntMatrix::zeros(k, k);
    for (i, &f) in interior.iter().enumerate() {
        m.set(i, i, BigInt::from(pg.faces()[f].len() as u64));
    }
    for e in 0..pg.graph().edge_count() {
        let left = pg.face_of(e, true);
        let right = pg.face_of(e, false);
        if left == right {
            return Err(GraphError::Bridge);
        }
        if left != pg.outer_face() && right != pg.outer_face() {
            let (i, j) = (vertex_of_face[left], vertex_of_face[right]);
            m.set(i, j, m.at(i, j) - 1);
            m.set(j, i, m.at(j, i) - 1);
        }
    }
    Ok(m)
}
