//! Rotation-system drawings: a plane embedding is the graph together with a
//! counterclockwise cyclic order of the incident edges at every vertex. Faces
//! are recovered by walking edge sides.

use crate::{GraphError, MultiGraph};

/// An edge with a direction of travel: `forward` means from the stored tail
/// to the stored head of the edge's endpoint pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirectedEdge {
    pub edge: usize,
    pub forward: bool,
}

impl DirectedEdge {
    pub fn new(edge: usize, forward: bool) -> Self {
        DirectedEdge { edge, forward }
    }

    pub fn tail(&self, g: &MultiGraph) -> usize {
        let (u, v) = g.endpoints(self.edge);
        if self.forward {
            u
        } else {
            v
        }
    }

    pub fn head(&self, g: &MultiGraph) -> usize {
        let (u, v) = g.endpoints(self.edge);
        if self.forward {
            v
        } else {
            u
        }
    }

    pub fn reversed(self) -> Self {
        DirectedEdge {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    /// Dense index of this directed edge among all `2m` of them.
    fn index(self) -> usize {
        2 * self.edge + usize::from(!self.forward)
    }
}

/// A face boundary: the cyclic sequence of directed edges that walk around
/// the face keeping it on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    walk: Vec<DirectedEdge>,
}

impl Face {
    pub fn walk(&self) -> &[DirectedEdge] {
        &self.walk
    }

    /// Number of boundary edges.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Edge ids in walk order.
    pub fn edge_ids(&self) -> Vec<usize> {
        self.walk.iter().map(|d| d.edge).collect()
    }

    /// Whether the boundary uses edge `e` in either direction.
    pub fn contains_edge(&self, e: usize) -> bool {
        self.walk.iter().any(|d| d.edge == e)
    }

    /// The vertices visited, in walk order (each directed edge contributes
    /// its tail). Vertices repeat if the walk passes them twice.
    pub fn vertices(&self, g: &MultiGraph) -> Vec<usize> {
        self.walk.iter().map(|d| d.tail(g)).collect()
    }
}

/// Walks all face boundaries of the rotation system.
///
/// A directed edge arriving at `v` continues along the edge that precedes it
/// in `v`'s counterclockwise rotation, directed out of `v`; iterating this
/// rule traces the face lying on the left of every directed edge. Returns the
/// faces and a lookup table mapping directed edges to face indices, addressed
/// as `2 * edge + 0` for forward and `2 * edge + 1` for backward travel.
///
/// Fails when the rotation table does not list each vertex's incident edges
/// exactly once.
pub fn trace_faces(
    graph: &MultiGraph,
    rotation: &[Vec<usize>],
) -> Result<(Vec<Face>, Vec<usize>), GraphError> {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    if rotation.len() != n {
        return Err(GraphError::BadEmbedding(format!(
            "rotation lists for {} of {n} vertices",
            rotation.len()
        )));
    }

    // position_at[2e + side]: index of edge e within the rotation list of its
    // tail (side 0) or head (side 1) endpoint.
    const UNSET: usize = usize::MAX;
    let mut position_at = vec![UNSET; 2 * m];
    for (v, list) in rotation.iter().enumerate() {
        if list.len() != graph.degree(v) {
            return Err(GraphError::BadEmbedding(format!(
                "vertex {v} lists {} edges but has degree {}",
                list.len(),
                graph.degree(v)
            )));
        }
        for (idx, &e) in list.iter().enumerate() {
            if e >= m {
                return Err(GraphError::BadEmbedding(format!(
                    "vertex {v} lists unknown edge {e}"
                )));
            }
            let (a, b) = graph.endpoints(e);
            let slot = if v == a {
                2 * e
            } else if v == b {
                2 * e + 1
            } else {
                return Err(GraphError::BadEmbedding(format!(
                    "vertex {v} lists edge {e}, which does not touch it"
                )));
            };
            if position_at[slot] != UNSET {
                return Err(GraphError::BadEmbedding(format!(
                    "vertex {v} lists edge {e} twice"
                )));
            }
            position_at[slot] = idx;
        }
    }
    debug_assert!(position_at.iter().all(|&p| p != UNSET));

    // Successor of a directed edge `d` ending at `v`: take the circular
    // predecessor of `d.edge` in rotation[v], directed out of `v`.
    let successor = |d: DirectedEdge| -> DirectedEdge {
        let v = d.head(graph);
        let list = &rotation[v];
        let (a, b) = graph.endpoints(d.edge);
        let slot = if v == a { 2 * d.edge } else { 2 * d.edge + 1 };
        debug_assert!(v == a || v == b);
        let pos = position_at[slot];
        let prev = list[(pos + list.len() - 1) % list.len()];
        let out_forward = graph.endpoints(prev).0 == v;
        DirectedEdge::new(prev, out_forward)
    };

    let mut face_of = vec![UNSET; 2 * m];
    let mut faces = Vec::new();
    for start_idx in 0..2 * m {
        if face_of[start_idx] != UNSET {
            continue;
        }
        let start = DirectedEdge::new(start_idx / 2, start_idx % 2 == 0);
        let face_index = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            debug_assert_eq!(face_of[d.index()], UNSET);
            face_of[d.index()] = face_index;
            walk.push(d);
            d = successor(d);
            if d == start {
                break;
            }
        }
        faces.push(Face { walk });
    }

    // A graph that is a single vertex still has its one face.
    if n == 1 && m == 0 {
        faces.push(Face { walk: Vec::new() });
    }

    Ok((faces, face_of))
}

/// A connected multigraph drawn in the plane: rotations, traced faces, and a
/// chosen outer face.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: MultiGraph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    face_of: Vec<usize>,
    outer: usize,
}

impl PlaneGraph {
    /// Validates the rotation system, traces the faces, and checks the count
    /// against the sphere identity `V - E + F = 2`.
    pub fn new(
        graph: MultiGraph,
        rotation: Vec<Vec<usize>>,
        outer: usize,
    ) -> Result<Self, GraphError> {
        if graph.vertex_count() == 0 {
            return Err(GraphError::InvalidGraph("no vertices".into()));
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let (faces, face_of) = trace_faces(&graph, &rotation)?;
        let v = graph.vertex_count() as i64;
        let e = graph.edge_count() as i64;
        let f = faces.len() as i64;
        if v - e + f != 2 {
            return Err(GraphError::BadEmbedding(format!(
                "V - E + F = {} instead of 2",
                v - e + f
            )));
        }
        if outer >= faces.len() {
            return Err(GraphError::BadEmbedding(format!(
                "outer face {outer} out of range, only {} faces",
                faces.len()
            )));
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            faces,
            face_of,
            outer,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    /// Index of the face on the left of edge `e` when traversed forward
    /// (`true`) or backward (`false`).
    pub fn face_of(&self, e: usize, forward: bool) -> usize {
        self.face_of[DirectedEdge::new(e, forward).index()]
    }

    /// All face indices except the outer one, ascending.
    pub fn interior_face_indices(&self) -> Vec<usize> {
        (0..self.faces.len()).filter(|&i| i != self.outer).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digon_has_two_faces() {
        let g = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let pg = PlaneGraph::new(g, vec![vec![0, 1], vec![0, 1]], 0).unwrap();
        assert_eq!(pg.faces().len(), 2);
        assert!(pg.faces().iter().all(|f| f.len() == 2));
        assert_ne!(pg.face_of(0, true), pg.face_of(0, false));
    }

    #[test]
    fn single_vertex_has_one_face() {
        let g = MultiGraph::new(1, vec![]).unwrap();
        let pg = PlaneGraph::new(g, vec![vec![]], 0).unwrap();
        assert_eq!(pg.faces().len(), 1);
        assert!(pg.faces()[0].is_empty());
    }

    #[test]
    fn walk_keeps_its_face_on_the_left() {
        // Triangle: both faces walk all three edges.
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let pg = PlaneGraph::new(g, vec![vec![0, 2], vec![0, 1], vec![1, 2]], 0).unwrap();
        for face in pg.faces() {
            for pair in face.walk().windows(2) {
                assert_eq!(pair[0].head(pg.graph()), pair[1].tail(pg.graph()));
            }
            let first = face.walk().first().unwrap();
            let last = face.walk().last().unwrap();
            assert_eq!(last.head(pg.graph()), first.tail(pg.graph()));
        }
    }
}
