//! Edge orientations, oriented incidence matrices, and the right-left rule
//! carrying an orientation across plane duality.

use graph_core::{MultiGraph, PlaneGraph};
use int_linalg::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::DualityError;

/// A direction for every edge of a graph: entry `e` is `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    ends: Vec<(usize, usize)>,
}

impl Orientation {
    /// Wraps explicit `(tail, head)` pairs, one per edge id.
    pub fn new(ends: Vec<(usize, usize)>) -> Self {
        Orientation { ends }
    }

    /// The orientation reading each edge's stored endpoint pair as
    /// tail-to-head.
    pub fn forward(graph: &MultiGraph) -> Self {
        Orientation {
            ends: graph.edges().to_vec(),
        }
    }

    /// Number of oriented edges.
    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    /// The vertex edge `e` leaves.
    pub fn tail(&self, e: usize) -> usize {
        self.ends[e].0
    }

    /// The vertex edge `e` enters.
    pub fn head(&self, e: usize) -> usize {
        self.ends[e].1
    }

    /// A copy with edge `e` pointing the other way.
    pub fn with_edge_reversed(&self, e: usize) -> Self {
        let mut ends = self.ends.clone();
        ends[e] = (ends[e].1, ends[e].0);
        Orientation { ends }
    }

    /// A copy with every edge pointing the other way.
    pub fn reversed(&self) -> Self {
        Orientation {
            ends: self.ends.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }

    /// Whether edge `e` of `graph` is traversed in its stored direction;
    /// errors when the orientation does not cover exactly this edge.
    pub(crate) fn runs_forward(&self, graph: &MultiGraph, e: usize) -> Result<bool, DualityError> {
        let (a, b) = graph.endpoints(e);
        let (t, h) = self.ends[e];
        if (t, h) == (a, b) {
            Ok(true)
        } else if (t, h) == (b, a) {
            Ok(false)
        } else {
            Err(DualityError::OrientationMismatch(format!(
                "edge {e} joins {a} and {b} but is oriented {t} to {h}"
            )))
        }
    }

    pub(crate) fn check_covers(&self, graph: &MultiGraph) -> Result<(), DualityError> {
        if self.ends.len() != graph.edge_count() {
            return Err(DualityError::OrientationMismatch(format!(
                "orientation covers {} edges but the graph has {}",
                self.ends.len(),
                graph.edge_count()
            )));
        }
        for e in 0..self.ends.len() {
            self.runs_forward(graph, e)?;
        }
        Ok(())
    }
}

/// The oriented incidence matrix: one row per vertex, one column per edge id,
/// with −1 at the tail and +1 at the head.
pub fn incidence_matrix(graph: &MultiGraph, o: &Orientation) -> Result<IntMatrix, DualityError> {
    o.check_covers(graph)?;
    let mut m = IntMatrix::zeros(graph.vertex_count(), graph.edge_count());
    for e in 0..graph.edge_count() {
        m.set(o.tail(e), e, m.at(o.tail(e), e) - BigInt::one());
        m.set(o.head(e), e, m.at(o.head(e), e) + BigInt::one());
    }
    Ok(m)
}

/// Orients each dual edge from the face on the right of its crossing edge to
/// the face on its left, "left" being the side whose boundary walk traverses
/// the edge in the direction `o` gives it.
///
/// Fails with [`DualityError::Bridge`] when an edge has the same face on
/// both sides.
pub fn right_left_orientation(
    pg: &PlaneGraph,
    o: &Orientation,
) -> Result<Orientation, DualityError> {
    o.check_covers(pg.graph())?;
    let mut ends = Vec::with_capacity(pg.graph().edge_count());
    for e in 0..pg.graph().edge_count() {
        let forward = o.runs_forward(pg.graph(), e)?;
        let left = pg.face_of(e, forward);
        let right = pg.face_of(e, !forward);
        if left == right {
            return Err(DualityError::Bridge);
        }
        ends.push((right, left));
    }
    Ok(Orientation { ends })
}

/// Reads the edges back out of an oriented incidence matrix; errors unless
/// every column has exactly one −1 (tail) and one +1 (head).
pub(crate) fn edges_of_incidence(m: &IntMatrix) -> Result<Vec<(usize, usize)>, DualityError> {
    let mut ends = Vec::with_capacity(m.cols());
    for e in 0..m.cols() {
        let mut tail = None;
        let mut head = None;
        for v in 0..m.rows() {
            let entry = m.at(v, e);
            if entry.is_zero() {
                continue;
            }
            if *entry == BigInt::one() && head.is_none() {
                head = Some(v);
            } else if *entry == -BigInt::one() && tail.is_none() {
                tail = Some(v);
            } else {
                return Err(DualityError::OrientationMismatch(format!(
                    "column {e} is not an oriented edge"
                )));
            }
        }
        match (tail, head) {
            (Some(t), Some(h)) => ends.push((t, h)),
            _ => {
                return Err(DualityError::OrientationMismatch(format!(
                    "column {e} is not an oriented edge"
                )))
            }
        }
    }
    Ok(ends)
}
