use crate::GraphError;
use int_linalg::IntMatrix;
use num_bigint::BigInt;

/// A finite undirected multigraph without loops.
///
/// Vertices are `0..n`. Edges are numbered `0..m` in insertion order, carry an
/// ordered endpoint pair `(u, v)` that fixes a reference direction, and may
/// repeat endpoint pairs. Loops are rejected so that an edge id identifies at
/// most one position in each vertex's neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl MultiGraph {
    /// Builds a multigraph on `n` vertices from an edge list.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::InvalidGraph(format!(
                    "edge {i} joins {u} and {v}, but vertices end at {n}"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidGraph(format!("edge {i} is a loop at {u}")));
            }
            incident[u].push(i);
            incident[v].push(i);
        }
        Ok(MultiGraph { n, edges, incident })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The stored endpoint pair of edge `e`, in reference direction.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` other than `v`. Panics if `v` is not an endpoint.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (u, w) = self.edges[e];
        if v == u {
            w
        } else if v == w {
            u
        } else {
            panic!("vertex {v} is not an endpoint of edge {e}")
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    /// Edge ids incident to `v`, in ascending order.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.incident[v].clone()
    }

    /// Number of parallel edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.incident[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.incident[v] {
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// The combinatorial Laplacian: degrees on the diagonal, minus the number
    /// of parallel edges elsewhere.
    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                BigInt::from(self.degree(i) as u64)
            } else {
                -BigInt::from(self.multiplicity(i, j) as u64)
            }
        })
    }

    /// The Laplacian with row and column `q` removed; remaining rows and
    /// columns keep their ascending vertex order.
    pub fn reduced_laplacian(&self, q: usize) -> IntMatrix {
        assert!(q < self.n, "vertex {q} out of range");
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != q).collect();
        self.laplacian().submatrix(&keep, &keep)
    }

    /// Number of spanning trees, via the determinant of any reduced
    /// Laplacian. Zero for disconnected graphs.
    pub fn spanning_tree_count(&self) -> BigInt {
        match self.n {
            0 => BigInt::from(0),
            1 => BigInt::from(1),
            _ => int_linalg::determinant(&self.reduced_laplacian(0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_edges_accumulate_multiplicity() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.spanning_tree_count(), BigInt::from(2));
    }

    #[test]
    fn reduced_laplacian_drops_the_chosen_vertex() {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = g.reduced_laplacian(1);
        assert_eq!(r.rows(), 2);
        assert_eq!(r.at(0, 0), &BigInt::from(2));
        assert_eq!(r.at(0, 1), &BigInt::from(-1));
    }
}
