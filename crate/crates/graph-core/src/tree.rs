use crate::{GraphError, MultiGraph};
use int_linalg::IntMatrix;
use num_bigint::BigInt;

/// A labeled tree: a connected simple graph on `n` vertices with `n - 1`
/// edges. Wraps a [`MultiGraph`] and adds sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: MultiGraph,
    neighbors: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates and builds a tree from an edge list on vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidGraph("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(GraphError::InvalidGraph(format!(
                "{} edges cannot form a tree on {n} vertices",
                edges.len()
            )));
        }
        let graph = MultiGraph::new(n, edges.to_vec())?;
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::InvalidGraph(format!(
                    "edge between {u} and {v} repeats"
                )));
            }
        }
        if !graph.is_connected() {
            return Err(GraphError::InvalidGraph(
                "the edges do not connect all vertices".into(),
            ));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Tree { graph, neighbors })
    }

    /// Parses a whitespace-separated edge list, one `u v` pair per line.
    /// Blank lines are skipped; the vertex count is one past the largest
    /// label mentioned.
    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut max_vertex = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 2 {
                return Err(GraphError::InvalidGraph(format!(
                    "line {}: expected two vertex numbers, found {}",
                    lineno + 1,
                    tokens.len()
                )));
            }
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|_| {
                    GraphError::InvalidGraph(format!(
                        "line {}: {tok:?} is not a vertex number",
                        lineno + 1
                    ))
                })
            };
            let u = parse(tokens[0])?;
            let v = parse(tokens[1])?;
            max_vertex = max_vertex.max(u).max(v);
            edges.push((u, v));
        }
        if edges.is_empty() {
            return Err(GraphError::InvalidGraph("no edges given".into()));
        }
        Tree::from_edges(max_vertex + 1, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    /// The 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        IntMatrix::from_fn(n, n, |i, j| {
            if i != j && self.neighbors[i].binary_search(&j).is_ok() {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        })
    }
}
