use std::fmt;

/// Errors produced while building or analyzing graphs and drawings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// The graph does not hold together as one piece.
    Disconnected,
    /// The rotation data does not describe a drawing in the plane.
    BadEmbedding(String),
    /// An edge borders the same face on both of its sides.
    Bridge,
    /// Polygon lengths incompatible with the gluing tree.
    InfeasibleLengths(String),
    /// Structurally invalid input: loops, out-of-range endpoints, bad text.
    InvalidGraph(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Disconnected => write!(f, "disconnected"),
            GraphError::BadEmbedding(msg) => write!(f, "bad embedding: {msg}"),
            GraphError::Bridge => write!(f, "bridge"),
            GraphError::InfeasibleLengths(msg) => write!(f, "infeasible lengths: {msg}"),
            GraphError::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
        }
    }
}

impl std::error::Error for GraphError {}
