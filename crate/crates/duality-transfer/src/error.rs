use graph_core::GraphError;
use sandpile::SandpileError;
use std::fmt;

/// Failure modes of orientation, flow, and transfer computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityError {
    /// An orientation does not describe the graph's edges one for one, or a
    /// matrix claimed as an oriented incidence matrix is not one.
    OrientationMismatch(String),
    /// An edge has the same face on both sides, so no dual edge crosses it.
    Bridge,
    /// The demanded vertex balances admit no integer flow.
    Infeasible,
    /// A graph construction failed while building the dual.
    Graph(GraphError),
    /// A sandpile computation failed on the dual model.
    Sandpile(SandpileError),
}

impl fmt::Display for DualityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualityError::OrientationMismatch(msg) => write!(f, "orientation mismatch: {msg}"),
            DualityError::Bridge => write!(f, "bridge: an edge borders the same face twice"),
            DualityError::Infeasible => write!(f, "infeasible"),
            DualityError::Graph(e) => write!(f, "{e}"),
            DualityError::Sandpile(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DualityError {}

impl From<GraphError> for DualityError {
    fn from(e: GraphError) -> Self {
        DualityError::Graph(e)
    }
}

impl From<SandpileError> for DualityError {
    fn from(e: SandpileError) -> Self {
        DualityError::Sandpile(e)
    }
}
