//! Command-level errors, each mapped to a fixed process exit code.

use duality_transfer::DualityError;
use graph_core::GraphError;
use outerplanar_groups::OuterplanarError;
use sandpile::SandpileError;
use std::fmt;

/// Exit code for malformed input: unreadable files, bad numbers, bad specs.
pub const EXIT_PARSE: i32 = 2;
/// Exit code for well-formed input that denotes no feasible object.
pub const EXIT_INFEASIBLE: i32 = 3;
/// Exit code for computations abandoned at an enumeration or firing budget.
pub const EXIT_BOUND: i32 = 4;
/// Exit code for a reference table that failed to reproduce.
pub const EXIT_TABLE_MISMATCH: i32 = 5;

/// Anything a command can fail with, tagged by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Input could not be read or parsed.
    Parse(String),
    /// Input parsed but describes an impossible object or computation.
    Infeasible(String),
    /// A size or work budget was exceeded.
    Bound(String),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
            CliError::Bound(_) => EXIT_BOUND,
        }
    }

    /// Short machine-readable tag for the error family.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Infeasible(_) => "infeasible",
            CliError::Bound(_) => "bound",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Infeasible(msg) => write!(f, "infeasible: {msg}"),
            CliError::Bound(msg) => write!(f, "bound exceeded: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<OuterplanarError> for CliError {
    fn from(e: OuterplanarError) -> Self {
        match e {
            OuterplanarError::Parse(msg) => CliError::Parse(msg),
            OuterplanarError::InvalidSpec(msg) => CliError::Infeasible(msg),
            OuterplanarError::ContractionUndefined => {
                CliError::Infeasible("contraction undefined".into())
            }
            OuterplanarError::EnumerationBound(msg) => CliError::Bound(msg),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            // Structurally invalid data is an input problem; the rest are
            // well-formed inputs that fail a geometric or counting condition.
            GraphError::InvalidGraph(msg) => CliError::Parse(msg),
            other => CliError::Infeasible(other.to_string()),
        }
    }
}

impl From<SandpileError> for CliError {
    fn from(e: SandpileError) -> Self {
        match e {
            SandpileError::BoundExceeded(msg) => CliError::Bound(msg),
            SandpileError::EnumerationBound(msg) => CliError::Bound(msg),
            other => CliError::Infeasible(other.to_string()),
        }
    }
}

impl From<DualityError> for CliError {
    fn from(e: DualityError) -> Self {
        match e {
            DualityError::Graph(g) => g.into(),
            DualityError::Sandpile(s) => s.into(),
            other => CliError::Infeasible(other.to_string()),
        }
    }
}
