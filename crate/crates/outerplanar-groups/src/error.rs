use std::fmt;

/// Failure modes of the structure-theory layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OuterplanarError {
    /// A spec string could not be read.
    Parse(String),
    /// A spec was read but violates a structural requirement.
    InvalidSpec(String),
    /// A flower's attachment polygon has only two sides, so shrinking it by
    /// one would not leave a polygon.
    ContractionUndefined,
    /// The instance is too large for the exhaustive parts of the theory.
    EnumerationBound(String),
}

impl fmt::Display for OuterplanarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OuterplanarError::Parse(msg) => write!(f, "parse error: {msg}"),
            OuterplanarError::InvalidSpec(msg) => write!(f, "invalid spec: {msg}"),
            OuterplanarError::ContractionUndefined => write!(f, "contraction undefined"),
            OuterplanarError::EnumerationBound(msg) => write!(f, "enumeration bound: {msg}"),
        }
    }
}

impl std::error::Error for OuterplanarError {}
