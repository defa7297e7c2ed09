use std::fmt;

/// Errors raised by chip-firing play and enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SandpileError {
    /// A pile had a negative entry where only nonnegative chips make sense.
    NegativeChips,
    /// A stable pile was required but the given one can still fire.
    Unstable,
    /// A firing budget or size limit was exhausted before finishing.
    BoundExceeded(String),
    /// The state space is too large to enumerate.
    EnumerationBound(String),
}

impl fmt::Display for SandpileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SandpileError::NegativeChips => write!(f, "negative chips"),
            SandpileError::Unstable => write!(f, "unstable"),
            SandpileError::BoundExceeded(msg) => write!(f, "bound exceeded: {msg}"),
            SandpileError::EnumerationBound(msg) => write!(f, "enumeration bound: {msg}"),
        }
    }
}

impl std::error::Error for SandpileError {}
