#![forbid(unsafe_code)]
//! Command-line front-end for exact sandpile-group computations: groups,
//! identities, and spanning-tree counts of graphs, outerplane gluings,
//! polygon chains, and polygon flowers; configuration transfer between a
//! drawn graph and its dual; and reproduction of the built-in reference
//! tables.

pub mod catalog;
pub mod commands;
pub mod error;
pub mod input;

pub use commands::{Report, TableId};
pub use error::{CliError, EXIT_BOUND, EXIT_INFEASIBLE, EXIT_PARSE, EXIT_TABLE_MISMATCH};
