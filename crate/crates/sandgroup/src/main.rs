#![forbid(unsafe_code)]
//! `sandgroup`: exact sandpile-group computations from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use sandgroup::commands::{
    flower_command, group_command, identity_command, table_command, tau_command,
    transfer_command, Report, TableId,
};
use sandgroup::error::{CliError, EXIT_PARSE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    /// Human-readable lines.
    Text,
    /// One JSON object, `"schema": 1`.
    Json,
}

#[derive(Parser)]
#[command(
    name = "sandgroup",
    version,
    about = "Exact sandpile groups, identities, and spanning-tree counts",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sandpile group of a graph, outerplane gluing, chain, or flower.
    Group {
        /// File of `u v` edge lines describing the gluing tree.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Comma-separated polygon lengths, one per tree vertex.
        #[arg(long)]
        lengths: Option<String>,
        /// Graph JSON (inline, or a path to a file of it).
        #[arg(long)]
        graph: Option<String>,
        /// Polygon chain, e.g. `4,4,5` or `8x11`.
        #[arg(long)]
        chain: Option<String>,
        /// Polygon flower, e.g. `5; 4x5; 4x8; 6x2; 6x5; 8x5`.
        #[arg(long)]
        flower: Option<String>,
    },
    /// Identity element of a sandpile model.
    Identity {
        /// File of `u v` edge lines describing a tree to cone over.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Comma-separated degree targets, one per tree vertex.
        #[arg(long)]
        lengths: Option<String>,
        /// Graph JSON (inline, or a path to a file of it).
        #[arg(long)]
        graph: Option<String>,
    },
    /// Spanning-tree count of a graph, outerplane gluing, chain, or flower.
    Tau {
        /// File of `u v` edge lines describing the gluing tree.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Comma-separated polygon lengths, one per tree vertex.
        #[arg(long)]
        lengths: Option<String>,
        /// Graph JSON (inline, or a path to a file of it).
        #[arg(long)]
        graph: Option<String>,
        /// Polygon chain, e.g. `4,4,5` or `8x11`.
        #[arg(long)]
        chain: Option<String>,
        /// Polygon flower, e.g. `5; 4x5; 4x8; 6x2; 6x5; 8x5`.
        #[arg(long)]
        flower: Option<String>,
    },
    /// Full analysis of a polygon flower.
    Flower {
        /// Polygon flower, e.g. `5; 4x5; 4x8; 6x2; 6x5; 8x5`.
        #[arg(long)]
        flower: String,
    },
    /// Carry a configuration from a drawn graph to its dual.
    Transfer {
        /// Graph JSON with `rotation` and `outer` (inline or a file path).
        #[arg(long)]
        graph: String,
        /// Comma-separated chip counts, one per non-sink vertex.
        #[arg(long)]
        config: String,
    },
    /// Recompute a built-in reference table and report any differences.
    Table {
        /// Which table: ladders, identities-A, or identities-B.
        #[arg(long, value_enum)]
        id: TableId,
    },
}

fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Group {
            tree,
            lengths,
            graph,
            chain,
            flower,
        } => group_command(
            tree.as_deref(),
            lengths.as_deref(),
            graph.as_deref(),
            chain.as_deref(),
            flower.as_deref(),
        ),
        Command::Identity {
            tree,
            lengths,
            graph,
        } => identity_command(tree.as_deref(), lengths.as_deref(), graph.as_deref()),
        Command::Tau {
            tree,
            lengths,
            graph,
            chain,
            flower,
        } => tau_command(
            tree.as_deref(),
            lengths.as_deref(),
            graph.as_deref(),
            chain.as_deref(),
            flower.as_deref(),
        ),
        Command::Flower { flower } => flower_command(flower),
        Command::Transfer { graph, config } => transfer_command(graph, config),
        Command::Table { id } => table_command(*id),
    }
}

fn exit_code(code: i32) -> ExitCode {
    ExitCode::from(u8::try_from(code).expect("exit codes fit a byte"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let object = json!({
                "schema": 1,
                "error": { "kind": "parse", "code": EXIT_PARSE, "message": e.to_string() },
            });
            eprintln!("{object}");
            return exit_code(EXIT_PARSE);
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => println!("{}", report.text),
                Format::Json => println!("{}", report.json),
            }
            exit_code(report.exit)
        }
        Err(err) => {
            let object = json!({
                "schema": 1,
                "error": {
                    "kind": err.kind(),
                    "code": err.exit_code(),
                    "message": err.to_string(),
                },
            });
            eprintln!("{object}");
            exit_code(err.exit_code())
        }
    }
}
