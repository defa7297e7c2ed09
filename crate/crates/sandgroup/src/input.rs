//! Parsing of the command line's file and inline inputs.

use graph_core::{MultiGraph, PlaneGraph, Tree};
use num_bigint::BigInt;
use serde_json::Value;
use std::path::Path;

use crate::error::CliError;

/// Parses a comma-separated list of polygon lengths / degree targets.
pub fn parse_lengths(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| CliError::Parse(format!("bad length {tok:?}")))
        })
        .collect()
}

/// Parses a comma-separated list of chip counts (negatives allowed: any
/// class representative is acceptable input).
pub fn parse_config(text: &str) -> Result<Vec<BigInt>, CliError> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<BigInt>()
                .map_err(|_| CliError::Parse(format!("bad chip count {tok:?}")))
        })
        .collect()
}

/// Reads a tree from a file of whitespace-separated `u v` edge lines.
pub fn read_tree_file(path: &Path) -> Result<Tree, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    Ok(Tree::parse_text(&text)?)
}

/// A graph given as JSON: vertex count, edge list, and optionally a
/// combinatorial drawing (per-vertex counterclockwise rotation of edge ids
/// plus the index of the outer face) and a sink vertex.
pub struct GraphInput {
    pub graph: MultiGraph,
    pub rotation: Option<Vec<Vec<usize>>>,
    pub outer: usize,
    pub sink: usize,
}

impl GraphInput {
    /// The drawing, when the JSON supplied one.
    pub fn plane_graph(&self) -> Result<PlaneGraph, CliError> {
        let rotation = self
            .rotation
            .clone()
            .ok_or_else(|| CliError::Parse("graph JSON lacks \"rotation\"".into()))?;
        Ok(PlaneGraph::new(self.graph.clone(), rotation, self.outer)?)
    }
}

/// Accepts either inline JSON (text starting with `{`) or a path to a JSON
/// file, and parses the graph object.
pub fn read_graph(arg: &str) -> Result<GraphInput, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| CliError::Parse(format!("cannot read {arg}: {e}")))?
    };
    parse_graph_json(&text)
}

fn as_index(v: &Value, what: &str) -> Result<usize, CliError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| CliError::Parse(format!("{what} must be a nonnegative integer, got {v}")))
}

/// Parses the JSON graph object itself.
pub fn parse_graph_json(text: &str) -> Result<GraphInput, CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("bad graph JSON: {e}")))?;
    let object = value
        .as_object()
        .ok_or_else(|| CliError::Parse("graph JSON must be an object".into()))?;
    for key in object.keys() {
        if !matches!(key.as_str(), "n" | "edges" | "rotation" | "outer" | "sink") {
            return Err(CliError::Parse(format!("unknown graph JSON field {key:?}")));
        }
    }

    let n = as_index(
        object
            .get("n")
            .ok_or_else(|| CliError::Parse("graph JSON lacks \"n\"".into()))?,
        "\"n\"",
    )?;
    let edges_value = object
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("graph JSON lacks an \"edges\" array".into()))?;
    let mut edges = Vec::with_capacity(edges_value.len());
    for (i, pair) in edges_value.iter().enumerate() {
        let pair = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| CliError::Parse(format!("edge {i} must be a pair [u, v]")))?;
        edges.push((
            as_index(&pair[0], &format!("edge {i} endpoint"))?,
            as_index(&pair[1], &format!("edge {i} endpoint"))?,
        ));
    }
    let graph = MultiGraph::new(n, edges)?;

    let rotation = match object.get("rotation") {
        None => None,
        Some(value) => {
            let per_vertex = value
                .as_array()
                .ok_or_else(|| CliError::Parse("\"rotation\" must be an array".into()))?;
            let mut rotation = Vec::with_capacity(per_vertex.len());
            for (v, ids) in per_vertex.iter().enumerate() {
                let ids = ids
                    .as_array()
                    .ok_or_else(|| CliError::Parse(format!("rotation of vertex {v} must be an array")))?;
                rotation.push(
                    ids.iter()
                        .map(|id| as_index(id, &format!("rotation entry of vertex {v}")))
                        .collect::<Result<Vec<usize>, CliError>>()?,
                );
            }
            Some(rotation)
        }
    };

    let outer = match object.get("outer") {
        None => 0,
        Some(v) => as_index(v, "\"outer\"")?,
    };
    let sink = match object.get("sink") {
        None => 0,
        Some(v) => as_index(v, "\"sink\"")?,
    };
    if sink >= n {
        return Err(CliError::Parse(format!(
            "sink {sink} out of range for {n} vertices"
        )));
    }

    Ok(GraphInput {
        graph,
        rotation,
        outer,
        sink,
    })
}
