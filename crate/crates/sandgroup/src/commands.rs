//! The six commands: shared plumbing plus one function per command, each
//! returning a ready-to-print report with its exit status.

use std::fmt::Display;
use std::path::Path;

use duality_transfer::transfer_config;
use graph_core::{build_g_tc, Tree};
use int_linalg::{determinant, GroupStructure};
use num_bigint::BigInt;
use outerplanar_groups::{
    flower_deltas, flower_group, flower_tau, group_of_outerplane, polygon_matrix,
    PolygonChainSpec, PolygonFlowerSpec, tau_polygon_chain,
};
use sandpile::SandpileModel;
use serde_json::{json, Value};

use crate::catalog;
use crate::error::{CliError, EXIT_TABLE_MISMATCH};
use crate::input::{parse_config, parse_lengths, read_graph, read_tree_file};

/// A finished command: the text rendering, the JSON rendering, and the exit
/// status (0 except for reference tables that failed to reproduce).
pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            exit: 0,
        }
    }
}

/// Which reference table to recompute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableId {
    /// Spanning-tree counts of uniform polygon chains.
    #[value(name = "ladders")]
    Ladders,
    /// Identities of cone graphs joined to each tree leaf.
    #[value(name = "identities-A")]
    IdentitiesA,
    /// Identities of cone graphs joined to every tree vertex.
    #[value(name = "identities-B")]
    IdentitiesB,
}

fn joined<T: Display>(values: &[T], separator: &str) -> String {
    let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    rendered.join(separator)
}

fn bracketed<T: Display>(values: &[T]) -> String {
    format!("[{}]", joined(values, ", "))
}

fn tupled<T: Display>(values: &[T]) -> String {
    format!("({})", joined(values, ", "))
}

fn json_strings<T: Display>(values: &[T]) -> Value {
    Value::from(
        values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect::<Vec<Value>>(),
    )
}

fn group_report(command: &str, group: &GroupStructure) -> Report {
    Report::ok(
        format!("{group} (order {})", group.order()),
        json!({
            "schema": 1,
            "command": command,
            "group": group.to_string(),
            "invariant_factors": json_strings(group.invariant_factors()),
            "order": group.order().to_string(),
        }),
    )
}

/// One input source for the structure-describing commands.
enum Source<'a> {
    Tree(&'a Path, &'a str),
    Graph(&'a str),
    Chain(&'a str),
    Flower(&'a str),
}

fn pick_source<'a>(
    tree: Option<&'a Path>,
    lengths: Option<&'a str>,
    graph: Option<&'a str>,
    chain: Option<&'a str>,
    flower: Option<&'a str>,
    allowed: &str,
) -> Result<Source<'a>, CliError> {
    let given = [
        tree.is_some(),
        graph.is_some(),
        chain.is_some(),
        flower.is_some(),
    ]
    .iter()
    .filter(|&&x| x)
    .count();
    if given != 1 {
        return Err(CliError::Parse(format!("give exactly one of {allowed}")));
    }
    if let Some(path) = tree {
        let lengths =
            lengths.ok_or_else(|| CliError::Parse("--tree requires --lengths".into()))?;
        return Ok(Source::Tree(path, lengths));
    }
    if lengths.is_some() {
        return Err(CliError::Parse("--lengths only applies with --tree".into()));
    }
    if let Some(text) = graph {
        return Ok(Source::Graph(text));
    }
    if let Some(spec) = chain {
        return Ok(Source::Chain(spec));
    }
    Ok(Source::Flower(flower.expect("one source was given")))
}

fn tree_with_lengths(path: &Path, lengths: &str) -> Result<(Tree, Vec<usize>), CliError> {
    let tree = read_tree_file(path)?;
    let lengths = parse_lengths(lengths)?;
    Ok((tree, lengths))
}

/// Checks that each vertex's polygon length is at least 2 and at least its
/// degree, so the pair denotes an outerplane gluing.
fn check_outerplane_lengths(tree: &Tree, lengths: &[usize]) -> Result<(), CliError> {
    if lengths.len() != tree.vertex_count() {
        return Err(CliError::Infeasible(format!(
            "{} lengths for {} polygons",
            lengths.len(),
            tree.vertex_count()
        )));
    }
    for v in 0..tree.vertex_count() {
        if lengths[v] < 2 || lengths[v] < tree.degree(v) {
            return Err(CliError::Infeasible(format!(
                "polygon {v} of length {} cannot meet {} neighbors",
                lengths[v],
                tree.degree(v)
            )));
        }
    }
    Ok(())
}

/// `group`: the sandpile group of the described structure.
pub fn group_command(
    tree: Option<&Path>,
    lengths: Option<&str>,
    graph: Option<&str>,
    chain: Option<&str>,
    flower: Option<&str>,
) -> Result<Report, CliError> {
    let group = match pick_source(
        tree,
        lengths,
        graph,
        chain,
        flower,
        "--tree, --graph, --chain, --flower",
    )? {
        Source::Tree(path, lengths) => {
            let (tree, lengths) = tree_with_lengths(path, lengths)?;
            group_of_outerplane(&tree, &lengths)?
        }
        Source::Graph(text) => {
            let input = read_graph(text)?;
            SandpileModel::new(input.graph, input.sink)?.group()
        }
        Source::Chain(spec) => {
            let spec = PolygonChainSpec::parse(spec)?;
            GroupStructure::from_invariant_factors([tau_polygon_chain(&spec)])
        }
        Source::Flower(spec) => flower_group(&PolygonFlowerSpec::parse(spec)?),
    };
    Ok(group_report("group", &group))
}

/// `tau`: the spanning-tree count of the described structure.
pub fn tau_command(
    tree: Option<&Path>,
    lengths: Option<&str>,
    graph: Option<&str>,
    chain: Option<&str>,
    flower: Option<&str>,
) -> Result<Report, CliError> {
    let tau = match pick_source(
        tree,
        lengths,
        graph,
        chain,
        flower,
        "--tree, --graph, --chain, --flower",
    )? {
        Source::Tree(path, lengths) => {
            let (tree, lengths) = tree_with_lengths(path, lengths)?;
            check_outerplane_lengths(&tree, &lengths)?;
            determinant(&polygon_matrix(&tree, &lengths))
        }
        Source::Graph(text) => read_graph(text)?.graph.spanning_tree_count(),
        Source::Chain(spec) => tau_polygon_chain(&PolygonChainSpec::parse(spec)?),
        Source::Flower(spec) => flower_tau(&PolygonFlowerSpec::parse(spec)?),
    };
    Ok(Report::ok(
        tau.to_string(),
        json!({ "schema": 1, "command": "tau", "tau": tau.to_string() }),
    ))
}

fn identity_report(model: &SandpileModel) -> Result<Report, CliError> {
    let identity = model.identity()?;
    let order = model.group_order();
    Ok(Report::ok(
        format!(
            "identity: {identity}\nsink: {}\norder: {order}",
            model.sink()
        ),
        json!({
            "schema": 1,
            "command": "identity",
            "identity": json_strings(identity.values()),
            "sink": model.sink(),
            "order": order.to_string(),
        }),
    ))
}

/// `identity`: the neutral recurrent configuration of a sandpile model.
///
/// With `--tree` and `--lengths`, the model is the cone over the tree that
/// raises each vertex to its target degree, sunk at the apex; with
/// `--graph`, the model is the given graph sunk at its `sink` field.
pub fn identity_command(
    tree: Option<&Path>,
    lengths: Option<&str>,
    graph: Option<&str>,
) -> Result<Report, CliError> {
    match pick_source(tree, lengths, graph, None, None, "--tree, --graph")? {
        Source::Tree(path, lengths) => {
            let (tree, lengths) = tree_with_lengths(path, lengths)?;
            let (graph, apex) = build_g_tc(&tree, &lengths)?;
            identity_report(&SandpileModel::new(graph, apex)?)
        }
        Source::Graph(text) => {
            let input = read_graph(text)?;
            identity_report(&SandpileModel::new(input.graph, input.sink)?)
        }
        _ => unreachable!("sources restricted to tree and graph"),
    }
}

/// `flower`: the full analysis of a polygon flower.
pub fn flower_command(spec: &str) -> Result<Report, CliError> {
    let spec = PolygonFlowerSpec::parse(spec)?;
    let chain_taus = spec.chain_taus();
    let contraction_taus = spec.contraction_taus();
    let chain_product: BigInt = chain_taus.iter().product();
    let tau = flower_tau(&spec);
    let deltas = flower_deltas(&spec);
    let group = flower_group(&spec);
    let text = format!(
        "central polygon: {}\nchain taus: {}\ncontraction taus: {}\nchain product: {}\ntau: {}\ndeltas: {}\ngroup: {} (order {})",
        spec.central_length(),
        bracketed(&chain_taus),
        bracketed(&contraction_taus),
        chain_product,
        tau,
        bracketed(&deltas),
        group,
        group.order(),
    );
    let json = json!({
        "schema": 1,
        "command": "flower",
        "central": spec.central_length(),
        "chain_taus": json_strings(&chain_taus),
        "contraction_taus": json_strings(&contraction_taus),
        "chain_product": chain_product.to_string(),
        "tau": tau.to_string(),
        "deltas": json_strings(&deltas),
        "invariant_factors": json_strings(group.invariant_factors()),
        "group": group.to_string(),
        "order": group.order().to_string(),
    });
    Ok(Report::ok(text, json))
}

/// `transfer`: carries a configuration from a drawn graph to its dual,
/// reporting the flow, the raw transferred vector, and its recurrent
/// representative on the dual model sunk at the outer face.
pub fn transfer_command(graph: &str, config: &str) -> Result<Report, CliError> {
    let input = read_graph(graph)?;
    let pg = input.plane_graph()?;
    let model = SandpileModel::new(input.graph.clone(), input.sink)?;
    let values = parse_config(config)?;
    if values.len() != model.site_count() {
        return Err(CliError::Infeasible(format!(
            "configuration has {} entries for {} non-sink vertices",
            values.len(),
            model.site_count()
        )));
    }
    let config = model.config(values);
    let transfer = transfer_config(&pg, input.sink, &config)?;
    let text = format!(
        "flow: {}\nclass vector: {}\nrepresentative: {}\ncertificate: {}\ndual sink: {}",
        bracketed(&transfer.flow),
        transfer.class_vector,
        transfer.representative.config,
        tupled(&transfer.representative.certificate),
        pg.outer_face(),
    );
    let json = json!({
        "schema": 1,
        "command": "transfer",
        "flow": json_strings(&transfer.flow),
        "class_vector": json_strings(transfer.class_vector.values()),
        "representative": json_strings(transfer.representative.config.values()),
        "certificate": json_strings(&transfer.representative.certificate),
        "dual_sink": pg.outer_face(),
    });
    Ok(Report::ok(text, json))
}

struct Mismatch {
    row: String,
    column: String,
    expected: String,
    computed: String,
}

fn table_report(
    id: &str,
    row_lines: Vec<String>,
    rows_json: Vec<Value>,
    mismatches: Vec<Mismatch>,
    cells: usize,
) -> Report {
    let mut lines = vec![id.to_string()];
    lines.extend(row_lines);
    for m in &mismatches {
        lines.push(format!(
            "mismatch: row {}, column {}, expected {}, computed {}",
            m.row, m.column, m.expected, m.computed
        ));
    }
    if mismatches.is_empty() {
        lines.push(format!("all {cells} cells match"));
    } else {
        lines.push(format!("{} of {cells} cells mismatch", mismatches.len()));
    }
    let json = json!({
        "schema": 1,
        "command": "table",
        "id": id,
        "rows": rows_json,
        "mismatches": mismatches
            .iter()
            .map(|m| json!({
                "row": m.row,
                "column": m.column,
                "expected": m.expected,
                "computed": m.computed,
            }))
            .collect::<Vec<Value>>(),
        "cells": cells,
        "matching": cells - mismatches.len(),
    });
    Report {
        text: lines.join("\n"),
        json,
        exit: if mismatches.is_empty() {
            0
        } else {
            EXIT_TABLE_MISMATCH
        },
    }
}

fn ladders_table() -> Result<Report, CliError> {
    let columns = catalog::LADDER_COLUMNS;
    let count = columns[0].1.len();
    let mut computed = vec![Vec::with_capacity(count); columns.len()];
    let mut mismatches = Vec::new();
    for (c, (sides, expected)) in columns.iter().enumerate() {
        for n in 1..=count {
            let spec = PolygonChainSpec::new(vec![*sides; n])?;
            let tau = tau_polygon_chain(&spec);
            if tau != BigInt::from(expected[n - 1]) {
                mismatches.push(Mismatch {
                    row: format!("n={n}"),
                    column: format!("k={sides}"),
                    expected: expected[n - 1].to_string(),
                    computed: tau.to_string(),
                });
            }
            computed[c].push(tau);
        }
    }
    let mut row_lines = Vec::with_capacity(count);
    let mut rows_json = Vec::with_capacity(count);
    for n in 1..=count {
        let values: Vec<&BigInt> = computed.iter().map(|column| &column[n - 1]).collect();
        row_lines.push(format!("n={n}: {}", joined(&values, " ")));
        rows_json.push(json!({
            "polygons": n,
            "computed": json_strings(&values),
            "expected": columns
                .iter()
                .map(|(_, exp)| Value::String(exp[n - 1].to_string()))
                .collect::<Vec<Value>>(),
        }));
    }
    Ok(table_report(
        "ladders",
        row_lines,
        rows_json,
        mismatches,
        columns.len() * count,
    ))
}

fn cone_identity(tree: &Tree, degrees: &[usize]) -> Result<Vec<BigInt>, CliError> {
    let (graph, apex) = build_g_tc(tree, degrees)?;
    let model = SandpileModel::new(graph, apex)?;
    Ok(model.identity()?.values().to_vec())
}

fn identities_table(id: &str, rows: &[catalog::IdentityRow]) -> Result<Report, CliError> {
    let mut mismatches = Vec::new();
    let mut row_lines = Vec::with_capacity(rows.len());
    let mut rows_json = Vec::with_capacity(rows.len());
    for row in rows {
        let entry = catalog::tree_by_key(row.key).expect("identity rows use cataloged keys");
        let tree = Tree::from_edges(entry.vertex_count, entry.edges)?;
        let mut cell_texts = Vec::with_capacity(2);
        let mut cells_json = Vec::with_capacity(2);
        for (column, (degrees, expected)) in [
            (row.first_degrees, row.first_identity),
            (row.second_degrees, row.second_identity),
        ]
        .into_iter()
        .enumerate()
        {
            let computed = cone_identity(&tree, degrees)?;
            let expected_big: Vec<BigInt> = expected.iter().map(|&v| BigInt::from(v)).collect();
            if computed != expected_big {
                mismatches.push(Mismatch {
                    row: row.key.to_string(),
                    column: (column + 1).to_string(),
                    expected: bracketed(expected),
                    computed: bracketed(&computed),
                });
            }
            cell_texts.push(format!("{} -> {}", bracketed(degrees), bracketed(&computed)));
            cells_json.push(json!({
                "degrees": degrees,
                "expected": json_strings(expected),
                "computed": json_strings(&computed),
            }));
        }
        row_lines.push(format!("{}: {}", row.key, cell_texts.join(" | ")));
        rows_json.push(json!({ "key": row.key, "cells": cells_json }));
    }
    let cells = rows.len() * 2;
    Ok(table_report(id, row_lines, rows_json, mismatches, cells))
}

/// `table`: recomputes a built-in reference table from first principles and
/// reports any cell that fails to reproduce.
pub fn table_command(id: TableId) -> Result<Report, CliError> {
    match id {
        TableId::Ladders => ladders_table(),
        TableId::IdentitiesA => identities_table("identities-A", catalog::LEAF_JOINED_ROWS),
        TableId::IdentitiesB => identities_table("identities-B", catalog::FULLY_JOINED_ROWS),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_report_flags_mismatching_cells() {
        let clean = table_report("demo", vec!["row".into()], Vec::new(), Vec::new(), 4);
        assert_eq!(clean.exit, 0);
        assert_eq!(clean.text, "demo\nrow\nall 4 cells match");

        let broken = table_report(
            "demo",
            vec!["row".into()],
            Vec::new(),
            vec![Mismatch {
                row: "3_1".into(),
                column: "2".into(),
                expected: "[1, 1]".into(),
                computed: "[1, 2]".into(),
            }],
            4,
        );
        assert_eq!(broken.exit, EXIT_TABLE_MISMATCH);
        assert_eq!(
            broken.text,
            "demo\nrow\nmismatch: row 3_1, column 2, expected [1, 1], computed [1, 2]\n1 of 4 cells mismatch"
        );
        assert_eq!(broken.json["matching"], serde_json::json!(3));
    }
}
