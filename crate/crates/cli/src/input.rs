//! Loading graphs and catalogs from the command line's point of view.

use std::path::Path;
use std::str::FromStr;

use cliquepoly::catalog::{
    canonical_form, enumerate_nonisomorphic, parse_edge_list, parse_graph6, read_graph6_catalog, write_graph6,
    CatalogRecord, Source, CANONICAL_MAX_N,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Graph6,
    EdgeList,
}

impl FromStr for InputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "graph6" | "g6" => Ok(InputFormat::Graph6),
            "edgelist" | "edge-list" => Ok(InputFormat::EdgeList),
            other => Err(CliError::Usage(format!("unsupported format '{other}' (expected graph6 or edgelist)"))),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

/// Records from a file: every line of a graph6 catalog, or the single graph
/// of an edge list.
pub fn load_file(path: &Path, format: InputFormat) -> Result<Vec<CatalogRecord>, CliError> {
    let text = read_text(path)?;
    let label = path.display().to_string();
    match format {
        InputFormat::Graph6 => read_graph6_catalog(&text, &label).map_err(|source| CliError::Parse { context: label, source }),
        InputFormat::EdgeList => {
            let graph = parse_edge_list(&text).map_err(|source| CliError::Parse { context: label.clone(), source })?;
            // graphs beyond the short graph6 form keep an empty label
            let graph6 = write_graph6(&graph).unwrap_or_default();
            Ok(vec![CatalogRecord { graph, graph6, source: Source::File { path: label, line: 1 } }])
        }
    }
}

pub fn inline_graph6(text: &str) -> Result<CatalogRecord, CliError> {
    let graph = parse_graph6(text).map_err(|source| CliError::Parse { context: format!("inline graph6 '{text}'"), source })?;
    Ok(CatalogRecord { graph, graph6: text.trim_end().to_string(), source: Source::Generated })
}

pub fn generate(n: usize) -> Result<Vec<CatalogRecord>, CliError> {
    Ok(enumerate_nonisomorphic(n)
        .map_err(|source| CliError::Parse { context: "--generate".into(), source })?
        .collect())
}

/// Sort key that makes reports independent of input order: the canonical
/// string where available, otherwise the record's own graph6 text.
pub fn order_key(record: &CatalogRecord) -> String {
    if record.graph.n() <= CANONICAL_MAX_N {
        canonical_form(&record.graph).unwrap_or_else(|_| record.graph6.clone())
    } else {
        record.graph6.clone()
    }
}

/// Sorts records by [`order_key`], keeping file order among ties.
pub fn canonical_order(records: Vec<CatalogRecord>) -> Vec<CatalogRecord> {
    let mut keyed: Vec<(String, CatalogRecord)> = records.into_iter().map(|r| (order_key(&r), r)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, r)| r).collect()
}
