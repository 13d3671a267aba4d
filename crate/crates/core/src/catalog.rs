//! graph6 and edge-list input/output, brute-force canonical forms, and
//! exhaustive enumeration of small graphs up to isomorphism.
//!
//! The canonical form of a graph is the graph6 string of the relabelling
//! whose upper-triangle bit string, read in graph6 column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, is lexicographically smallest.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest vertex count of the short graph6 form.
pub const GRAPH6_MAX_N: usize = 62;
/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_MAX_N: usize = 10;
/// Largest vertex count of the built-in generator.
pub const GENERATE_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("graph6 byte {position}: {message}")]
    Graph6 { position: usize, message: String },
    #[error("graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("canonical form is limited to {CANONICAL_MAX_N} vertices, got {0}")]
    CanonicalTooLarge(usize),
    #[error("built-in generation supports 0..={GENERATE_MAX_N} vertices, got {0}")]
    GenerateRange(usize),
    #[error("catalog graphs must share one vertex count, found {0} and {1}")]
    MixedOrders(usize, usize),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

fn g6_error(position: usize, message: impl Into<String>) -> CatalogError {
    CatalogError::Graph6 { position, message: message.into() }
}

/// Where a catalog record came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Generated,
    File { path: String, line: usize },
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Generated => f.write_str("generated"),
            Source::File { path, line } => write!(f, "{path}:{line}"),
        }
    }
}

impl Serialize for Source {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRecord {
    pub graph: Graph,
    pub graph6: String,
    pub source: Source,
}

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes one short-form graph6 line. A trailing line break is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, CatalogError> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_error(i, format!("byte {b} outside 63..=126")));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(g6_error(0, "empty input"));
    };
    if first == 126 {
        return Err(g6_error(0, "long form (n > 62) is not supported"));
    }
    let n = usize::from(first - 63);
    let bits = bit_count(n);
    let needed = bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < needed {
        return Err(g6_error(bytes.len(), format!("truncated: expected {needed} data bytes, found {}", body.len())));
    }
    if body.len() > needed {
        return Err(g6_error(1 + needed, "trailing bytes after the adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let used = bits - 6 * (needed - 1);
        if (last - 63) & ((1u8 << (6 - used)) - 1) != 0 {
            return Err(g6_error(bytes.len() - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges).map_err(|e: GraphError| g6_error(0, e.to_string()))
}

/// Packs a column-ordered bit sequence into graph6 text.
fn pack_graph6(n: usize, bits: impl Iterator<Item = bool>) -> String {
    let mut out = String::with_capacity(1 + bit_count(n).div_ceil(6));
    out.push(char::from(63 + n as u8));
    let mut acc = 0u8;
    let mut filled = 0;
    for bit in bits {
        acc = acc << 1 | u8::from(bit);
        filled += 1;
        if filled == 6 {
            out.push(char::from(63 + acc));
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(char::from(63 + (acc << (6 - filled))));
    }
    out
}

pub fn write_graph6(g: &Graph) -> Result<String, CatalogError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(CatalogError::TooManyVertices(n));
    }
    let bits = (1..n).flat_map(|v| (0..v).map(move |u| g.has_edge(u, v)));
    Ok(pack_graph6(n, bits))
}

/// Adjacency rows as bit masks, for graphs small enough to canonicalise.
fn rows(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

/// Column `j` of the relabelled upper triangle, with row 0 as the most
/// significant bit.
fn column(rows: &[u32], perm: &[usize], j: usize, w: usize) -> u32 {
    let mut col = 0;
    for &p in &perm[..j] {
        col = col << 1 | (rows[p] >> w & 1);
    }
    col
}

fn search_min(rows: &[u32], perm: &mut Vec<usize>, used: u32, best: &mut [u32]) {
    let j = perm.len();
    if j == rows.len() {
        return;
    }
    for w in 0..rows.len() {
        if used >> w & 1 == 1 {
            continue;
        }
        let col = column(rows, perm, j, w);
        if col > best[j] {
            continue;
        }
        if col < best[j] {
            best[j] = col;
            best[j + 1..].fill(u32::MAX);
        }
        perm.push(w);
        search_min(rows, perm, used | 1 << w, best);
        perm.pop();
    }
}

fn columns_to_graph6(n: usize, cols: &[u32]) -> String {
    let bits = (1..n).flat_map(|j| (0..j).map(move |i| cols[j] >> (j - 1 - i) & 1 == 1));
    pack_graph6(n, bits)
}

/// graph6 text of the lexicographically smallest relabelling.
pub fn canonical_form(g: &Graph) -> Result<String, CatalogError> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(CatalogError::CanonicalTooLarge(n));
    }
    let rows = rows(g);
    let mut best = vec![u32::MAX; n];
    search_min(&rows, &mut Vec::with_capacity(n), 0, &mut best);
    Ok(columns_to_graph6(n, &best))
}

/// True when no relabelling yields a smaller bit string than the current
/// labelling, i.e. `write_graph6(g) == canonical_form(g)`.
pub fn is_canonical(g: &Graph) -> Result<bool, CatalogError> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(CatalogError::CanonicalTooLarge(n));
    }
    let rows = rows(g);
    let identity: Vec<usize> = (0..n).collect();
    let target: Vec<u32> = (0..n).map(|j| column(&rows, &identity, j, j)).collect();
    fn smaller_exists(rows: &[u32], target: &[u32], perm: &mut Vec<usize>, used: u32) -> bool {
        let j = perm.len();
        if j == rows.len() {
            return false;
        }
        for w in 0..rows.len() {
            if used >> w & 1 == 1 {
                continue;
            }
            let col = column(rows, perm, j, w);
            if col < target[j] {
                return true;
            }
            if col == target[j] {
                perm.push(w);
                let found = smaller_exists(rows, target, perm, used | 1 << w);
                perm.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    Ok(!smaller_exists(&rows, &target, &mut Vec::with_capacity(n), 0))
}

/// One representative per isomorphism class on `n` vertices, in increasing
/// canonical-string order.
///
/// Every labelled graph is visited in lexicographic order of its bit string
/// and kept exactly when it is its own canonical form, so each class is
/// emitted once without storing a seen-set.
pub fn enumerate_nonisomorphic(n: usize) -> Result<impl Iterator<Item = CatalogRecord>, CatalogError> {
    if n > GENERATE_MAX_N {
        return Err(CatalogError::GenerateRange(n));
    }
    let bits = bit_count(n);
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok((0u64..1 << bits).filter_map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> (bits - 1 - k) & 1 == 1)
            .map(|(_, &e)| e);
        let graph = Graph::new(n, edges).expect("valid pairs");
        if !is_canonical(&graph).expect("n within range") {
            return None;
        }
        let graph6 = write_graph6(&graph).expect("n within range");
        Some(CatalogRecord { graph, graph6, source: Source::Generated })
    }))
}

/// Catalog on `n + 1` vertices from a complete catalog on `n` vertices:
/// every graph is extended by a new vertex in every possible way, and the
/// results are deduplicated by canonical form.
pub fn extend_catalog(graphs: &[Graph]) -> Result<Vec<CatalogRecord>, CatalogError> {
    let Some(first) = graphs.first() else {
        return Ok(Vec::new());
    };
    let n = first.n();
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(CatalogError::MixedOrders(n, g.n()));
    }
    if n + 1 > CANONICAL_MAX_N {
        return Err(CatalogError::CanonicalTooLarge(n + 1));
    }
    let mut seen = BTreeSet::new();
    for g in graphs {
        for subset in 0u32..1 << n {
            let nbrs: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
            let h = g.add_vertex(&nbrs).expect("valid extension");
            seen.insert(canonical_form(&h)?);
        }
    }
    Ok(seen
        .into_iter()
        .map(|graph6| CatalogRecord {
            graph: parse_graph6(&graph6).expect("own output parses"),
            graph6,
            source: Source::Generated,
        })
        .collect())
}

/// Newline-delimited graph6; blank lines are skipped. `path` only labels
/// the records and error messages.
pub fn read_graph6_catalog(text: &str, path: &str) -> Result<Vec<CatalogRecord>, CatalogError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.strip_prefix(">>graph6<<").unwrap_or(raw).trim_end();
        if line.is_empty() {
            continue;
        }
        let graph = parse_graph6(line).map_err(|e| CatalogError::Line { line: i + 1, message: e.to_string() })?;
        out.push(CatalogRecord {
            graph,
            graph6: line.to_string(),
            source: Source::File { path: path.to_string(), line: i + 1 },
        });
    }
    Ok(out)
}

/// Edge-list text: one `u v` pair per line (0-indexed), `#` comments, blank
/// lines ignored, optional header `n <count>`. Without a header the vertex
/// count is the largest index plus one.
pub fn parse_edge_list(text: &str) -> Result<Graph, CatalogError> {
    let mut n = None;
    let mut edges = Vec::new();
    let line_err = |line: usize, message: String| CatalogError::Line { line, message };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["n", count] => {
                if n.is_some() || !edges.is_empty() {
                    return Err(line_err(i + 1, "header must come first".into()));
                }
                n = Some(count.parse::<usize>().map_err(|e| line_err(i + 1, format!("bad vertex count: {e}")))?);
            }
            [u, v] => {
                let parse = |s: &str| s.parse::<usize>().map_err(|e| line_err(i + 1, format!("bad vertex '{s}': {e}")));
                edges.push((parse(u)?, parse(v)?, i + 1));
            }
            _ => return Err(line_err(i + 1, format!("expected 'u v', got '{line}'"))),
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    for &(u, v, line) in &edges {
        if u >= n || v >= n {
            return Err(line_err(line, GraphError::OutOfRange(u, v, n).to_string()));
        }
        if u == v {
            return Err(line_err(line, GraphError::SelfLoop(u).to_string()));
        }
    }
    Ok(Graph::new(n, edges.into_iter().map(|(u, v, _)| (u, v))).expect("validated"))
}
