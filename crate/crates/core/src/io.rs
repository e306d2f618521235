//! Edge-list and label-file parsing and writing.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{NcpError, Result};
use crate::graph::Graph;

/// A graph read from an edge list, with the original node ids.
///
/// `ids[i]` is the id that compacted node `i` carried in the input. Ids are
/// assigned in increasing order of the original id.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub ids: Vec<u64>,
}

fn parse_id(tok: &str, line: usize) -> Result<u64> {
    tok.parse::<u64>().map_err(|_| NcpError::Parse {
        line,
        message: format!("expected a non-negative integer node id, found {tok:?}"),
    })
}

/// Reads a whitespace-separated edge list. Lines starting with `#` and blank
/// lines are skipped. Self-loops and duplicate edges are dropped.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut raw: Vec<(u64, u64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let (a, b) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(NcpError::Parse {
                    line: lineno,
                    message: "expected exactly two node ids".into(),
                })
            }
        };
        raw.push((parse_id(a, lineno)?, parse_id(b, lineno)?));
    }
    if raw.is_empty() {
        return Err(NcpError::EmptyGraph);
    }

    let mut ids: Vec<u64> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
    ids.sort_unstable();
    ids.dedup();
    let index: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let graph = Graph::from_edges(ids.len(), raw.iter().map(|(a, b)| (index[a], index[b])));
    Ok(LoadedGraph { graph, ids })
}

/// Writes one `u v` line per edge. `ids` maps node indices to printed ids;
/// `None` prints the indices themselves.
pub fn write_edge_list<W: Write>(g: &Graph, ids: Option<&[u64]>, mut out: W) -> Result<()> {
    for (u, v) in g.edges() {
        match ids {
            Some(ids) => writeln!(out, "{}\t{}", ids[u], ids[v])?,
            None => writeln!(out, "{u}\t{v}")?,
        }
    }
    Ok(())
}

/// Reads `node_id group_id` lines. Group ids are opaque strings and a node
/// may appear in several groups.
pub fn load_labels<R: BufRead>(reader: R) -> Result<Vec<(u64, String)>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match (toks.next(), toks.next(), toks.next()) {
            (Some(node), Some(group), None) => {
                out.push((parse_id(node, lineno)?, group.to_string()));
            }
            _ => {
                return Err(NcpError::Parse {
                    line: lineno,
                    message: "expected `node_id group_id`".into(),
                })
            }
        }
    }
    Ok(out)
}
