//! Canonical JSON and plain-text formats for [`Hypergraph`].
//!
//! JSON: `{"n": 6, "edges": [[1,2],[2,3]]}` (an optional `"schema": 1` is
//! accepted). Text: a header line `hg <n> <m>` followed by `m` lines of
//! space-separated vertices. Blank lines and lines starting with `#` are
//! ignored in the text format.

use super::{Edge, Hypergraph, HypergraphError};

/// Canonical single-line JSON.
pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("hypergraph serialization is infallible")
}

pub fn to_text(h: &Hypergraph) -> String {
    h.to_string()
}

/// Parses either format, picking JSON when the first non-blank character is `{`.
pub fn parse_any(input: &str) -> Result<Hypergraph, HypergraphError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_json(input: &str) -> Result<Hypergraph, HypergraphError> {
    #[derive(serde::Deserialize)]
    struct Raw {
        #[serde(default)]
        schema: Option<u32>,
        n: usize,
        edges: Vec<Edge>,
    }
    let raw: Raw = serde_json::from_str(input).map_err(|e| HypergraphError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    if let Some(schema) = raw.schema {
        if schema != 1 {
            return Err(HypergraphError::Parse {
                line: 1,
                message: HypergraphError::Schema(schema).to_string(),
            });
        }
    }
    Hypergraph::from_strict(raw.n, raw.edges).map_err(|e| {
        let line = e
            .edge_index()
            .and_then(|k| json_edge_line(input, k))
            .unwrap_or(1);
        HypergraphError::Parse {
            line,
            message: e.to_string(),
        }
    })
}

/// Line on which the `k`-th element of the top-level `"edges"` array starts.
fn json_edge_line(input: &str, k: usize) -> Option<usize> {
    let start = input.find("\"edges\"")?;
    let mut depth = 0usize;
    let mut seen = 0usize;
    let mut line = 1 + input[..start].matches('\n').count();
    for ch in input[start..].chars() {
        match ch {
            '\n' => line += 1,
            '[' => {
                depth += 1;
                if depth == 2 {
                    if seen == k {
                        return Some(line);
                    }
                    seen += 1;
                }
            }
            ']' => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    None
}

pub fn parse_text(input: &str) -> Result<Hypergraph, HypergraphError> {
    let err = |line: usize, message: String| HypergraphError::Parse { line, message };
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `hg <n> <m>` header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "hg" {
        return Err(err(header_line, format!("expected `hg <n> <m>`, found `{header}`")));
    }
    let n: usize = fields[1]
        .parse()
        .map_err(|_| err(header_line, format!("bad vertex count `{}`", fields[1])))?;
    let m: usize = fields[2]
        .parse()
        .map_err(|_| err(header_line, format!("bad edge count `{}`", fields[2])))?;

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let edge = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| err(line_no, format!("bad vertex `{tok}`")))
            })
            .collect::<Result<Edge, _>>()?;
        if edges.len() == m {
            return Err(err(line_no, format!("more than the declared {m} edges")));
        }
        edges.push(edge);
        edge_lines.push(line_no);
    }
    if edges.len() != m {
        let last = edge_lines.last().copied().unwrap_or(header_line);
        return Err(err(last, format!("declared {m} edges, found {}", edges.len())));
    }
    Hypergraph::from_strict(n, edges).map_err(|e| {
        let line = e.edge_index().map(|k| edge_lines[k]).unwrap_or(header_line);
        err(line, e.to_string())
    })
}
