//! Edge-list files and canonical solution lines.
//!
//! An edge list has one edge per line as two whitespace-separated labels.
//! Blank lines and lines starting with `#` are skipped.

use std::io::{BufRead, Write};

use crate::error::ParseError;
use crate::generate::GenSpec;
use crate::graph::{EdgeId, Graph};

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph, ParseError> {
    let mut pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => pairs.push((a.to_owned(), b.to_owned())),
            _ => return Err(ParseError::Syntax { line: i + 1, msg: format!("expected two labels, got `{trimmed}`") }),
        }
    }
    Ok(Graph::from_pairs(pairs)?)
}

pub fn parse_edge_list_str(text: &str) -> Result<Graph, ParseError> {
    parse_edge_list(text.as_bytes())
}

/// Writes one `u v` line per edge in id order, LF-terminated.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    for (_, [a, b]) in g.edges() {
        writeln!(out, "{} {}", g.label(a), g.label(b))?;
    }
    Ok(())
}

/// Renders a matching as `u-v` tokens, each pair ordered and the tokens sorted
/// lexicographically, joined by single spaces. The empty matching is `{}`.
pub fn render_solution(g: &Graph, matching: &[EdgeId]) -> String {
    if matching.is_empty() {
        return "{}".to_owned();
    }
    let mut tokens: Vec<String> = matching
        .iter()
        .map(|&e| {
            let [a, b] = g.endpoints(e);
            let (a, b) = (g.label(a), g.label(b));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            format!("{lo}-{hi}")
        })
        .collect();
    tokens.sort();
    tokens.join(" ")
}

/// Parses a benchmark spec file: one `family n [m] seed` per line, with blank
/// and `#` lines skipped.
pub fn parse_spec_file<R: BufRead>(reader: R) -> Result<Vec<GenSpec>, ParseError> {
    let mut specs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let spec = trimmed.parse().map_err(|msg| ParseError::Syntax { line: i + 1, msg })?;
        specs.push(spec);
    }
    Ok(specs)
}
