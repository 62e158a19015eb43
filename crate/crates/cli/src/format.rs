//! The plain-text hypergraph format.
//!
//! ```text
//! # optional comments
//! 5 3
//! 0 1 2
//! 0 1 3
//! ```
//!
//! The header gives `n` and `ℓ`; each further line is one edge of `ℓ` strictly increasing
//! vertices in `0..n`. Blank lines and lines starting with `#` are ignored anywhere.

use std::collections::HashSet;
use std::fmt::Write;

use disperse_core::Hypergraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// Header and edge lines, validated but not yet indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawHypergraph {
    pub n: usize,
    pub ell: usize,
    pub edges: Vec<Vec<usize>>,
}

/// Splits a line into tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(move |(byte, tok)| (line[..byte].chars().count() + 1, tok))
}

fn number(line: usize, col: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::at(line, col, format!("expected {what}, found {tok:?}")))
}

pub fn parse_raw(text: &str) -> Result<RawHypergraph, ParseError> {
    let mut header = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<(usize, &str)> = tokens(line).collect();
        let Some((n, ell)) = header else {
            if toks.len() != 2 {
                let col = toks.get(2).map_or(line.chars().count() + 1, |t| t.0);
                return Err(ParseError::at(lineno, col, "header must be \"n ell\""));
            }
            let n = number(lineno, toks[0].0, toks[0].1, "vertex count")?;
            let ell = number(lineno, toks[1].0, toks[1].1, "uniformity")?;
            if ell < 2 {
                return Err(ParseError::at(lineno, toks[1].0, "uniformity must be at least 2"));
            }
            header = Some((n, ell));
            continue;
        };
        if toks.len() != ell {
            let col = toks.get(ell).map_or(line.chars().count() + 1, |t| t.0);
            return Err(ParseError::at(
                lineno,
                col,
                format!("edge has {} vertices, expected {ell}", toks.len()),
            ));
        }
        let mut edge = Vec::with_capacity(ell);
        for &(col, tok) in &toks {
            let v = number(lineno, col, tok, "vertex")?;
            if v >= n {
                return Err(ParseError::at(lineno, col, format!("vertex {v} out of range for n = {n}")));
            }
            if edge.last().is_some_and(|&u| u >= v) {
                return Err(ParseError::at(lineno, col, "edge vertices must be strictly increasing"));
            }
            edge.push(v);
        }
        if !seen.insert(edge.clone()) {
            return Err(ParseError::at(lineno, toks[0].0, "duplicate edge"));
        }
        edges.push(edge);
    }
    let (n, ell) = header.ok_or_else(|| ParseError::at(last_line + 1, 1, "missing header"))?;
    Ok(RawHypergraph { n, ell, edges })
}

/// Header line, then edges in colex order.
pub fn serialize(g: &Hypergraph) -> String {
    serialize_with_comment(g, None)
}

pub fn serialize_with_comment(g: &Hypergraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            writeln!(out, "# {line}").unwrap();
        }
    }
    writeln!(out, "{} {}", g.n(), g.ell()).unwrap();
    for e in g.edges() {
        let mut first = true;
        for v in e {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}
