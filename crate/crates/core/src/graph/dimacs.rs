//! DIMACS `.col` reading and writing. Vertices are 1-indexed in the file and
//! 0-indexed in memory.

use std::fmt::Write as _;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a DIMACS edge-format graph. Duplicate `e` lines collapse to one edge.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("c") => continue,
            Some("p") => {
                if builder.is_some() {
                    return Err(parse_error(lineno, "duplicate problem line"));
                }
                let format = fields.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(parse_error(lineno, format!("malformed header {line:?}")));
                }
                let n = fields.next().and_then(|s| s.parse::<usize>().ok());
                let m = fields.next().and_then(|s| s.parse::<usize>().ok());
                match (n, m, fields.next()) {
                    (Some(n), Some(_), None) => builder = Some(GraphBuilder::new(n)),
                    _ => return Err(parse_error(lineno, format!("malformed header {line:?}"))),
                }
            }
            Some("e") => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| parse_error(lineno, "edge line before problem line"))?;
                let u = fields.next().and_then(|s| s.parse::<usize>().ok());
                let v = fields.next().and_then(|s| s.parse::<usize>().ok());
                let (u, v) = match (u, v, fields.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(parse_error(lineno, format!("malformed edge line {line:?}"))),
                };
                let n = b.n();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_error(
                        lineno,
                        format!("vertex index out of range 1..={n} in {line:?}"),
                    ));
                }
                if u == v {
                    return Err(parse_error(lineno, format!("self-loop on vertex {u}")));
                }
                b.add_edge(u - 1, v - 1)?;
            }
            Some(other) => {
                return Err(parse_error(lineno, format!("unknown line type {other:?}")));
            }
            None => continue,
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or_else(|| parse_error(0, "missing problem line"))
}

/// Writes `g` in DIMACS edge format, one `c` line per comment.
pub fn write_dimacs(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
