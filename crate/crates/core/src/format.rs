//! Line-oriented text formats for graphs and colorings.
//!
//! Graph:
//!
//! ```text
//! HALIN 1
//! VERTICES <N>
//! TREE <u> <v>          (N-1 lines)
//! CYCLE <a_1> ... <a_n>
//! ```
//!
//! Coloring:
//!
//! ```text
//! COLORING 1
//! <vertex_id> <color>   (ascending ids)
//! ```
//!
//! `#` starts a comment running to the end of the line; blank lines are
//! ignored. Everything else is strict.

use std::collections::HashSet;
use std::fmt::{Display, Write as _};

use thiserror::Error;

use crate::graph::{GraphError, HalinGraph, VertexId};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input: {0}")]
    Truncated(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, FormatError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<HalinGraph, FormatError> {
    let mut lines = content_lines(text);

    let (ln, toks) = lines
        .next()
        .ok_or(FormatError::Truncated("missing HALIN header"))?;
    if toks != ["HALIN", "1"] {
        return Err(syntax(ln, "expected header `HALIN 1`"));
    }

    let (ln, toks) = lines
        .next()
        .ok_or(FormatError::Truncated("missing VERTICES line"))?;
    let n_total: usize = match toks.as_slice() {
        ["VERTICES", n] => parse_num(n, ln, "vertex count")?,
        ["VERTICES", ..] => return Err(syntax(ln, "VERTICES takes exactly one value")),
        _ => return Err(syntax(ln, "expected `VERTICES <N>`")),
    };
    if n_total == 0 {
        return Err(syntax(ln, "vertex count must be positive"));
    }

    let mut edges = Vec::with_capacity(n_total - 1);
    let mut seen = HashSet::with_capacity(n_total - 1);
    let mut cycle = None;
    for (ln, toks) in lines.by_ref() {
        match toks.as_slice() {
            ["TREE", u, v] => {
                if cycle.is_some() {
                    return Err(syntax(ln, "TREE after CYCLE"));
                }
                let u: u32 = parse_num(u, ln, "vertex id")?;
                let v: u32 = parse_num(v, ln, "vertex id")?;
                if u as usize >= n_total || v as usize >= n_total {
                    return Err(syntax(ln, format!("vertex id out of range 0..{n_total}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(syntax(ln, format!("duplicate edge {u} {v}")));
                }
                edges.push((VertexId(u), VertexId(v)));
            }
            ["TREE", ..] => return Err(syntax(ln, "TREE takes exactly two ids")),
            ["CYCLE", rest @ ..] => {
                if cycle.is_some() {
                    return Err(syntax(ln, "second CYCLE line"));
                }
                let ids = rest
                    .iter()
                    .map(|t| {
                        let a: u32 = parse_num(t, ln, "vertex id")?;
                        if a as usize >= n_total {
                            return Err(syntax(
                                ln,
                                format!("vertex id {a} out of range 0..{n_total}"),
                            ));
                        }
                        Ok(VertexId(a))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                cycle = Some(ids);
            }
            [kw, ..] => return Err(syntax(ln, format!("unknown keyword `{kw}`"))),
            [] => unreachable!(),
        }
    }
    let cycle = cycle.ok_or(FormatError::Truncated("missing CYCLE line"))?;
    if edges.len() != n_total - 1 {
        return Err(FormatError::Truncated("wrong number of TREE lines"));
    }
    Ok(HalinGraph::new(n_total, &edges, &cycle)?)
}

pub fn write_graph(g: &HalinGraph) -> String {
    let mut out = String::new();
    writeln!(out, "HALIN 1").unwrap();
    writeln!(out, "VERTICES {}", g.n_total()).unwrap();
    for (u, v) in g.tree_edges() {
        writeln!(out, "TREE {u} {v}").unwrap();
    }
    out.push_str("CYCLE");
    for a in g.cycle() {
        write!(out, " {a}").unwrap();
    }
    out.push('\n');
    out
}

/// A coloring read from text: labels are opaque strings.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabeledColoring {
    pub entries: Vec<(VertexId, String)>,
}

impl LabeledColoring {
    /// Dense assignment over `n_total` vertices; missing vertices are `None`.
    pub fn to_assignment(&self, n_total: usize) -> Result<Vec<Option<String>>, FormatError> {
        let mut out = vec![None; n_total];
        for (v, label) in &self.entries {
            let slot = out.get_mut(v.index()).ok_or_else(|| {
                syntax(
                    0,
                    format!("coloring names vertex {v} but the graph has {n_total} vertices"),
                )
            })?;
            *slot = Some(label.clone());
        }
        Ok(out)
    }
}

pub fn parse_coloring(text: &str) -> Result<LabeledColoring, FormatError> {
    let mut lines = content_lines(text);
    let (ln, toks) = lines
        .next()
        .ok_or(FormatError::Truncated("missing COLORING header"))?;
    if toks != ["COLORING", "1"] {
        return Err(syntax(ln, "expected header `COLORING 1`"));
    }
    let mut entries: Vec<(VertexId, String)> = Vec::new();
    for (ln, toks) in lines {
        let [id, label] = toks.as_slice() else {
            return Err(syntax(ln, "expected `<vertex_id> <color>`"));
        };
        let id = VertexId(parse_num(id, ln, "vertex id")?);
        if let Some(&(prev, _)) = entries.last() {
            if id <= prev {
                return Err(syntax(
                    ln,
                    format!("vertex ids must be strictly ascending ({prev} then {id})"),
                ));
            }
        }
        entries.push((id, (*label).to_owned()));
    }
    Ok(LabeledColoring { entries })
}

pub fn write_coloring<L: Display>(entries: impl IntoIterator<Item = (VertexId, L)>) -> String {
    let mut out = String::from("COLORING 1\n");
    for (v, label) in entries {
        writeln!(out, "{v} {label}").unwrap();
    }
    out
}
