//! DIMACS edge format with `n v w` node-weight lines.
//!
//! ```text
//! c comment
//! p edge 3 2
//! e 1 2
//! e 2 3
//! n 2 5
//! ```
//!
//! Ids are 1-based in the file and 0-based in memory. When any weight line
//! is present, vertices without one get weight 1.

use std::fmt::Write as _;
use std::path::PathBuf;

use thiserror::Error;

use crate::graph::{Graph, GraphError, WeightFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header `{0}` (expected `p edge <n> <m>`)")]
    MalformedHeader(String),
    #[error("missing `p` header")]
    MissingHeader,
    #[error("duplicate `p` header")]
    DuplicateHeader,
    #[error("malformed {0} line")]
    MalformedLine(&'static str),
    #[error("vertex id {id} out of range 1..={n}")]
    OutOfRange { id: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate weight line for vertex {0}")]
    DuplicateWeight(usize),
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Present iff the file has at least one weight line.
    pub weights: Option<WeightFunction<u64>>,
    pub source: Option<PathBuf>,
    /// Repeated `e` lines (in either orientation), merged on load.
    pub duplicate_edges: usize,
    /// Edge count stated in the header.
    pub declared_edges: usize,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn vertex(
    tok: Option<&str>,
    n: usize,
    line: usize,
    what: &'static str,
) -> Result<usize, ParseError> {
    let id: usize = tok
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line, ParseErrorKind::MalformedLine(what)))?;
    if id == 0 || id > n {
        return Err(err(line, ParseErrorKind::OutOfRange { id, n }));
    }
    Ok(id - 1)
}

pub fn parse_dimacs(text: &str) -> Result<GraphFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<Option<u64>> = Vec::new();
    let mut any_weight = false;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                let bad = || {
                    err(
                        line,
                        ParseErrorKind::MalformedHeader(raw.trim().to_string()),
                    )
                };
                let format = toks.next().ok_or_else(bad)?;
                if !matches!(format, "edge" | "edges" | "col") {
                    return Err(bad());
                }
                let n: usize = toks.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                let m: usize = toks.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                if toks.next().is_some() {
                    return Err(bad());
                }
                header = Some((n, m));
                weights = vec![None; n];
            }
            "e" | "n" => {
                let (n, _) = header.ok_or_else(|| err(line, ParseErrorKind::MissingHeader))?;
                let what = if kind == "e" { "edge" } else { "weight" };
                let u = vertex(toks.next(), n, line, what)?;
                if kind == "e" {
                    let v = vertex(toks.next(), n, line, what)?;
                    if u == v {
                        return Err(err(line, ParseErrorKind::SelfLoop(u + 1)));
                    }
                    edges.push((u, v));
                } else {
                    let w: u64 = toks
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(line, ParseErrorKind::MalformedLine(what)))?;
                    if weights[u].replace(w).is_some() {
                        return Err(err(line, ParseErrorKind::DuplicateWeight(u + 1)));
                    }
                    any_weight = true;
                }
                if toks.next().is_some() {
                    return Err(err(line, ParseErrorKind::MalformedLine(what)));
                }
            }
            other => return Err(err(line, ParseErrorKind::UnknownLine(other.to_string()))),
        }
    }

    let (n, declared_edges) =
        header.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    let (graph, duplicate_edges) = Graph::from_edges_counting(n, edges).map_err(|e| match e {
        // ids were range-checked and loops rejected above
        GraphError::SelfLoop(v) => err(0, ParseErrorKind::SelfLoop(v + 1)),
        other => unreachable!("{other}"),
    })?;
    let weights = any_weight.then(|| {
        WeightFunction::new(weights.into_iter().map(|w| w.unwrap_or(1)).collect())
            .expect("u64 weights are non-negative")
    });
    Ok(GraphFile {
        graph,
        weights,
        source: None,
        duplicate_edges,
        declared_edges,
    })
}

/// Writes `g` with edges in ascending order, then one weight line per vertex
/// when weights are given.
pub fn write_dimacs(g: &Graph, weights: Option<&WeightFunction<u64>>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    if let Some(w) = weights {
        for (v, x) in w.as_slice().iter().enumerate() {
            let _ = writeln!(s, "n {} {}", v + 1, x);
        }
    }
    s
}
