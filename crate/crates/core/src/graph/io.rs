//! Edge-list and DIMACS `.col` readers and writers.
//!
//! Edge lists hold one `u v` pair per line; `#` lines and blank lines are
//! ignored. Labels are arbitrary tokens and get remapped to dense indices:
//! numerically when every label is a nonnegative integer, lexicographically
//! otherwise. An edge list cannot express isolated vertices.
//!
//! DIMACS files carry a `p edge n m` header and `e u v` lines with 1-based
//! vertices; `c` lines are comments.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

/// A graph parsed from a file together with the original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `labels[v]` is the label of dense vertex `v`.
    pub labels: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut raw: Vec<(usize, &str, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => raw.push((i + 1, a, b)),
            _ => return Err(parse_err(i + 1, format!("expected `u v`, got {trimmed:?}"))),
        }
    }

    let mut labels: Vec<&str> = raw.iter().flat_map(|&(_, a, b)| [a, b]).collect();
    let numeric: Option<Vec<u64>> = labels.iter().map(|l| l.parse::<u64>().ok()).collect();
    match numeric {
        Some(_) => labels.sort_by_key(|l| l.parse::<u64>().unwrap()),
        None => labels.sort_unstable(),
    }
    labels.dedup();
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

    let mut graph = Graph::empty(labels.len());
    for (line, a, b) in raw {
        let (u, v) = (index[a], index[b]);
        graph
            .add_edge(u, v)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(LabeledGraph {
        graph,
        labels: labels.into_iter().map(str::to_owned).collect(),
    })
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::empty(0);
    let mut seen = 0usize;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "repeated problem line"));
                }
                let fields: Vec<&str> = tokens.collect();
                let [kind, n, m] = fields[..] else {
                    return Err(parse_err(line_no, "expected `p edge <n> <m>`"));
                };
                if kind != "edge" && kind != "col" {
                    return Err(parse_err(
                        line_no,
                        format!("unsupported problem type {kind:?}"),
                    ));
                }
                let n: usize = n
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad vertex count"))?;
                let m: usize = m
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad edge count"))?;
                header = Some((n, m));
                graph = Graph::empty(n);
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "edge before problem line"));
                };
                let fields: Vec<&str> = tokens.collect();
                let [u, v] = fields[..] else {
                    return Err(parse_err(line_no, "expected `e <u> <v>`"));
                };
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip([u, v]) {
                    let x: usize = tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad vertex {tok:?}")))?;
                    if x == 0 || x > n {
                        return Err(parse_err(line_no, format!("vertex {x} outside 1..={n}")));
                    }
                    *slot = x - 1;
                }
                graph
                    .add_edge(ends[0], ends[1])
                    .map_err(|e| parse_err(line_no, e.to_string()))?;
                seen += 1;
            }
            Some(other) => {
                return Err(parse_err(line_no, format!("unknown line type {other:?}")));
            }
        }
    }
    let Some((_, m)) = header else {
        return Err(parse_err(0, "missing problem line"));
    };
    if seen != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(graph)
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Graph file formats understood by [`read_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    /// DIMACS if any line opens with a `p` record, edge list otherwise.
    pub fn detect(text: &str) -> Format {
        let is_dimacs = text
            .lines()
            .any(|l| l.split_whitespace().next() == Some("p"));
        if is_dimacs {
            Format::Dimacs
        } else {
            Format::EdgeList
        }
    }
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    match Format::detect(text) {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => {
            let graph = parse_dimacs(text)?;
            let labels = (1..=graph.n()).map(|v| v.to_string()).collect();
            Ok(LabeledGraph { graph, labels })
        }
    }
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<LabeledGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => emit_edge_list(g),
        Format::Dimacs => emit_dimacs(g),
    }
}
