//! The coloring file format.
//!
//! ```text
//! cfcolor v1 <n> <palette>
//! # key=value metadata
//! v <vertex> <flat-color> <pair-first> <pair-second> <witness-neighbor>
//! ```
//!
//! Vertices are the labels from the graph file. Closed-neighborhood
//! colorings have no pair colors and write `-` in both pair fields.

use std::collections::HashMap;
use std::fmt::Write as _;

use cfcolor::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLine {
    pub vertex: String,
    pub color: usize,
    pub pair: Option<(usize, usize)>,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringRecord {
    pub n: usize,
    pub palette: usize,
    pub metadata: Vec<(String, String)>,
    pub vertices: Vec<VertexLine>,
}

impl ColoringRecord {
    pub fn render(&self) -> String {
        let mut out = format!("cfcolor v1 {} {}\n", self.n, self.palette);
        for (k, v) in &self.metadata {
            writeln!(out, "# {k}={v}").unwrap();
        }
        for line in &self.vertices {
            let (a, b) = match line.pair {
                Some((a, b)) => (a.to_string(), b.to_string()),
                None => ("-".into(), "-".into()),
            };
            writeln!(
                out,
                "v {} {} {a} {b} {}",
                line.vertex, line.color, line.witness
            )
            .unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (n, palette) = loop {
            match lines.next() {
                None => return Err(err(1, "missing `cfcolor v1` header".into())),
                Some((_, "")) => continue,
                Some((i, l)) => {
                    let t: Vec<&str> = l.split_whitespace().collect();
                    match t.as_slice() {
                        ["cfcolor", "v1", n, p] => {
                            let n = n
                                .parse()
                                .map_err(|_| err(i, format!("bad vertex count {n:?}")))?;
                            let p = p
                                .parse()
                                .map_err(|_| err(i, format!("bad palette {p:?}")))?;
                            break (n, p);
                        }
                        _ => {
                            return Err(err(
                                i,
                                format!("expected `cfcolor v1 <n> <palette>`, got {l:?}"),
                            ))
                        }
                    }
                }
            }
        };

        let mut metadata = Vec::new();
        let mut vertices = Vec::new();
        for (i, l) in lines {
            if l.is_empty() {
                continue;
            }
            if let Some(meta) = l.strip_prefix('#') {
                if let Some((k, v)) = meta.trim().split_once('=') {
                    metadata.push((k.to_owned(), v.to_owned()));
                }
                continue;
            }
            let t: Vec<&str> = l.split_whitespace().collect();
            let ["v", vertex, color, a, b, witness] = t.as_slice() else {
                return Err(err(
                    i,
                    format!("expected `v <vertex> <color> <a> <b> <witness>`, got {l:?}"),
                ));
            };
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| err(i, format!("bad number {s:?}")))
            };
            let color = num(color)?;
            if color == 0 || color > palette {
                return Err(err(i, format!("color {color} outside 1..={palette}")));
            }
            let pair = match (*a, *b) {
                ("-", "-") => None,
                (a, b) => Some((num(a)?, num(b)?)),
            };
            vertices.push(VertexLine {
                vertex: vertex.to_string(),
                color,
                pair,
                witness: witness.to_string(),
            });
        }
        if vertices.len() != n {
            return Err(err(
                0,
                format!("header declares {n} vertices, found {}", vertices.len()),
            ));
        }
        Ok(ColoringRecord {
            n,
            palette,
            metadata,
            vertices,
        })
    }

    /// Flat colors indexed by the graph's dense vertices.
    pub fn colors_for(&self, labels: &[String]) -> Result<Vec<usize>, Error> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "coloring has {} vertices but the graph has {}",
                self.n,
                labels.len()
            )));
        }
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut colors = vec![0; labels.len()];
        for line in &self.vertices {
            let &v = index.get(line.vertex.as_str()).ok_or_else(|| {
                Error::InvalidArgument(format!("vertex {:?} is not in the graph", line.vertex))
            })?;
            if colors[v] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "vertex {:?} colored twice",
                    line.vertex
                )));
            }
            colors[v] = line.color;
        }
        Ok(colors)
    }
}
