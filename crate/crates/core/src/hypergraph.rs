//! Hypergraphs with sorted hyperedges, plus the neighborhood hypergraph
//! construction that turns a bipartition of a graph into a hypergraph.

use std::fmt;

use crate::error::{Condition, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph on `0..n`. Each edge is sorted; empty edges,
    /// repeated vertices and out-of-range vertices are rejected.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::InvalidHyperedge {
                    edge: i,
                    message: "empty".into(),
                });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidHyperedge {
                    edge: i,
                    message: format!("vertex {} repeated", w[0]),
                });
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(Error::InvalidHyperedge {
                    edge: i,
                    message: format!("vertex {v} out of range for {n} vertices"),
                });
            }
            sorted.push(e);
        }
        Ok(Hypergraph { n, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// For every vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Largest number of edges any single vertex belongs to.
    pub fn vertex_degree_max(&self) -> usize {
        self.vertex_degrees().into_iter().max().unwrap_or(0)
    }

    /// Largest number of *other* edges (by index) that a single edge meets.
    pub fn max_edge_intersection_count(&self) -> usize {
        let m = self.edges.len();
        let mut count = vec![0usize; m];
        for i in 0..m {
            for j in i + 1..m {
                if sorted_intersect(&self.edges[i], &self.edges[j]) {
                    count[i] += 1;
                    count[j] += 1;
                }
            }
        }
        count.into_iter().max().unwrap_or(0)
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    pub fn max_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).max()
    }
}

/// One edge per line, vertices separated by spaces.
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(usize::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// The hypergraph on `targets` whose edges are the neighborhoods of the
/// `sources` restricted to `targets`, with the maps back into the graph.
#[derive(Debug, Clone)]
pub struct NeighborhoodHypergraph {
    pub hypergraph: Hypergraph,
    /// Hypergraph vertex `i` is graph vertex `targets[i]`.
    pub targets: Vec<usize>,
    /// Edge `i` is the neighborhood of graph vertex `sources[i]`.
    pub sources: Vec<usize>,
}

/// Every source must have at least one neighbor among `targets`.
pub fn neighborhood_hypergraph(
    g: &Graph,
    sources: &[usize],
    targets: &[usize],
) -> Result<NeighborhoodHypergraph> {
    let mut local = vec![usize::MAX; g.n()];
    for (i, &t) in targets.iter().enumerate() {
        g.check_vertex(t)?;
        local[t] = i;
    }
    let mut edges = Vec::with_capacity(sources.len());
    for &s in sources {
        g.check_vertex(s)?;
        let e: Vec<usize> = g
            .neighbors(s)
            .iter()
            .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
            .collect();
        if e.is_empty() {
            return Err(Error::Precondition {
                construction: "neighborhood hypergraph",
                condition: Condition::SourceHasTarget { vertex: s },
            });
        }
        edges.push(e);
    }
    Ok(NeighborhoodHypergraph {
        hypergraph: Hypergraph::new(targets.len(), edges)?,
        targets: targets.to_vec(),
        sources: sources.to_vec(),
    })
}
