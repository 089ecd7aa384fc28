//! Graph families used as test corpora.

use rand::Rng as _;

use super::Graph;
use crate::error::{Error, Result};
use crate::rng;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,k}` with hub 0 and leaves `1..=k`.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|l| (0, l))).unwrap()
}

/// Erdős–Rényi `G(n, p)` drawn from a seeded generator.
pub fn gnp_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = rng::seeded(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Line graph of `K_n`.
pub fn line_complete(n: usize) -> Result<Graph> {
    complete(n).line_graph()
}

/// Line graph of a seeded `G(n, p)`, with edges that form a component on
/// their own dropped first so the result has no isolated vertices.
pub fn random_line_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let g = gnp_random(n, p, seed)?;
    let kept: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| g.degree(u) > 1 || g.degree(v) > 1)
        .collect();
    Graph::from_edges(n, kept)?.line_graph()
}
