//! Independent checkers for the coloring properties. Nothing here is shared
//! with the constructions; they only look at the graph and the colors.

use std::collections::HashMap;
use std::hash::Hash;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// True iff some color occurs exactly once in `colors`.
pub fn has_unique_color<C, I>(colors: I) -> bool
where
    C: Eq + Hash,
    I: IntoIterator<Item = C>,
{
    let mut counts: HashMap<C, usize> = HashMap::new();
    for c in colors {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts.values().any(|&n| n == 1)
}

/// Vertices with no color occurring exactly once among their neighbors.
/// Isolated vertices always violate.
pub fn cfon_violations<C: Eq + Hash>(g: &Graph, colors: &[C]) -> Vec<usize> {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    (0..g.n())
        .filter(|&v| !has_unique_color(g.neighbors(v).iter().map(|&u| &colors[u])))
        .collect()
}

/// Vertices with no color occurring exactly once in their closed neighborhood.
pub fn cfcn_violations<C: Eq + Hash>(g: &Graph, colors: &[C]) -> Vec<usize> {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    (0..g.n())
        .filter(|&v| {
            let closed = g.neighbors(v).iter().copied().chain(std::iter::once(v));
            !has_unique_color(closed.map(|u| &colors[u]))
        })
        .collect()
}

/// Edges of `h` lacking a uniquely colored vertex.
pub fn hypergraph_cf_violations<C: Eq + Hash>(h: &Hypergraph, colors: &[C]) -> Vec<usize> {
    assert_eq!(colors.len(), h.n(), "one color per vertex");
    h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| !has_unique_color(e.iter().map(|&v| &colors[v])))
        .map(|(i, _)| i)
        .collect()
}

/// Vertices of `observers` that do not see a unique color among their
/// neighbors inside `colored`. `colors[v]` is only read for `v` in `colored`.
pub fn unseen_unique<C: Eq + Hash>(
    g: &Graph,
    observers: &[usize],
    colored: &[usize],
    colors: &[C],
) -> Vec<usize> {
    let mut inside = vec![false; g.n()];
    for &v in colored {
        inside[v] = true;
    }
    observers
        .iter()
        .copied()
        .filter(|&v| {
            let seen = g
                .neighbors(v)
                .iter()
                .filter(|&&u| inside[u])
                .map(|&u| &colors[u]);
            !has_unique_color(seen)
        })
        .collect()
}

/// Whether `colors` is a proper coloring of `g`.
pub fn is_proper<C: Eq>(g: &Graph, colors: &[C]) -> bool {
    g.edges().all(|(u, v)| colors[u] != colors[v])
}
