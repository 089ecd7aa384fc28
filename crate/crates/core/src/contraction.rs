//! Coloring one side of a bipartition so that every vertex on the other
//! side sees some color exactly once.
//!
//! Every `y` in `Y` picks a representative neighbor `rep(y)` in `X`. The
//! conflict graph on `X` joins `rep(y)` to every other `X`-neighbor of `y`,
//! and keeps the edges of `G` inside `X`. Any proper coloring of the
//! conflict graph gives `rep(y)` a color no other `X`-neighbor of `y` has.
//! If every vertex has at most `d_x` neighbors in `X` and every vertex of
//! `X` at most `d_y` neighbors in `Y`, the conflict graph has maximum degree
//! at most `(d_x - 1) d_y + d_x`, so first-fit uses at most
//! `d_x d_y + d_x - d_y + 1` colors.

use std::collections::BTreeMap;

use crate::coloring::PartialColoring;
use crate::error::{Condition, Error, Result};
use crate::graph::Graph;

const CONSTRUCTION: &str = "contraction coloring";

/// Neighbor bounds `d_x` (neighbors in X of any vertex) and `d_y`
/// (neighbors in Y of any X vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborBounds {
    pub d_x: usize,
    pub d_y: usize,
}

impl NeighborBounds {
    /// Tightest bounds for the instance, measured over `X ∪ Y`.
    pub fn measure(g: &Graph, x: &[usize], y: &[usize]) -> Self {
        let in_x = mask(g.n(), x);
        let in_y = mask(g.n(), y);
        let d_x = x
            .iter()
            .chain(y)
            .map(|&v| g.degree_into(v, &in_x))
            .max()
            .unwrap_or(0);
        let d_y = x
            .iter()
            .map(|&v| g.degree_into(v, &in_y))
            .max()
            .unwrap_or(0);
        NeighborBounds { d_x, d_y }
    }

    /// `d_x d_y + d_x - d_y + 1`.
    pub fn palette_bound(&self) -> usize {
        (self.d_x * self.d_y + self.d_x + 1).saturating_sub(self.d_y)
    }

    /// `(d_x - 1) d_y + d_x`.
    pub fn conflict_degree_bound(&self) -> usize {
        self.d_x.saturating_sub(1) * self.d_y + self.d_x
    }
}

/// `rep(y)` for every `y` in `Y`: its smallest-index neighbor in `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentativeMap {
    rep: BTreeMap<usize, usize>,
}

impl RepresentativeMap {
    pub fn get(&self, y: usize) -> Option<usize> {
        self.rep.get(&y).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rep.iter().map(|(&y, &x)| (y, x))
    }
}

#[derive(Debug, Clone)]
pub struct ContractionColoring {
    /// Coloring of `X`; the palette is the number of colors used.
    pub coloring: PartialColoring,
    pub representatives: RepresentativeMap,
    pub bounds: NeighborBounds,
    pub conflict_max_degree: usize,
}

fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

fn violation(condition: Condition) -> Error {
    Error::Precondition {
        construction: CONSTRUCTION,
        condition,
    }
}

/// Colors `x` so every vertex of `y` sees a color exactly once among its
/// neighbors in `x`. With `bounds = None` the bounds are measured from the
/// instance; supplied bounds are validated and an error names the first
/// violated condition.
pub fn contraction_color(
    g: &Graph,
    x: &[usize],
    y: &[usize],
    bounds: Option<NeighborBounds>,
) -> Result<ContractionColoring> {
    for &v in x.iter().chain(y) {
        g.check_vertex(v)?;
    }
    let in_x = mask(g.n(), x);
    let in_y = mask(g.n(), y);
    if x.is_empty() || y.is_empty() || y.iter().any(|&v| in_x[v]) {
        return Err(violation(Condition::DisjointNonempty));
    }

    let measured = NeighborBounds::measure(g, x, y);
    let bounds = bounds.unwrap_or(measured);
    for &v in x.iter().chain(y) {
        let found = g.degree_into(v, &in_x);
        if found > bounds.d_x {
            return Err(violation(Condition::XNeighborBound {
                vertex: v,
                found,
                bound: bounds.d_x,
            }));
        }
    }
    if let Some(&v) = y.iter().find(|&&v| g.degree_into(v, &in_x) == 0) {
        return Err(violation(Condition::YDominatedByX { vertex: v }));
    }
    for &v in x {
        let found = g.degree_into(v, &in_y);
        if found > bounds.d_y {
            return Err(violation(Condition::YNeighborBound {
                vertex: v,
                found,
                bound: bounds.d_y,
            }));
        }
    }

    let mut local = vec![usize::MAX; g.n()];
    let mut xs = x.to_vec();
    xs.sort_unstable();
    for (i, &v) in xs.iter().enumerate() {
        local[v] = i;
    }

    let mut conflict: Vec<Vec<usize>> = vec![Vec::new(); xs.len()];
    let mut link = |a: usize, b: usize| {
        conflict[a].push(b);
        conflict[b].push(a);
    };
    for &v in &xs {
        for &u in g.neighbors(v) {
            if in_x[u] && u > v {
                link(local[v], local[u]);
            }
        }
    }
    let mut rep = BTreeMap::new();
    for &w in y {
        let mut x_nbrs = g.neighbors(w).iter().copied().filter(|&u| in_x[u]);
        let r = x_nbrs.next().expect("checked above");
        rep.insert(w, r);
        for other in x_nbrs {
            link(local[r], local[other]);
        }
    }
    for list in &mut conflict {
        list.sort_unstable();
        list.dedup();
    }
    let conflict_max_degree = conflict.iter().map(Vec::len).max().unwrap_or(0);
    assert!(
        conflict_max_degree <= bounds.conflict_degree_bound(),
        "conflict graph degree {conflict_max_degree} exceeds {}",
        bounds.conflict_degree_bound()
    );

    let mut color = vec![0usize; xs.len()];
    let mut taken = vec![false; conflict_max_degree + 2];
    for i in 0..xs.len() {
        for &j in &conflict[i] {
            taken[color[j]] = true;
        }
        color[i] = (1..).find(|&c| !taken[c]).unwrap();
        for &j in &conflict[i] {
            taken[color[j]] = false;
        }
    }
    let palette = color.iter().copied().max().unwrap_or(0);
    debug_assert!(palette <= bounds.palette_bound());

    Ok(ContractionColoring {
        coloring: PartialColoring::new(g.n(), xs.iter().copied().zip(color), palette),
        representatives: RepresentativeMap { rep },
        bounds,
        conflict_max_degree,
    })
}
