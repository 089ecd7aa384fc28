//! Conflict-free coloring of a hypergraph with `t + 1` colors, where `t` is
//! its maximum vertex degree.
//!
//! A greedy pass is tried first. If it leaves an edge without a uniquely
//! colored vertex, the hitting-set construction takes over: pick a minimal
//! set `S` of vertices meeting every edge and give everything outside `S`
//! the lowest color. Each vertex of `S` then owns an edge that meets `S`
//! only in that vertex, so the edges meeting `S` at least twice form a
//! hypergraph on `S` of degree at most `t - 1`, which is colored the same
//! way one level up. An exhaustive search is provided as an oracle.

use crate::coloring::PartialColoring;
use crate::error::Result;
use crate::graph::Graph;
use crate::hypergraph::{neighborhood_hypergraph, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Greedy,
    HittingSet,
}

#[derive(Debug, Clone)]
pub struct DegreeColoring {
    /// Coloring of every hypergraph vertex, palette `max_degree + 1`.
    pub coloring: PartialColoring,
    pub max_degree: usize,
    pub method: Method,
}

/// Colors `h` with at most `vertex_degree_max(h) + 1` colors so that every
/// edge has a vertex whose color no other vertex of the edge shares.
pub fn cf_color_by_degree(h: &Hypergraph) -> DegreeColoring {
    let t = h.vertex_degree_max();
    let palette = t + 1;
    let (colors, method) = match greedy(h, palette) {
        Some(colors) => (colors, Method::Greedy),
        None => (hitting_set_coloring(h), Method::HittingSet),
    };
    assert!(
        colors.iter().all(|&c| c >= 1 && c <= palette),
        "color outside the degree bound"
    );
    DegreeColoring {
        coloring: PartialColoring::new(h.n(), colors.into_iter().enumerate(), palette),
        max_degree: t,
        method,
    }
}

fn degree_order(h: &Hypergraph) -> Vec<usize> {
    let deg = h.vertex_degrees();
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    order
}

/// Greedy pass: vertices by descending degree, each takes the color that
/// leaves the fewest incident edges without a unique color, preferring
/// colors that create new unique colors. Returns `None` if some edge ends
/// up without a unique color.
#[allow(clippy::needless_range_loop)]
fn greedy(h: &Hypergraph, palette: usize) -> Option<Vec<usize>> {
    let incidence = h.incidence();
    let m = h.edge_count();
    let mut count = vec![vec![0u32; palette + 1]; m];
    let mut unique = vec![0usize; m];
    let mut colors = vec![0usize; h.n()];

    for v in degree_order(h) {
        let mut best = (usize::MAX, 0usize, 0usize);
        for c in 1..=palette {
            let mut killed = 0;
            let mut gained = 0;
            for &e in &incidence[v] {
                match count[e][c] {
                    0 => gained += 1,
                    1 if unique[e] == 1 => killed += 1,
                    _ => {}
                }
            }
            if (killed, usize::MAX - gained) < (best.0, usize::MAX - best.1) {
                best = (killed, gained, c);
            }
        }
        let c = best.2;
        colors[v] = c;
        for &e in &incidence[v] {
            match count[e][c] {
                0 => unique[e] += 1,
                1 => unique[e] -= 1,
                _ => {}
            }
            count[e][c] += 1;
        }
    }
    unique.iter().all(|&u| u > 0).then_some(colors)
}

/// Hitting-set construction; always succeeds with `degree + 1` colors.
pub fn hitting_set_coloring(h: &Hypergraph) -> Vec<usize> {
    let mut colors = vec![1usize; h.n()];
    color_level(h.n(), h.edges().to_vec(), 1, &mut colors);
    colors
}

fn color_level(n: usize, edges: Vec<Vec<usize>>, level: usize, colors: &mut [usize]) {
    if edges.is_empty() {
        return;
    }
    let mut in_hitting = vec![false; n];
    let mut hits: Vec<usize> = edges.iter().map(Vec::len).collect();
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            in_hitting[v] = true;
            incidence[v].push(i);
        }
    }
    // shrink to a minimal hitting set
    for v in 0..n {
        if in_hitting[v] && incidence[v].iter().all(|&e| hits[e] >= 2) {
            in_hitting[v] = false;
            for &e in &incidence[v] {
                hits[e] -= 1;
            }
        }
    }
    for v in 0..n {
        if !incidence[v].is_empty() {
            colors[v] = if in_hitting[v] { level + 1 } else { level };
        }
    }
    let next: Vec<Vec<usize>> = edges
        .iter()
        .zip(&hits)
        .filter(|&(_, &h)| h >= 2)
        .map(|(e, _)| e.iter().copied().filter(|&v| in_hitting[v]).collect())
        .collect();
    color_level(n, next, level + 1, colors);
}

/// Exhaustive search for a conflict-free coloring with colors
/// `1..=palette`. Exponential; meant for small instances.
pub fn cf_color_exhaustive(h: &Hypergraph, palette: usize) -> Option<Vec<usize>> {
    if palette == 0 {
        return (h.n() == 0 && h.edge_count() == 0).then(Vec::new);
    }
    let order = degree_order(h);
    let mut position = vec![0; h.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // edges to check once the vertex at each position is colored
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        let last = e.iter().map(|&v| position[v]).max().unwrap();
        closes[last].push(i);
    }
    let mut colors = vec![0usize; h.n()];
    fn search(
        h: &Hypergraph,
        order: &[usize],
        closes: &[Vec<usize>],
        palette: usize,
        depth: usize,
        colors: &mut Vec<usize>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for c in 1..=palette {
            colors[v] = c;
            let ok = closes[depth].iter().all(|&e| {
                let edge = h.edge(e);
                edge.iter()
                    .any(|&a| edge.iter().filter(|&&b| colors[b] == colors[a]).count() == 1)
            });
            if ok && search(h, order, closes, palette, depth + 1, colors) {
                return true;
            }
        }
        colors[v] = 0;
        false
    }
    search(h, &order, &closes, palette, 0, &mut colors).then_some(colors)
}

#[derive(Debug, Clone)]
pub struct NeighborhoodColoring {
    /// Coloring of `Y` in graph vertex indices.
    pub coloring: PartialColoring,
    /// Largest number of `X`-neighbors of a `Y` vertex.
    pub t_x: usize,
    pub method: Method,
}

/// Colors `y` with at most `t_x + 1` colors so that every vertex of `x`
/// sees some color exactly once among its neighbors in `y`. Every vertex of
/// `x` needs a neighbor in `y`.
pub fn neighborhood_cf_color(g: &Graph, x: &[usize], y: &[usize]) -> Result<NeighborhoodColoring> {
    let nh = neighborhood_hypergraph(g, x, y)?;
    let dc = cf_color_by_degree(&nh.hypergraph);
    let assignment = nh
        .targets
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, dc.coloring.color(i).unwrap()));
    Ok(NeighborhoodColoring {
        coloring: PartialColoring::new(g.n(), assignment, dc.max_degree + 1),
        t_x: dc.max_degree,
        method: dc.method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::verify::{hypergraph_cf_violations, unseen_unique};

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn fano() -> Hypergraph {
        h(
            7,
            &[
                &[0, 1, 2],
                &[0, 3, 4],
                &[0, 5, 6],
                &[1, 3, 5],
                &[1, 4, 6],
                &[2, 3, 6],
                &[2, 4, 5],
            ],
        )
    }

    fn assert_cf(h: &Hypergraph, dc: &DegreeColoring) {
        assert!(hypergraph_cf_violations(h, &dc.coloring.to_dense()).is_empty());
        assert!(dc.coloring.palette_size() <= h.vertex_degree_max() + 1);
    }

    #[test]
    fn disjoint_edges_use_two_colors() {
        let hg = h(6, &[&[0, 1, 2], &[3, 4], &[5]]);
        let dc = cf_color_by_degree(&hg);
        assert_eq!(dc.coloring.palette_size(), 2);
        assert_cf(&hg, &dc);
        let hs = hitting_set_coloring(&hg);
        assert!(hypergraph_cf_violations(&hg, &hs).is_empty());
        assert!(hs.iter().all(|&c| c <= 2));
    }

    #[test]
    fn single_edges_of_any_size() {
        for size in 1..5 {
            let hg = Hypergraph::new(size, vec![(0..size).collect()]).unwrap();
            assert_cf(&hg, &cf_color_by_degree(&hg));
        }
        // one vertex in one edge: a single color is already unique
        assert_eq!(cf_color_exhaustive(&h(1, &[&[0]]), 1), Some(vec![1]));
        assert_eq!(cf_color_exhaustive(&h(2, &[&[0, 1]]), 1), None);
    }

    #[test]
    fn fano_plane_within_four_colors() {
        let f = fano();
        assert_eq!(f.vertex_degree_max(), 3);
        let oracle = cf_color_exhaustive(&f, 4).expect("a 4-coloring exists");
        assert!(hypergraph_cf_violations(&f, &oracle).is_empty());
        assert_cf(&f, &cf_color_by_degree(&f));
        assert!(hypergraph_cf_violations(&f, &hitting_set_coloring(&f)).is_empty());
    }

    #[test]
    fn neighborhood_examples() {
        let s = star(3);
        // leaves observe the hub
        let nc = neighborhood_cf_color(&s, &[1, 2, 3], &[0]).unwrap();
        assert_eq!((nc.t_x, nc.coloring.palette_size()), (3, 4));
        assert!(unseen_unique(&s, &[1, 2, 3], &[0], &nc.coloring.to_dense()).is_empty());
        assert_eq!(nc.coloring.colors_used(), 1);

        // hub observes the leaves: brute force shows 2 colors are needed
        let two_colorings_ok = (0..8u32)
            .filter(|bits| {
                let colors = [
                    0,
                    1 + (bits & 1) as usize,
                    1 + (bits >> 1 & 1) as usize,
                    1 + (bits >> 2 & 1) as usize,
                ];
                unseen_unique(&s, &[0], &[1, 2, 3], &colors).is_empty()
            })
            .count();
        assert_eq!(two_colorings_ok, 6);
        let nc = neighborhood_cf_color(&s, &[0], &[1, 2, 3]).unwrap();
        assert_eq!(nc.t_x, 1);
        assert!(nc.coloring.palette_size() <= 2);
        assert!(unseen_unique(&s, &[0], &[1, 2, 3], &nc.coloring.to_dense()).is_empty());

        let c4 = cycle(4).unwrap();
        let nc = neighborhood_cf_color(&c4, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(nc.t_x, 2);
        assert_ne!(nc.coloring.color(1), nc.coloring.color(3));
        assert!(nc.coloring.palette_size() <= 3);
    }

    #[test]
    fn isolated_source_is_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(neighborhood_cf_color(&g, &[0, 2], &[1]).is_err());
    }
}
