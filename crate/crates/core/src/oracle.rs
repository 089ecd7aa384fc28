//! Exact conflict-free chromatic numbers of small graphs by backtracking,
//! and the corpus of small connected graphs used to sweep them.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest instance the oracle accepts.
pub const DEFAULT_ORACLE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neighborhood {
    Open,
    Closed,
}

impl std::str::FromStr for Neighborhood {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(Neighborhood::Open),
            "closed" => Ok(Neighborhood::Closed),
            other => Err(Error::InvalidArgument(format!(
                "expected open or closed, got {other:?}"
            ))),
        }
    }
}

/// Searches for a coloring with colors `1..=q` in which every vertex sees a
/// color exactly once in its (open or closed) neighborhood.
///
/// Colorings are enumerated up to renaming of colors: vertex `i` may only
/// use a color at most one above the largest color among vertices `< i`.
/// A vertex's condition is checked as soon as its last neighbor is colored.
pub fn find_cf_coloring(g: &Graph, nbhd: Neighborhood, q: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if q == 0 {
        return None;
    }
    let members: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut m = g.neighbors(v).to_vec();
            if nbhd == Neighborhood::Closed {
                m.push(v);
            }
            m
        })
        .collect();
    // vertices whose condition becomes decidable once vertex i is colored
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, m) in members.iter().enumerate() {
        match m.iter().max() {
            Some(&last) => ready[last].push(v),
            None => return None,
        }
    }

    struct Search<'a> {
        members: &'a [Vec<usize>],
        ready: &'a [Vec<usize>],
        q: usize,
        colors: Vec<usize>,
        counts: Vec<usize>,
    }

    impl Search<'_> {
        fn sees_unique(&mut self, v: usize) -> bool {
            for &u in &self.members[v] {
                self.counts[self.colors[u]] += 1;
            }
            let ok = self.members[v]
                .iter()
                .any(|&u| self.counts[self.colors[u]] == 1);
            for &u in &self.members[v] {
                self.counts[self.colors[u]] = 0;
            }
            ok
        }

        fn run(&mut self, i: usize, max_used: usize) -> bool {
            if i == self.colors.len() {
                return true;
            }
            for c in 1..=(max_used + 1).min(self.q) {
                self.colors[i] = c;
                let ready = self.ready;
                if ready[i].iter().all(|&v| self.sees_unique(v)) && self.run(i + 1, max_used.max(c))
                {
                    return true;
                }
            }
            self.colors[i] = 0;
            false
        }
    }

    let mut search = Search {
        members: &members,
        ready: &ready,
        q,
        colors: vec![0; n],
        counts: vec![0; q + 1],
    };
    search.run(0, 0).then_some(search.colors)
}

/// Smallest `q <= max_colors` admitting a conflict-free coloring, with one
/// such coloring; `None` if `max_colors` is not enough.
pub fn exact_cf_number(
    g: &Graph,
    nbhd: Neighborhood,
    max_colors: usize,
    limit: usize,
) -> Result<Option<(usize, Vec<usize>)>> {
    if g.n() > limit {
        return Err(Error::OracleLimit { n: g.n(), limit });
    }
    if nbhd == Neighborhood::Open {
        let isolated = g.isolated_vertices();
        if !isolated.is_empty() {
            return Err(Error::IsolatedVertices(isolated));
        }
    }
    let start = if g.n() == 0 { 0 } else { 1 };
    Ok((start..=max_colors).find_map(|q| find_cf_coloring(g, nbhd, q).map(|c| (q, c))))
}

pub fn exact_cfon_number(g: &Graph, max_colors: usize) -> Result<Option<usize>> {
    Ok(exact_cf_number(g, Neighborhood::Open, max_colors, DEFAULT_ORACLE_LIMIT)?.map(|(q, _)| q))
}

pub fn exact_cfcn_number(g: &Graph, max_colors: usize) -> Result<Option<usize>> {
    Ok(exact_cf_number(g, Neighborhood::Closed, max_colors, DEFAULT_ORACLE_LIMIT)?.map(|(q, _)| q))
}

fn pair_bit(n: usize, a: usize, b: usize) -> u64 {
    let (a, b) = (a.min(b), a.max(b));
    1 << (a * n + b)
}

/// Smallest edge bitmask over all relabelings; equal for isomorphic graphs.
/// Supports up to 8 vertices.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "canonical form supports at most 8 vertices");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0..n)
        .permutations(n)
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |acc, &(a, b)| acc | pair_bit(n, p[a], p[b]))
        })
        .min()
        .unwrap_or(0)
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_edges(n, edges.filter(|&(a, b)| mask & pair_bit(n, a, b) != 0)).unwrap()
}

/// All connected graphs on `n` vertices up to isomorphism (`n <= 8`).
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// extending each connected graph on `n - 1` vertices by a new vertex with
/// every nonempty neighbor set reaches all of them.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    match n {
        0 => Vec::new(),
        1 => vec![Graph::empty(1)],
        _ => {
            let mut forms = BTreeSet::new();
            for base in connected_graphs(n - 1) {
                let old: Vec<(usize, usize)> = base.edges().collect();
                for subset in 1u32..(1 << (n - 1)) {
                    let new = (0..n - 1)
                        .filter(|&v| subset >> v & 1 == 1)
                        .map(|v| (v, n - 1));
                    let g = Graph::from_edges(n, old.iter().copied().chain(new)).unwrap();
                    forms.insert(canonical_form(&g));
                }
            }
            forms.into_iter().map(|m| from_mask(n, m)).collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityRow {
    pub id: usize,
    pub n: usize,
    pub m: usize,
    pub cfon: usize,
    pub cfcn: usize,
}

impl InequalityRow {
    pub fn ratio(&self) -> f64 {
        self.cfcn as f64 / self.cfon as f64
    }

    pub fn holds(&self) -> bool {
        self.cfcn <= 2 * self.cfon
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct InequalityReport {
    pub rows: Vec<InequalityRow>,
}

impl InequalityReport {
    pub fn violations(&self) -> Vec<&InequalityRow> {
        self.rows.iter().filter(|r| !r.holds()).collect()
    }

    pub fn max_ratio(&self) -> Option<f64> {
        self.rows.iter().map(InequalityRow::ratio).reduce(f64::max)
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "id\tn\tm\tcfon\tcfcn\tratio")?;
        for r in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}\t{:.3}",
                r.id,
                r.n,
                r.m,
                r.cfon,
                r.cfcn,
                r.ratio()
            )?;
        }
        Ok(())
    }
}

/// Computes both exact numbers for every graph. Graphs need no isolated
/// vertices and must fit the oracle limit.
pub fn sweep_inequality(corpus: &[Graph]) -> Result<InequalityReport> {
    let rows = corpus
        .iter()
        .enumerate()
        .map(|(id, g)| {
            let cap = g.n().max(1);
            let missing =
                || Error::Internal(format!("graph {id}: no coloring within {cap} colors"));
            let cfon = exact_cfon_number(g, cap)?.ok_or_else(missing)?;
            let cfcn = exact_cfcn_number(g, cap)?.ok_or_else(missing)?;
            Ok(InequalityRow {
                id,
                n: g.n(),
                m: g.edge_count(),
                cfon,
                cfcn,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InequalityReport { rows })
}
