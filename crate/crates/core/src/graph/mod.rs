//! Simple undirected graphs on dense vertex indices `0..n`.

pub mod generators;
pub mod io;
mod star;

pub use star::{find_induced_star, StarWitness};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple undirected graph. Neighbor lists are sorted and duplicate free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Maximum degree; zero for graphs without edges.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        Ok(self.adj[v].iter().copied().collect())
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        let mut set = self.open_neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Number of neighbors of `v` inside `set`, where `set` is a membership mask.
    pub fn degree_into(&self, v: usize, set: &[bool]) -> usize {
        self.adj[v].iter().filter(|&&u| set[u]).count()
    }

    /// Subgraph induced on `vertices`. Vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut sub = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            sub.adj[i] = self.adj[v]
                .iter()
                .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                .collect();
            sub.adj[i].sort_unstable();
        }
        Ok(sub)
    }

    /// Line graph: one vertex per edge of `self` (in [`Graph::edges`] order),
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        if edges.is_empty() {
            return Err(Error::Edgeless);
        }
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); edges.len()];
        for list in &incident {
            for (a, &e) in list.iter().enumerate() {
                for &f in &list[a + 1..] {
                    adj[e].insert(f);
                    adj[f].insert(e);
                }
            }
        }
        Ok(Graph {
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Checks the representation invariants. Used by tests and parsers.
    pub fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, nbrs)| {
            nbrs.windows(2).all(|w| w[0] < w[1])
                && nbrs
                    .iter()
                    .all(|&u| u < self.n() && u != v && self.adj[u].binary_search(&v).is_ok())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    #[test]
    fn max_degree_examples() {
        assert_eq!(complete(5).max_degree(), 4);
        assert_eq!(Graph::empty(1).max_degree(), 0);
        assert_eq!(path(4).max_degree(), 2);
    }

    #[test]
    fn neighborhoods() {
        let p3 = path(3);
        assert_eq!(p3.open_neighborhood(1).unwrap(), BTreeSet::from([0, 2]));
        assert_eq!(
            p3.closed_neighborhood(1).unwrap(),
            BTreeSet::from([0, 1, 2])
        );
        let g = Graph::empty(2);
        assert!(g.open_neighborhood(0).unwrap().is_empty());
        assert!(matches!(
            p3.open_neighborhood(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn line_graph_small_cases() {
        let l = path(3).line_graph().unwrap();
        assert_eq!(l, complete(2));
        let l = star(3).line_graph().unwrap();
        assert_eq!(l, complete(3));
        assert!(matches!(Graph::empty(4).line_graph(), Err(Error::Edgeless)));
    }

    #[test]
    fn line_graph_of_k4_is_octahedron() {
        // Edges of K_4 in order: 01 02 03 12 13 23. Each edge misses exactly
        // one other edge (its complement), giving K_6 minus a perfect matching.
        let l = complete(4).line_graph().unwrap();
        assert_eq!(l.n(), 6);
        assert_eq!(l.edge_count(), 12);
        assert!((0..6).all(|v| l.degree(v) == 4));
        for (a, b) in [(0, 5), (1, 4), (2, 3)] {
            assert!(!l.has_edge(a, b));
        }
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c = cycle(5).unwrap();
        let sub = c.induced_subgraph(&[4, 0, 1]).unwrap();
        assert_eq!(sub, path(3));
    }
}
