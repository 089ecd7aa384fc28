use super::Graph;

/// An induced copy of `K_{1,k}`: `center` adjacent to every leaf, leaves
/// pairwise non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarWitness {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl StarWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.leaves.iter().all(|&l| g.has_edge(self.center, l))
            && self.leaves.iter().enumerate().all(|(i, &a)| {
                self.leaves[i + 1..]
                    .iter()
                    .all(|&b| a != b && !g.has_edge(a, b))
            })
    }
}

/// Searches for an induced `K_{1,k}` by looking, around every vertex, for an
/// independent set of size `k` among its neighbors. Returns `None` iff the
/// graph is `K_{1,k}`-free.
///
/// `k` must be at least 2.
pub fn find_induced_star(g: &Graph, k: usize) -> Option<StarWitness> {
    assert!(k >= 2, "star size must be at least 2");
    for center in 0..g.n() {
        let nbrs = g.neighbors(center);
        if nbrs.len() < k {
            continue;
        }
        let mut chosen = Vec::with_capacity(k);
        if extend_independent(g, nbrs, 0, k, &mut chosen) {
            return Some(StarWitness {
                center,
                leaves: chosen,
            });
        }
    }
    None
}

fn extend_independent(
    g: &Graph,
    candidates: &[usize],
    start: usize,
    k: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    // not enough candidates left to finish
    if candidates.len() - start < k - chosen.len() {
        return false;
    }
    for i in start..candidates.len() {
        let c = candidates[i];
        if chosen.iter().any(|&u| g.has_edge(u, c)) {
            continue;
        }
        chosen.push(c);
        if extend_independent(g, candidates, i + 1, k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
