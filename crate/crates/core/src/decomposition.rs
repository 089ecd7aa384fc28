//! Layered proper colorings and the three-way split of their classes.
//!
//! A layered coloring is a proper coloring whose classes `C_1, C_2, ...` are
//! ordered so that, once normalized, every vertex of `C_i` has a neighbor in
//! each earlier class. Class indices are 0-based in the API: `classes()[0]`
//! is the first class.

use rand::seq::SliceRandom;

use crate::graph::Graph;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredColoring {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl LayeredColoring {
    /// Builds a coloring from a class index per vertex. Empty classes are
    /// dropped and the remaining ones renumbered in order.
    pub fn from_class_indices(class_of: &[usize]) -> Self {
        let m = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); m];
        for (v, &c) in class_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        let mut class_of = vec![0; class_of.len()];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                class_of[v] = i;
            }
        }
        LayeredColoring { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_indices(&self) -> &[usize] {
        &self.class_of
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.class_of[u] != self.class_of[v])
    }

    /// Every vertex of a later class has a neighbor in each earlier class.
    pub fn is_normalized(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| first_gap(g, &self.class_of, v).is_none())
    }
}

/// Smallest class below `v`'s own class in which `v` has no neighbor.
fn first_gap(g: &Graph, class_of: &[usize], v: usize) -> Option<usize> {
    let own = class_of[v];
    if own == 0 {
        return None;
    }
    let mut present = vec![false; own];
    for &u in g.neighbors(v) {
        if class_of[u] < own {
            present[class_of[u]] = true;
        }
    }
    present.iter().position(|&p| !p)
}

/// First-fit coloring in index order: each vertex takes the smallest class
/// not used by an already-colored neighbor. Uses at most `Δ + 1` classes.
pub fn greedy_proper_coloring(g: &Graph) -> LayeredColoring {
    let order: Vec<usize> = (0..g.n()).collect();
    greedy_in_order(g, &order)
}

/// First-fit coloring visiting vertices in `order` (a permutation of `0..n`).
pub fn greedy_in_order(g: &Graph, order: &[usize]) -> LayeredColoring {
    const UNSET: usize = usize::MAX;
    let mut class_of = vec![UNSET; g.n()];
    let mut taken = vec![false; g.max_degree() + 1];
    for &v in order {
        for &u in g.neighbors(v) {
            if class_of[u] != UNSET {
                taken[class_of[u]] = true;
            }
        }
        class_of[v] = taken.iter().position(|&t| !t).unwrap();
        for &u in g.neighbors(v) {
            if class_of[u] != UNSET {
                taken[class_of[u]] = false;
            }
        }
    }
    LayeredColoring::from_class_indices(&class_of)
}

/// First-fit coloring in a seeded random vertex order.
pub fn greedy_random_order(g: &Graph, seed: u64) -> LayeredColoring {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut rng::seeded(seed));
    greedy_in_order(g, &order)
}

/// Moves vertices down into the lowest earlier class where they have no
/// neighbor until no such move exists, dropping classes that empty out.
///
/// `lc` must be a proper coloring of `g`; the result is proper, normalized
/// and has no more classes than `lc`.
pub fn normalize(g: &Graph, lc: &LayeredColoring) -> LayeredColoring {
    let mut current = lc.clone();
    'restart: loop {
        for class in 0..current.class_count() {
            for &v in &current.classes[class] {
                if let Some(target) = first_gap(g, &current.class_of, v) {
                    let mut class_of = current.class_of.clone();
                    class_of[v] = target;
                    current = LayeredColoring::from_class_indices(&class_of);
                    continue 'restart;
                }
            }
        }
        return current;
    }
}

/// Largest number of neighbors any vertex has inside a single class.
pub fn class_degree_max(g: &Graph, lc: &LayeredColoring) -> usize {
    let mut count = vec![0usize; lc.class_count()];
    let mut best = 0;
    for v in 0..g.n() {
        for &u in g.neighbors(v) {
            let c = lc.class_of[u];
            count[c] += 1;
            best = best.max(count[c]);
        }
        for &u in g.neighbors(v) {
            count[lc.class_of[u]] = 0;
        }
    }
    best
}

/// Vertex with the largest single-class neighbor count, with that count.
pub fn class_degree_argmax(g: &Graph, lc: &LayeredColoring) -> Option<(usize, usize)> {
    (0..g.n())
        .map(|v| {
            let mut count = vec![0usize; lc.class_count()];
            for &u in g.neighbors(v) {
                count[lc.class_of[u]] += 1;
            }
            (v, count.into_iter().max().unwrap_or(0))
        })
        .max_by_key(|&(v, c)| (c, std::cmp::Reverse(v)))
}

/// The first class, the next `threshold` classes, and everything after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriPartition {
    pub first: Vec<usize>,
    pub middle: Vec<usize>,
    pub rest: Vec<usize>,
    pub threshold: usize,
}

/// Splits a layered coloring with `m` classes into `C_1`, `C_2..C_{t+1}`
/// and `C_{t+2}..C_m`, where `t = threshold`. The last part is empty unless
/// there are more than `t` classes after the first.
pub fn partition_v123(lc: &LayeredColoring, threshold: usize) -> TriPartition {
    assert!(threshold >= 1, "threshold must be positive");
    let classes = lc.classes();
    let gather = |range: std::ops::Range<usize>| -> Vec<usize> {
        let mut v: Vec<usize> = classes[range].iter().flatten().copied().collect();
        v.sort_unstable();
        v
    };
    let m = classes.len();
    let split = (threshold + 1).min(m);
    TriPartition {
        first: gather(0..m.min(1)),
        middle: gather(m.min(1)..split),
        rest: gather(split..m),
        threshold,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn greedy_examples() {
        let k3 = greedy_proper_coloring(&complete(3));
        assert_eq!(k3.classes(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(greedy_proper_coloring(&Graph::empty(5)).class_count(), 1);
        // C_5 in index order: 0->0, 1->1, 2->0, 3->1, 4 sees 0 and 1 -> 2
        let c5 = greedy_proper_coloring(&cycle(5).unwrap());
        assert_eq!(c5.class_indices(), &[0, 1, 0, 1, 2]);
    }

    #[test]
    fn normalize_examples() {
        let g = path(2);
        let lc = greedy_proper_coloring(&g);
        assert_eq!(normalize(&g, &lc), lc);
        assert_eq!(lc.classes(), &[vec![0], vec![1]]);

        // star K_{1,4} in index order puts the hub first; force leaves first
        let s = star(4);
        let lc = LayeredColoring::from_class_indices(&[1, 0, 0, 0, 0]);
        assert!(lc.is_normalized(&s));
        assert_eq!(normalize(&s, &lc), lc);
    }

    #[test]
    fn normalize_moves_and_compacts() {
        // path 0-1-2 with 2 alone in a third class: 2 has no neighbor in class 0
        let g = path(3);
        let lc = LayeredColoring::from_class_indices(&[0, 1, 2]);
        assert!(!lc.is_normalized(&g));
        let n = normalize(&g, &lc);
        assert_eq!(n.class_indices(), &[0, 1, 0]);
        assert!(n.is_proper(&g) && n.is_normalized(&g));

        // an isolated vertex sitting alone in a late class collapses the class
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let lc = LayeredColoring::from_class_indices(&[0, 1, 2]);
        assert_eq!(normalize(&g, &lc).class_count(), 2);
    }

    #[test]
    fn class_degree_examples() {
        let s = star(3);
        let leaves_first = LayeredColoring::from_class_indices(&[1, 0, 0, 0]);
        assert_eq!(class_degree_max(&s, &leaves_first), 3);
        assert_eq!(class_degree_argmax(&s, &leaves_first), Some((0, 3)));
        let e = Graph::empty(4);
        assert_eq!(class_degree_max(&e, &greedy_proper_coloring(&e)), 0);
        let l = line_complete(5).unwrap();
        assert!(class_degree_max(&l, &greedy_proper_coloring(&l)) <= 2);
    }

    #[test]
    fn partition_examples() {
        let lc = LayeredColoring::from_class_indices(&[0, 1, 2, 2]);
        let p = partition_v123(&lc, 4096);
        assert_eq!(
            (p.first, p.middle, p.rest),
            (vec![0], vec![1, 2, 3], vec![])
        );

        // r + 3 classes with r = 2: the last two classes form the rest
        let lc = LayeredColoring::from_class_indices(&[0, 1, 2, 3, 4]);
        let p = partition_v123(&lc, 2);
        assert_eq!(
            (p.first, p.middle, p.rest),
            (vec![0], vec![1, 2], vec![3, 4])
        );

        let lc = LayeredColoring::from_class_indices(&[0, 0]);
        let p = partition_v123(&lc, 3);
        assert_eq!((p.first.len(), p.middle.len(), p.rest.len()), (2, 0, 0));
    }
}
