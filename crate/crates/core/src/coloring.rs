use std::collections::BTreeMap;

/// Colors `1..=palette_size` on a subset of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    domain: Vec<usize>,
    colors: Vec<Option<usize>>,
    palette_size: usize,
}

impl PartialColoring {
    /// `n` is the size of the vertex universe; `assignment` lists
    /// `(vertex, color)` pairs with colors starting at 1.
    pub fn new(
        n: usize,
        assignment: impl IntoIterator<Item = (usize, usize)>,
        palette_size: usize,
    ) -> Self {
        let mut colors = vec![None; n];
        let mut domain = Vec::new();
        for (v, c) in assignment {
            assert!(
                c >= 1 && c <= palette_size,
                "color {c} outside 1..={palette_size}"
            );
            assert!(colors[v].is_none(), "vertex {v} colored twice");
            colors[v] = Some(c);
            domain.push(v);
        }
        domain.sort_unstable();
        PartialColoring {
            domain,
            colors,
            palette_size,
        }
    }

    /// Sorted colored vertices.
    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors.get(v).copied().flatten()
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Dense color vector over the universe, `0` for uncolored vertices.
    pub fn to_dense(&self) -> Vec<usize> {
        self.colors.iter().map(|c| c.unwrap_or(0)).collect()
    }

    /// Relabels used colors onto `1..=colors_used()`, preserving their order,
    /// and shrinks the palette accordingly.
    pub fn compacted(&self) -> PartialColoring {
        let mut relabel = BTreeMap::new();
        for &c in self.colors.iter().flatten() {
            relabel.insert(c, 0);
        }
        for (i, slot) in relabel.values_mut().enumerate() {
            *slot = i + 1;
        }
        PartialColoring {
            domain: self.domain.clone(),
            colors: self.colors.iter().map(|c| c.map(|c| relabel[&c])).collect(),
            palette_size: relabel.len(),
        }
    }
}
