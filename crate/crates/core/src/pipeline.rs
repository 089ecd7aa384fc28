//! CFON coloring of `K_{1,k}`-free graphs without isolated vertices.
//!
//! The construction, for a graph of maximum degree `Δ`:
//!
//! 1. Take a normalized layered proper coloring `C_1, C_2, ...`. Because the
//!    graph is `K_{1,k}`-free, no vertex has more than `k - 1` neighbors in
//!    a single class.
//! 2. With threshold `r = max(4096, ⌈136 ln(16Δ²)⌉)`, split the vertices
//!    into `first = C_1`, `middle = C_2..C_{r+1}` and `rest` (later classes).
//! 3. `f1` colors `first` so every `middle` vertex sees a unique `f1` color
//!    ([`contraction_color`]).
//! 4. `f2` colors `middle` so every `rest` vertex sees a unique `f2` color
//!    ([`moser_tardos_cf`] on the neighborhood hypergraph), or is constant
//!    when `rest` is empty.
//! 5. `f3` colors `middle ∪ rest` so every `first` vertex sees a unique `f3`
//!    color ([`neighborhood_cf_color`]).
//! 6. The final color is `(1, f1)` on `first`, `(f2, f3)` on `middle` and
//!    `(1, f3)` on `rest`, with `f1`, `f2`, `f3` drawn from disjoint ranges.

use std::collections::{BTreeSet, HashMap};
use std::ops::RangeInclusive;

use crate::coloring::PartialColoring;
use crate::contraction::{contraction_color, NeighborBounds};
use crate::decomposition::{
    class_degree_argmax, greedy_proper_coloring, normalize, partition_v123, LayeredColoring,
    TriPartition,
};
use crate::degree_colorer::neighborhood_cf_color;
use crate::error::{Condition, Error, Result};
use crate::graph::{find_induced_star, Graph};
use crate::hypergraph::neighborhood_hypergraph;
use crate::resampling::{
    moser_tardos_cf, size_floor, ParamMode, ResampleOutcome, ResampleParams, DEFAULT_MAX_ROUNDS,
    PALETTE_FACTOR,
};
use crate::rng::DEFAULT_SEED;
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Worst-case palette sizes and neighbor bounds.
    Theorem,
    /// Palettes and bounds measured from the instance.
    Tight,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(Mode::Theorem),
            "tight" => Ok(Mode::Tight),
            other => Err(Error::InvalidArgument(format!("unknown mode {other:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Theorem => "theorem",
            Mode::Tight => "tight",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub mode: Mode,
    /// Replaces the computed threshold `r`; results are flagged as scaled.
    pub threshold_override: Option<usize>,
    pub seed: u64,
    pub max_rounds: u64,
    /// Compute `Γ` exactly instead of using `Δ²`.
    pub exact_gamma: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            mode: Mode::Tight,
            threshold_override: None,
            seed: DEFAULT_SEED,
            max_rounds: DEFAULT_MAX_ROUNDS,
            exact_gamma: true,
        }
    }
}

/// Sizes of the three disjoint integer palettes, laid out consecutively
/// starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PaletteLayout {
    pub first_size: usize,
    pub middle_size: usize,
    pub refine_size: usize,
}

impl PaletteLayout {
    /// `(k-1)(k-2)r + k`, `32(k-1)r`, `k`.
    pub fn theorem(k: usize, r: usize) -> Self {
        PaletteLayout {
            first_size: (k - 1) * (k - 2) * r + k,
            middle_size: PALETTE_FACTOR * (k - 1) * r,
            refine_size: k,
        }
    }

    pub fn first(&self) -> RangeInclusive<usize> {
        1..=self.first_size
    }

    pub fn middle(&self) -> RangeInclusive<usize> {
        self.first_size + 1..=self.first_size + self.middle_size
    }

    pub fn refine(&self) -> RangeInclusive<usize> {
        let start = self.first_size + self.middle_size + 1;
        start..=start + self.refine_size - 1
    }

    /// Most pairs the layout can produce: `r1 + r2 r3 + r3`.
    pub fn pair_bound(&self) -> usize {
        self.first_size + self.middle_size * self.refine_size + self.refine_size
    }
}

/// Upper bound on the number of colors for `K_{1,k}`-free graphs at
/// threshold `r`: `(k-1)(k-2)r + k + 32(k-1)kr + k`.
pub fn theorem_color_bound(k: u64, r: u64) -> u64 {
    (k - 1) * (k - 2) * r + k + PALETTE_FACTOR as u64 * (k - 1) * k * r + k
}

pub type PairColor = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductColoring {
    pub pairs: Vec<PairColor>,
    pub layout: PaletteLayout,
}

impl ProductColoring {
    /// Number of distinct pairs used.
    pub fn total_colors(&self) -> usize {
        self.pairs.iter().collect::<BTreeSet<_>>().len()
    }

    /// Flattens pairs to `1..=total_colors()` in pair order. Returns the
    /// per-vertex colors and the table mapping flat color `i + 1` to pair `i`.
    pub fn flatten(&self) -> (Vec<usize>, Vec<PairColor>) {
        let table: Vec<PairColor> = self
            .pairs
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<PairColor, usize> =
            table.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
        (self.pairs.iter().map(|p| index[p]).collect(), table)
    }
}

/// For every vertex, a neighbor whose color occurs exactly once in the
/// vertex's (open or closed) neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub witness: Vec<usize>,
}

impl Certificate {
    /// Builds witnesses for an open (`closed = false`) or closed
    /// neighborhood coloring. Fails with the first vertex lacking one.
    pub fn build<C: Eq + std::hash::Hash>(
        g: &Graph,
        colors: &[C],
        closed: bool,
    ) -> std::result::Result<Self, usize> {
        let mut witness = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let nbhd: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .chain(closed.then_some(v))
                .collect();
            let mut counts: HashMap<&C, usize> = HashMap::new();
            for &u in &nbhd {
                *counts.entry(&colors[u]).or_insert(0) += 1;
            }
            match nbhd.iter().copied().find(|&u| counts[&colors[u]] == 1) {
                Some(u) => witness.push(u),
                None => return Err(v),
            }
        }
        Ok(Certificate { witness })
    }

    /// Checks every witness against the graph and coloring. Returns the
    /// vertices whose witness is wrong.
    pub fn check<C: Eq>(&self, g: &Graph, colors: &[C], closed: bool) -> Vec<usize> {
        (0..g.n())
            .filter(|&v| {
                let Some(&w) = self.witness.get(v) else {
                    return true;
                };
                let in_nbhd = g.has_edge(v, w) || (closed && w == v);
                let seen = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .chain(closed.then_some(v))
                    .filter(|&u| colors[u] == colors[w])
                    .count();
                !(in_nbhd && seen == 1)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResampleSummary {
    pub edges: usize,
    pub gamma: u64,
    pub size_floor: usize,
    pub size_ratio: usize,
    pub palette: usize,
    pub resamples: u64,
}

#[derive(Debug, Clone)]
pub struct CfonResult {
    pub coloring: ProductColoring,
    pub certificate: Certificate,
    pub partition: TriPartition,
    pub layered: LayeredColoring,
    pub k: usize,
    pub max_degree: usize,
    pub threshold: usize,
    pub mode: Mode,
    /// True when the threshold was overridden.
    pub scaled: bool,
    pub resample: Option<ResampleSummary>,
}

impl CfonResult {
    pub fn theorem_compliant(&self) -> bool {
        !self.scaled
    }
}

fn check_hypotheses(g: &Graph, k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(Error::IsolatedVertices(isolated));
    }
    if let Some(witness) = find_induced_star(g, k) {
        return Err(Error::NotStarFree { k, witness });
    }
    Ok(())
}

/// Computes a verified CFON coloring of a `K_{1,k}`-free graph with no
/// isolated vertices, `k >= 3`.
pub fn cfon_color(g: &Graph, k: usize, opts: &PipelineOptions) -> Result<CfonResult> {
    check_hypotheses(g, k)?;

    let layered = normalize(g, &greedy_proper_coloring(g));
    if let Some((vertex, found)) = class_degree_argmax(g, &layered).filter(|&(_, c)| c > k - 1) {
        return Err(Error::Precondition {
            construction: "layered coloring",
            condition: Condition::ClassDegree {
                vertex,
                found,
                bound: k - 1,
            },
        });
    }

    let max_degree = g.max_degree();
    let delta_sq = (max_degree as u64).pow(2);
    let threshold = opts
        .threshold_override
        .unwrap_or_else(|| size_floor(delta_sq));
    if threshold == 0 {
        return Err(Error::InvalidArgument("threshold must be positive".into()));
    }
    let partition = partition_v123(&layered, threshold);
    let theorem = PaletteLayout::theorem(k, threshold);

    let bounds = match opts.mode {
        Mode::Theorem => Some(NeighborBounds {
            d_x: k - 1,
            d_y: threshold * (k - 1),
        }),
        Mode::Tight => None,
    };
    let f1 = contraction_color(g, &partition.first, &partition.middle, bounds)?.coloring;

    let (f2, resample) = middle_coloring(g, k, &partition, threshold, delta_sq, opts)?;

    let covered: Vec<usize> = partition
        .middle
        .iter()
        .chain(&partition.rest)
        .copied()
        .collect();
    let mut f3 = neighborhood_cf_color(g, &partition.first, &covered)?.coloring;

    let layout = match opts.mode {
        Mode::Theorem => theorem,
        Mode::Tight => {
            f3 = f3.compacted();
            PaletteLayout {
                first_size: f1.palette_size(),
                middle_size: f2.palette_size(),
                refine_size: f3.palette_size(),
            }
        }
    };
    for (name, used, budget) in [
        ("first", f1.palette_size(), theorem.first_size),
        ("middle", f2.palette_size(), theorem.middle_size),
        ("refine", f3.palette_size(), theorem.refine_size),
    ] {
        if used > budget {
            return Err(Error::Internal(format!(
                "{name} palette {used} exceeds {budget}"
            )));
        }
    }

    let middle_base = layout.first_size;
    let refine_base = layout.first_size + layout.middle_size;
    let mut pairs = vec![(0, 0); g.n()];
    for &v in &partition.first {
        pairs[v] = (1, f1.color(v).unwrap());
    }
    for &v in &partition.middle {
        pairs[v] = (
            middle_base + f2.color(v).unwrap(),
            refine_base + f3.color(v).unwrap(),
        );
    }
    for &v in &partition.rest {
        pairs[v] = (1, refine_base + f3.color(v).unwrap());
    }

    let violations = verify::cfon_violations(g, &pairs);
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "CFON verification failed at {violations:?}"
        )));
    }
    let certificate = Certificate::build(g, &pairs, false)
        .map_err(|v| Error::Internal(format!("no witness for vertex {v}")))?;

    Ok(CfonResult {
        coloring: ProductColoring { pairs, layout },
        certificate,
        partition,
        layered,
        k,
        max_degree,
        threshold,
        mode: opts.mode,
        scaled: opts.threshold_override.is_some(),
        resample,
    })
}

/// `f2` on the middle vertices: constant when nothing lies beyond the
/// threshold, otherwise a resampled conflict-free coloring of the
/// neighborhoods of the remaining vertices.
fn middle_coloring(
    g: &Graph,
    k: usize,
    partition: &TriPartition,
    threshold: usize,
    delta_sq: u64,
    opts: &PipelineOptions,
) -> Result<(PartialColoring, Option<ResampleSummary>)> {
    let theorem_palette = PALETTE_FACTOR * (k - 1) * threshold;
    if partition.rest.is_empty() {
        let palette = match opts.mode {
            Mode::Theorem => theorem_palette,
            Mode::Tight => 1,
        };
        let f2 = PartialColoring::new(g.n(), partition.middle.iter().map(|&v| (v, 1)), palette);
        return Ok((f2, None));
    }

    let nh = neighborhood_hypergraph(g, &partition.rest, &partition.middle)?;
    let gamma = if opts.exact_gamma {
        nh.hypergraph.max_edge_intersection_count() as u64
    } else {
        delta_sq
    };
    let params = ResampleParams {
        size_floor: threshold,
        size_ratio: k - 1,
        gamma,
        palette: theorem_palette,
        mode: if opts.threshold_override.is_some() {
            ParamMode::Scaled
        } else {
            ParamMode::Theorem
        },
    };
    let success = match moser_tardos_cf(&nh.hypergraph, &params, opts.seed, opts.max_rounds)? {
        ResampleOutcome::Colored(s) => s,
        ResampleOutcome::TimedOut(report) => return Err(Error::ResampleTimeout(report)),
    };

    // vertices in no hyperedge are unconstrained and take the smallest color
    let mut covered = vec![false; nh.targets.len()];
    for e in nh.hypergraph.edges() {
        for &i in e {
            covered[i] = true;
        }
    }
    let assignment = nh.targets.iter().enumerate().map(|(i, &v)| {
        let c = if covered[i] {
            success.coloring.color(i).unwrap()
        } else {
            1
        };
        (v, c)
    });
    let mut f2 = PartialColoring::new(g.n(), assignment, theorem_palette);
    if opts.mode == Mode::Tight {
        f2 = f2.compacted();
    }
    let summary = ResampleSummary {
        edges: nh.hypergraph.edge_count(),
        gamma,
        size_floor: threshold,
        size_ratio: k - 1,
        palette: theorem_palette,
        resamples: success.resamples,
    };
    Ok((f2, Some(summary)))
}

/// A CFCN coloring built from a CFON coloring.
#[derive(Debug, Clone)]
pub struct CfcnResult {
    /// Flat colors `1..=palette`.
    pub colors: Vec<usize>,
    pub palette: usize,
    pub certificate: Certificate,
    /// Pipeline result on the graph without its isolated vertices, if any
    /// vertex has a neighbor. Vertex `i` there is `kept[i]` here.
    pub cfon: Option<CfonResult>,
    pub kept: Vec<usize>,
}

/// CFCN coloring of a `K_{1,k}`-free graph that may have isolated vertices.
///
/// The non-isolated part gets its CFON pair colors refined by the layered
/// proper coloring: a neighbor seen exactly once stays unique in the closed
/// neighborhood because it is in a different class from the vertex itself.
/// Isolated vertices share one extra color.
pub fn cfcn_color(g: &Graph, k: usize, opts: &PipelineOptions) -> Result<CfcnResult> {
    let kept: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let sub = g.induced_subgraph(&kept)?;
    let cfon = if kept.is_empty() {
        None
    } else {
        Some(cfon_color(&sub, k, opts)?)
    };

    let mut keys: Vec<Option<(PairColor, usize)>> = vec![None; g.n()];
    if let Some(res) = &cfon {
        for (i, &v) in kept.iter().enumerate() {
            keys[v] = Some((res.coloring.pairs[i], res.layered.class_of(i)));
        }
    }
    let distinct: BTreeSet<(PairColor, usize)> = keys.iter().flatten().copied().collect();
    let index: HashMap<(PairColor, usize), usize> = distinct
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i + 1))
        .collect();
    let isolated_color = distinct.len() + 1;
    let colors: Vec<usize> = keys
        .iter()
        .map(|key| key.map_or(isolated_color, |p| index[&p]))
        .collect();
    let palette = *colors.iter().max().unwrap_or(&0);

    let violations = verify::cfcn_violations(g, &colors);
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "CFCN verification failed at {violations:?}"
        )));
    }
    let certificate = Certificate::build(g, &colors, true)
        .map_err(|v| Error::Internal(format!("no witness for vertex {v}")))?;
    Ok(CfcnResult {
        colors,
        palette,
        certificate,
        cfon,
        kept,
    })
}
