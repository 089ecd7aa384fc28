//! Conflict-free coloring of near-uniform hypergraphs by resampling.
//!
//! Every vertex draws a uniform color from a palette of `32 c r` colors,
//! where hyperedge sizes lie in `[r, c r]` and `r = max(4096, ⌈136 ln(16Γ)⌉)`
//! for edge-intersection degree `Γ`. An edge is *bad* when no vertex in it
//! has a color unique within the edge. While a bad edge exists, the
//! lowest-indexed one has all of its vertices recolored.
//!
//! With the full-size floor the bad-event probability is at most `1/(4Γ)`,
//! which is what makes resampling terminate. Scaled runs use a smaller
//! user-supplied floor; they are flagged as outside that guarantee.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::Rng as _;

use crate::coloring::PartialColoring;
use crate::error::{Condition, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng;

/// Minimum hyperedge size regardless of `Γ`.
pub const MIN_SIZE_FLOOR: usize = 1 << 12;

/// Colors per unit of `c r`.
pub const PALETTE_FACTOR: usize = 32;

/// `max(4096, ⌈136 ln(16Γ)⌉)`; `Γ = 0` gives 4096.
pub fn size_floor(gamma: u64) -> usize {
    if gamma == 0 {
        return MIN_SIZE_FLOOR;
    }
    let bound = (136.0 * (16.0 * gamma as f64).ln()).ceil() as usize;
    bound.max(MIN_SIZE_FLOOR)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMode {
    /// Floor computed from `Γ`, palette `32 c r`: the termination guarantee holds.
    Theorem,
    /// Caller-chosen floor or palette; no guarantee.
    Scaled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResampleParams {
    pub size_floor: usize,
    pub size_ratio: usize,
    pub gamma: u64,
    pub palette: usize,
    pub mode: ParamMode,
}

impl ResampleParams {
    pub fn theorem(gamma: u64, size_ratio: usize) -> Self {
        let floor = size_floor(gamma);
        ResampleParams {
            size_floor: floor,
            size_ratio,
            gamma,
            palette: PALETTE_FACTOR * size_ratio * floor,
            mode: ParamMode::Theorem,
        }
    }

    pub fn scaled(floor: usize, size_ratio: usize, gamma: u64) -> Self {
        ResampleParams {
            size_floor: floor,
            size_ratio,
            gamma,
            palette: PALETTE_FACTOR * size_ratio * floor,
            mode: ParamMode::Scaled,
        }
    }

    /// Replaces the palette; the result is always scaled.
    pub fn with_palette(mut self, palette: usize) -> Self {
        self.palette = palette;
        self.mode = ParamMode::Scaled;
        self
    }

    pub fn theorem_compliant(&self) -> bool {
        self.mode == ParamMode::Theorem
    }

    pub fn max_edge_size(&self) -> usize {
        self.size_ratio * self.size_floor
    }
}

/// True iff every color in `edge` appears at least twice.
pub fn is_bad_edge(edge: &[usize], colors: &[usize]) -> bool {
    let mut counts: HashMap<usize, u32> = HashMap::with_capacity(edge.len());
    for &v in edge {
        *counts.entry(colors[v]).or_insert(0) += 1;
    }
    !counts.values().any(|&c| c == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeoutReport {
    pub resamples: u64,
    pub residual_bad_edges: usize,
    pub palette: usize,
}

impl fmt::Display for TimeoutReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} bad edges left after {} resamples with {} colors",
            self.residual_bad_edges, self.resamples, self.palette
        )
    }
}

#[derive(Debug, Clone)]
pub struct ResampleSuccess {
    pub coloring: PartialColoring,
    pub resamples: u64,
    /// Edge index resampled at each step.
    pub transcript: Vec<usize>,
    pub theorem_compliant: bool,
}

#[derive(Debug, Clone)]
pub enum ResampleOutcome {
    Colored(ResampleSuccess),
    TimedOut(TimeoutReport),
}

impl ResampleOutcome {
    pub fn success(self) -> Option<ResampleSuccess> {
        match self {
            ResampleOutcome::Colored(s) => Some(s),
            ResampleOutcome::TimedOut(_) => None,
        }
    }
}

/// Default cap on edge resamples.
pub const DEFAULT_MAX_ROUNDS: u64 = 1_000_000;

/// Resamples bad edges until none remain or `max_rounds` resamples have been
/// spent. Edge sizes must lie in `[size_floor, size_ratio * size_floor]`.
pub fn moser_tardos_cf(
    h: &Hypergraph,
    params: &ResampleParams,
    seed: u64,
    max_rounds: u64,
) -> Result<ResampleOutcome> {
    if max_rounds == 0 {
        return Err(Error::InvalidArgument(
            "max_rounds must be at least 1".into(),
        ));
    }
    if params.palette == 0 {
        return Err(Error::InvalidArgument("palette must be positive".into()));
    }
    let (min, max) = (params.size_floor, params.max_edge_size());
    for (i, e) in h.edges().iter().enumerate() {
        if e.len() < min || e.len() > max {
            return Err(Error::Precondition {
                construction: "resampling coloring",
                condition: Condition::EdgeSize {
                    edge: i,
                    size: e.len(),
                    min,
                    max,
                },
            });
        }
    }

    let mut rng = rng::seeded(seed);
    let mut colors: Vec<usize> = (0..h.n())
        .map(|_| rng.gen_range(1..=params.palette))
        .collect();
    let incidence = h.incidence();
    let mut bad: BTreeSet<usize> = (0..h.edge_count())
        .filter(|&i| is_bad_edge(h.edge(i), &colors))
        .collect();

    let mut transcript = Vec::new();
    let mut resamples = 0u64;
    while let Some(&e) = bad.iter().next() {
        if resamples == max_rounds {
            return Ok(ResampleOutcome::TimedOut(TimeoutReport {
                resamples,
                residual_bad_edges: bad.len(),
                palette: params.palette,
            }));
        }
        for &v in h.edge(e) {
            colors[v] = rng.gen_range(1..=params.palette);
        }
        resamples += 1;
        transcript.push(e);
        let touched: BTreeSet<usize> = h
            .edge(e)
            .iter()
            .flat_map(|&v| incidence[v].iter().copied())
            .collect();
        for f in touched {
            if is_bad_edge(h.edge(f), &colors) {
                bad.insert(f);
            } else {
                bad.remove(&f);
            }
        }
    }

    Ok(ResampleOutcome::Colored(ResampleSuccess {
        coloring: PartialColoring::new(h.n(), colors.into_iter().enumerate(), params.palette),
        resamples,
        transcript,
        theorem_compliant: params.theorem_compliant(),
    }))
}

/// Monte-Carlo summary for one edge under uniform random coloring.
#[derive(Debug, Clone, PartialEq)]
pub struct CollisionStats {
    pub edge_size: usize,
    pub palette: usize,
    pub trials: u64,
    /// Mean number of vertices whose color repeats inside the edge.
    pub mean_x_e: f64,
    /// Standard error of `mean_x_e`.
    pub std_error: f64,
    /// Fraction of trials in which every vertex's color repeats.
    pub p_all_collide: f64,
}

impl fmt::Display for CollisionStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edge_size={} palette={} trials={} mean_x_e={:.6} std_error={:.6} p_all_collide={:.6} expected_x_e={:.6}",
            self.edge_size,
            self.palette,
            self.trials,
            self.mean_x_e,
            self.std_error,
            self.p_all_collide,
            expected_collisions(self.edge_size, self.palette)
        )
    }
}

/// `s (1 - (1 - 1/q)^(s - 1))`: expected number of vertices of an
/// `s`-vertex edge whose color repeats when `q` colors are drawn uniformly.
pub fn expected_collisions(edge_size: usize, palette: usize) -> f64 {
    if edge_size == 0 {
        return 0.0;
    }
    let s = edge_size as f64;
    let stay = (1.0 - 1.0 / palette as f64).powi(edge_size as i32 - 1);
    s * (1.0 - stay)
}

pub fn collision_statistics(
    edge_size: usize,
    palette: usize,
    trials: u64,
    seed: u64,
) -> Result<CollisionStats> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if palette == 0 {
        return Err(Error::InvalidArgument("palette must be positive".into()));
    }
    let mut rng = rng::seeded(seed);
    let mut counts = vec![0u32; palette + 1];
    let mut drawn = vec![0usize; edge_size];
    let (mut sum, mut sum_sq, mut all) = (0.0f64, 0.0f64, 0u64);
    for _ in 0..trials {
        for d in drawn.iter_mut() {
            *d = rng.gen_range(1..=palette);
            counts[*d] += 1;
        }
        let x = drawn.iter().filter(|&&c| counts[c] >= 2).count();
        for &d in &drawn {
            counts[d] = 0;
        }
        sum += x as f64;
        sum_sq += (x * x) as f64;
        if x == edge_size {
            all += 1;
        }
    }
    let t = trials as f64;
    let mean = sum / t;
    let var = if trials > 1 {
        (sum_sq - t * mean * mean).max(0.0) / (t - 1.0)
    } else {
        0.0
    };
    Ok(CollisionStats {
        edge_size,
        palette,
        trials,
        mean_x_e: mean,
        std_error: (var / t).sqrt(),
        p_all_collide: all as f64 / t,
    })
}

/// Random hypergraph with edges laid out along a cycle of `n` vertices:
/// edge `i` is a random subset of size `[floor, window]` of the window of
/// `window` consecutive vertices starting at `i * stride`. Edges more than
/// `⌈window / stride⌉ - 1` positions apart are disjoint, which bounds `Γ`.
pub fn windowed_hypergraph(
    n: usize,
    edges: usize,
    floor: usize,
    window: usize,
    stride: usize,
    seed: u64,
) -> Result<Hypergraph> {
    if floor == 0 || floor > window || window > n || stride == 0 {
        return Err(Error::InvalidArgument(format!(
            "need 0 < floor <= window <= n and stride > 0 (floor={floor}, window={window}, n={n}, stride={stride})"
        )));
    }
    let mut rng = rng::seeded(seed);
    let mut list = Vec::with_capacity(edges);
    for i in 0..edges {
        let start = i * stride;
        let size = rng.gen_range(floor..=window);
        let picked = rand::seq::index::sample(&mut rng, window, size);
        list.push(picked.into_iter().map(|o| (start + o) % n).collect());
    }
    Hypergraph::new(n, list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::hypergraph_cf_violations;

    #[test]
    fn size_floor_values() {
        // 136 ln 16 = 377.07
        assert_eq!(size_floor(1), 4096);
        assert_eq!(size_floor(0), 4096);
        // 136 ln 160000 = 1631.9
        assert_eq!(size_floor(100 * 100), 4096);
    }

    #[test]
    fn bad_edge_examples() {
        let colors = [1, 1, 2];
        assert!(is_bad_edge(&[0, 1], &colors));
        assert!(!is_bad_edge(&[0, 2], &colors));
        assert!(!is_bad_edge(&[0, 1, 2], &colors));
    }

    #[test]
    fn disjoint_edges_need_no_resampling() {
        let edges: Vec<Vec<usize>> = (0..4).map(|i| (i * 16..(i + 1) * 16).collect()).collect();
        let h = Hypergraph::new(64, edges).unwrap();
        let params = ResampleParams::scaled(16, 1, 0);
        for seed in 0..10 {
            let out = moser_tardos_cf(&h, &params, seed, 1000)
                .unwrap()
                .success()
                .unwrap();
            assert_eq!(out.resamples, 0);
            assert!(!out.theorem_compliant);
            assert!(hypergraph_cf_violations(&h, &out.coloring.to_dense()).is_empty());
        }
    }

    #[test]
    fn single_color_times_out() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let params = ResampleParams::scaled(2, 1, 0).with_palette(1);
        match moser_tardos_cf(&h, &params, 3, 50).unwrap() {
            ResampleOutcome::TimedOut(r) => {
                assert_eq!(r.resamples, 50);
                assert_eq!(r.residual_bad_edges, 2);
            }
            other => panic!("expected timeout, got {other:?}"),
        }
    }

    #[test]
    fn resampling_only_touches_the_chosen_edge() {
        // small palette forces resamples; replay the transcript and check
        // that each step changes colors only inside the resampled edge
        let h = windowed_hypergraph(40, 10, 3, 5, 4, 9).unwrap();
        let params = ResampleParams::scaled(3, 2, 0).with_palette(2);
        let out = moser_tardos_cf(&h, &params, 11, 10_000)
            .unwrap()
            .success()
            .unwrap();
        assert!(out.resamples > 0);
        let mut rng = rng::seeded(11);
        let mut colors: Vec<usize> = (0..h.n()).map(|_| rng.gen_range(1..=2)).collect();
        for &e in &out.transcript {
            let before = colors.clone();
            for &v in h.edge(e) {
                colors[v] = rng.gen_range(1..=2);
            }
            for v in 0..h.n() {
                if !h.edge(e).contains(&v) {
                    assert_eq!(before[v], colors[v]);
                }
            }
        }
        assert_eq!(colors, out.coloring.to_dense());
    }

    #[test]
    fn rejects_out_of_range_edges() {
        let h = Hypergraph::new(10, vec![(0..3).collect()]).unwrap();
        let params = ResampleParams::scaled(4, 2, 0);
        assert!(matches!(
            moser_tardos_cf(&h, &params, 0, 10),
            Err(Error::Precondition { .. })
        ));
        assert!(moser_tardos_cf(&h, &ResampleParams::scaled(2, 2, 0), 0, 0).is_err());
    }

    #[test]
    fn collision_two_by_two() {
        // X_E is 0 or 2 with probability 1/2 each
        let stats = collision_statistics(2, 2, 200_000, 5).unwrap();
        assert!((stats.mean_x_e - 1.0).abs() < 4.0 * stats.std_error + 1e-9);
        assert!((stats.p_all_collide - 0.5).abs() < 0.01);
        assert!((expected_collisions(2, 2) - 1.0).abs() < 1e-12);
        let wide = collision_statistics(2, 1_000_000, 10_000, 5).unwrap();
        assert!(wide.mean_x_e < 0.01);
    }

    #[test]
    fn stats_line_is_key_value() {
        let stats = collision_statistics(4, 8, 10, 1).unwrap();
        let line = stats.to_string();
        assert!(line.starts_with("edge_size=4 palette=8 trials=10 mean_x_e="));
        assert!(!line.contains('\n'));
    }
}
