//! Reproducible experiment suites producing plain-text tables.
//!
//! - `lkn`: pipeline palettes on line graphs of `K_4..K_8`, with exact CFON
//!   numbers where the oracle can reach them.
//! - `inequality`: exact CFON and CFCN numbers of all connected graphs on
//!   2 to 6 vertices.
//! - `resample`: resample counts on windowed hypergraphs for several scaled
//!   size floors and palettes.
//!
//! The `wall_ms` column is informational; everything else is a function of
//! the suite name and seed.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::graph::generators::line_complete;
use crate::hypergraph::Hypergraph;
use crate::oracle::{connected_graphs, exact_cfon_number, sweep_inequality, DEFAULT_ORACLE_LIMIT};
use crate::pipeline::{cfon_color, PipelineOptions};
use crate::resampling::{moser_tardos_cf, windowed_hypergraph, ResampleParams};
use crate::{rng, verify};

pub const SUITES: [&str; 3] = ["lkn", "inequality", "resample"];

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteTable {
    pub name: String,
    pub seed: u64,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Every coloring produced by the suite passed its verifier.
    pub all_valid: bool,
}

impl SuiteTable {
    /// Rows with the `wall_ms` column removed.
    pub fn deterministic_rows(&self) -> Vec<Vec<String>> {
        let skip = self.columns.iter().position(|&c| c == "wall_ms");
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(i, _)| Some(i) != skip)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect()
    }

    /// The same table without the `wall_ms` column.
    pub fn without_timing(&self) -> SuiteTable {
        SuiteTable {
            columns: self
                .columns
                .iter()
                .copied()
                .filter(|&c| c != "wall_ms")
                .collect(),
            rows: self.deterministic_rows(),
            ..self.clone()
        }
    }

    /// Writes `<dir>/<name>.tsv` and returns the path.
    pub fn write_to(&self, dir: impl AsRef<Path>) -> Result<PathBuf> {
        std::fs::create_dir_all(&dir)?;
        let path = dir.as_ref().join(format!("{}.tsv", self.name));
        std::fs::write(&path, self.to_string())?;
        Ok(path)
    }
}

impl fmt::Display for SuiteTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# suite={} seed={} all_valid={}",
            self.name, self.seed, self.all_valid
        )?;
        writeln!(f, "{}", self.columns.join("\t"))?;
        for row in &self.rows {
            writeln!(f, "{}", row.join("\t"))?;
        }
        Ok(())
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteTable> {
    match name {
        "lkn" => lkn_suite(seed),
        "inequality" => inequality_suite(seed),
        "resample" => resample_suite(seed),
        other => Err(Error::UnknownSuite(other.to_owned())),
    }
}

fn lkn_suite(seed: u64) -> Result<SuiteTable> {
    let mut rows = Vec::new();
    let mut all_valid = true;
    for n in 4..=8 {
        let start = Instant::now();
        let g = line_complete(n)?;
        let opts = PipelineOptions {
            seed,
            ..Default::default()
        };
        let res = cfon_color(&g, 3, &opts)?;
        let valid = verify::cfon_violations(&g, &res.coloring.pairs).is_empty();
        all_valid &= valid;
        let exact = if g.n() <= DEFAULT_ORACLE_LIMIT {
            exact_cfon_number(&g, g.n())?.map_or("-".to_owned(), |q| q.to_string())
        } else {
            "-".to_owned()
        };
        rows.push(vec![
            format!("L(K_{n})"),
            g.n().to_string(),
            g.edge_count().to_string(),
            res.max_degree.to_string(),
            res.layered.class_count().to_string(),
            res.coloring.total_colors().to_string(),
            exact,
            valid.to_string(),
            start.elapsed().as_millis().to_string(),
        ]);
    }
    Ok(SuiteTable {
        name: "lkn".into(),
        seed,
        columns: vec![
            "instance",
            "n",
            "m",
            "max_degree",
            "classes",
            "palette",
            "exact_cfon",
            "valid",
            "wall_ms",
        ],
        rows,
        all_valid,
    })
}

fn inequality_suite(seed: u64) -> Result<SuiteTable> {
    let corpus: Vec<_> = (2..=6).flat_map(connected_graphs).collect();
    let report = sweep_inequality(&corpus)?;
    let rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.id.to_string(),
                r.n.to_string(),
                r.m.to_string(),
                r.cfon.to_string(),
                r.cfcn.to_string(),
                format!("{:.3}", r.ratio()),
            ]
        })
        .collect();
    Ok(SuiteTable {
        name: "inequality".into(),
        seed,
        columns: vec!["id", "n", "m", "cfon", "cfcn", "ratio"],
        rows,
        all_valid: report.violations().is_empty(),
    })
}

/// Edges, vertices, and the window stride of scaled resampling instances.
pub const SCALED_EDGES: usize = 50;
pub const SCALED_VERTICES: usize = 500;
pub const SCALED_STRIDE: usize = 10;

/// The pinned scaled instance: 50 edges of size 64 to 95 on 500 vertices,
/// each meeting at most 18 others.
pub fn scaled_corpus_instance(seed: u64) -> Hypergraph {
    windowed_hypergraph(SCALED_VERTICES, SCALED_EDGES, 64, 95, SCALED_STRIDE, seed)
        .expect("valid window parameters")
}

fn resample_suite(seed: u64) -> Result<SuiteTable> {
    const RUNS: u64 = 20;
    let mut rows = Vec::new();
    let mut all_valid = true;
    for floor in [8usize, 16, 32, 64] {
        let window = 2 * floor;
        let stride = window.div_ceil(10);
        let n = (SCALED_EDGES * stride).max(window);
        for factor in [1usize, 32] {
            let start = Instant::now();
            let mut counts = Vec::new();
            let mut gamma = 0;
            for run in 0..RUNS {
                let inst_seed = rng::substream(seed, run).next_u64();
                let h = windowed_hypergraph(n, SCALED_EDGES, floor, window, stride, inst_seed)?;
                gamma = gamma.max(h.max_edge_intersection_count());
                let params =
                    ResampleParams::scaled(floor, 2, h.max_edge_intersection_count() as u64)
                        .with_palette(factor * 2 * floor);
                match moser_tardos_cf(&h, &params, inst_seed, 100_000)?.success() {
                    Some(s) => {
                        all_valid &=
                            verify::hypergraph_cf_violations(&h, &s.coloring.to_dense()).is_empty();
                        counts.push(s.resamples);
                    }
                    None => all_valid = false,
                }
            }
            let mean = counts.iter().sum::<u64>() as f64 / counts.len().max(1) as f64;
            rows.push(vec![
                floor.to_string(),
                (factor * 2 * floor).to_string(),
                gamma.to_string(),
                format!("{}/{}", counts.len(), RUNS),
                format!("{mean:.2}"),
                counts.iter().max().map_or("-".into(), u64::to_string),
                start.elapsed().as_millis().to_string(),
            ]);
        }
    }
    Ok(SuiteTable {
        name: "resample".into(),
        seed,
        columns: vec![
            "floor",
            "palette",
            "gamma_max",
            "converged",
            "mean_resamples",
            "max_resamples",
            "wall_ms",
        ],
        rows,
        all_valid,
    })
}
