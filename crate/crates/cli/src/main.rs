mod record;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use cfcolor::bench::{run_suite, SUITES};
use cfcolor::graph::generators;
use cfcolor::graph::io::{emit, read_graph, Format, LabeledGraph};
use cfcolor::oracle::{exact_cf_number, Neighborhood, DEFAULT_ORACLE_LIMIT};
use cfcolor::pipeline::{cfcn_color, cfon_color, Mode, PipelineOptions};
use cfcolor::resampling::{
    collision_statistics, moser_tardos_cf, windowed_hypergraph, ResampleOutcome, ResampleParams,
};
use cfcolor::rng::DEFAULT_SEED;
use cfcolor::{find_induced_star, verify, Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};

use record::{ColoringRecord, VertexLine};

#[derive(Parser)]
#[command(
    name = "cfcolor",
    version,
    about = "Conflict-free neighborhood coloring of K_{1,k}-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
    Star,
    Gnp,
    LineComplete,
    LineGnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    /// Edge list, or DIMACS when the graph has isolated vertices.
    Auto,
    EdgeList,
    Dimacs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Nbhd {
    Open,
    Closed,
}

impl From<Nbhd> for Neighborhood {
    fn from(n: Nbhd) -> Self {
        match n {
            Nbhd::Open => Neighborhood::Open,
            Nbhd::Closed => Neighborhood::Closed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Theorem,
    Tight,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertex count (for `star`, the number of leaves).
        #[arg(long)]
        n: usize,
        /// Edge probability for random families.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, env = "CFCOLOR_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "auto")]
        format: FileFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Look for an induced K_{1,k}.
    Detect {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Color a K_{1,k}-free graph and write a coloring record.
    Color {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value = "tight")]
        mode: ModeArg,
        /// Override the class-count threshold (marks the result as scaled).
        #[arg(long)]
        r_test: Option<usize>,
        #[arg(long, env = "CFCOLOR_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Produce a closed-neighborhood coloring; isolated vertices allowed.
        #[arg(long)]
        closed: bool,
        #[arg(long, default_value_t = cfcolor::resampling::DEFAULT_MAX_ROUNDS)]
        max_rounds: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Verify a coloring record against a graph.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(value_enum, default_value = "open")]
        neighborhood: Nbhd,
    },
    /// Exact conflict-free chromatic number of a small graph.
    Exact {
        graph: PathBuf,
        #[arg(value_enum, default_value = "open")]
        neighborhood: Nbhd,
        #[arg(long, default_value_t = 8)]
        max_colors: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
    /// Run resampling on a random windowed hypergraph.
    LllDemo {
        #[arg(long, default_value_t = 500)]
        vertices: usize,
        #[arg(long, default_value_t = 50)]
        edges: usize,
        /// Smallest edge size.
        #[arg(long, default_value_t = 64)]
        floor: usize,
        /// Window width; edge sizes lie in `floor..=window`.
        #[arg(long, default_value_t = 95)]
        window: usize,
        #[arg(long, default_value_t = 10)]
        stride: usize,
        /// Edge sizes may be up to `ratio * floor`.
        #[arg(long, default_value_t = 2)]
        ratio: usize,
        #[arg(long)]
        palette: Option<usize>,
        #[arg(long, env = "CFCOLOR_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        max_rounds: u64,
    },
    /// Monte-Carlo collision statistics for one edge.
    Stats {
        #[arg(long)]
        edge_size: usize,
        #[arg(long)]
        palette: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, env = "CFCOLOR_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run experiment suites and write one table per suite.
    Bench {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, env = "CFCOLOR_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "results")]
        out: PathBuf,
        /// Keep the informational `wall_ms` column.
        #[arg(long)]
        timing: bool,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Invalid,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Invalid) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    let Some(err) = e.chain().find_map(|c| c.downcast_ref::<Error>()) else {
        return 2;
    };
    match err {
        Error::IsolatedVertices(_) | Error::NotStarFree { .. } | Error::Precondition { .. } => 3,
        Error::ResampleTimeout(_) => 4,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load(path: &Path) -> anyhow::Result<LabeledGraph> {
    read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn run(command: Command) -> anyhow::Result<Status> {
    match command {
        Command::Gen {
            family,
            n,
            p,
            seed,
            format,
            output,
        } => {
            let g = generate(family, n, p, seed)?;
            let format = match format {
                FileFormat::Auto if g.isolated_vertices().is_empty() && g.edge_count() > 0 => {
                    Format::EdgeList
                }
                FileFormat::Auto | FileFormat::Dimacs => Format::Dimacs,
                FileFormat::EdgeList => {
                    if !g.isolated_vertices().is_empty() {
                        return Err(anyhow!(
                            "edge lists cannot hold isolated vertices; use --format dimacs"
                        ));
                    }
                    Format::EdgeList
                }
            };
            let comment = if format == Format::Dimacs { "c" } else { "#" };
            let text = format!("{comment} seed={seed}\n{}", emit(&g, format));
            write_output(output.as_deref(), &text)?;
            Ok(Status::Ok)
        }

        Command::Detect { graph, k } => {
            if k < 2 {
                return Err(Error::InvalidArgument("k must be at least 2".into()).into());
            }
            let lg = load(&graph)?;
            match find_induced_star(&lg.graph, k) {
                None => println!("K_1,{k}-free: yes"),
                Some(w) => {
                    let leaves: Vec<&str> =
                        w.leaves.iter().map(|&l| lg.labels[l].as_str()).collect();
                    println!("K_1,{k}-free: no");
                    println!("center {}", lg.labels[w.center]);
                    println!("leaves {}", leaves.join(" "));
                }
            }
            Ok(Status::Ok)
        }

        Command::Color {
            graph,
            k,
            mode,
            r_test,
            seed,
            closed,
            max_rounds,
            output,
        } => {
            let lg = load(&graph)?;
            let opts = PipelineOptions {
                mode: match mode {
                    ModeArg::Theorem => Mode::Theorem,
                    ModeArg::Tight => Mode::Tight,
                },
                threshold_override: r_test,
                seed,
                max_rounds,
                ..Default::default()
            };
            let rec = if closed {
                color_closed(&lg, k, &opts)?
            } else {
                color_open(&lg, k, &opts)?
            };
            write_output(output.as_deref(), &rec.render())?;
            Ok(Status::Ok)
        }

        Command::Check {
            graph,
            coloring,
            neighborhood,
        } => {
            let lg = load(&graph)?;
            let text = std::fs::read_to_string(&coloring)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let rec = ColoringRecord::parse(&text)
                .with_context(|| format!("parsing {}", coloring.display()))?;
            let colors = rec.colors_for(&lg.labels)?;
            let violators = match neighborhood {
                Nbhd::Open => verify::cfon_violations(&lg.graph, &colors),
                Nbhd::Closed => verify::cfcn_violations(&lg.graph, &colors),
            };
            if violators.is_empty() {
                println!("valid");
                Ok(Status::Ok)
            } else {
                println!("invalid: {} violators", violators.len());
                for v in violators {
                    println!("violator {}", lg.labels[v]);
                }
                Ok(Status::Invalid)
            }
        }

        Command::Exact {
            graph,
            neighborhood,
            max_colors,
            limit,
        } => {
            let lg = load(&graph)?;
            match exact_cf_number(&lg.graph, neighborhood.into(), max_colors, limit)? {
                Some((q, _)) => println!("{q}"),
                None => println!("more than {max_colors}"),
            }
            Ok(Status::Ok)
        }

        Command::LllDemo {
            vertices,
            edges,
            floor,
            window,
            stride,
            ratio,
            palette,
            seed,
            max_rounds,
        } => {
            let h = windowed_hypergraph(vertices, edges, floor, window, stride, seed)?;
            let gamma = h.max_edge_intersection_count() as u64;
            let mut params = ResampleParams::scaled(floor, ratio, gamma);
            if let Some(q) = palette {
                params = params.with_palette(q);
            }
            println!("seed={seed}");
            println!(
                "vertices={} edges={} min_edge={} max_edge={} gamma={gamma}",
                h.n(),
                h.edge_count(),
                h.min_edge_size().unwrap_or(0),
                h.max_edge_size().unwrap_or(0)
            );
            println!("floor={floor} ratio={ratio} palette={}", params.palette);
            match moser_tardos_cf(&h, &params, seed, max_rounds)? {
                ResampleOutcome::Colored(s) => {
                    let valid =
                        verify::hypergraph_cf_violations(&h, &s.coloring.to_dense()).is_empty();
                    println!("resamples={}", s.resamples);
                    println!("colors_used={}", s.coloring.colors_used());
                    println!("theorem_compliant={}", s.theorem_compliant);
                    let head: Vec<String> =
                        s.transcript.iter().take(20).map(usize::to_string).collect();
                    println!("transcript_head={}", head.join(","));
                    println!("valid={valid}");
                    Ok(if valid { Status::Ok } else { Status::Invalid })
                }
                ResampleOutcome::TimedOut(report) => Err(Error::ResampleTimeout(report).into()),
            }
        }

        Command::Stats {
            edge_size,
            palette,
            trials,
            seed,
        } => {
            let stats = collision_statistics(edge_size, palette, trials, seed)?;
            println!("seed={seed} {stats}");
            Ok(Status::Ok)
        }

        Command::Bench {
            suite,
            seed,
            out,
            timing,
        } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut all_valid = true;
            for name in names {
                let mut table = run_suite(name, seed)?;
                if !timing {
                    table = table.without_timing();
                }
                let path = table.write_to(&out)?;
                println!(
                    "{name}: {} rows, all_valid={} -> {}",
                    table.rows.len(),
                    table.all_valid,
                    path.display()
                );
                all_valid &= table.all_valid;
            }
            Ok(if all_valid {
                Status::Ok
            } else {
                Status::Invalid
            })
        }
    }
}

fn generate(family: Family, n: usize, p: f64, seed: u64) -> anyhow::Result<Graph> {
    Ok(match family {
        Family::Complete => generators::complete(n),
        Family::Path => generators::path(n),
        Family::Cycle => generators::cycle(n)?,
        Family::Star => generators::star(n),
        Family::Gnp => generators::gnp_random(n, p, seed)?,
        Family::LineComplete => generators::line_complete(n)?,
        Family::LineGnp => generators::random_line_graph(n, p, seed)?,
    })
}

fn color_open(
    lg: &LabeledGraph,
    k: usize,
    opts: &PipelineOptions,
) -> anyhow::Result<ColoringRecord> {
    let res = cfon_color(&lg.graph, k, opts)?;
    let (flat, _) = res.coloring.flatten();
    let layout = res.coloring.layout;
    let mut metadata = vec![
        ("seed".to_owned(), opts.seed.to_string()),
        ("neighborhood".into(), "open".into()),
        ("mode".into(), res.mode.to_string()),
        ("k".into(), k.to_string()),
        ("max_degree".into(), res.max_degree.to_string()),
        ("classes".into(), res.layered.class_count().to_string()),
        ("threshold".into(), res.threshold.to_string()),
        ("scaled".into(), res.scaled.to_string()),
        (
            "layout".into(),
            format!(
                "{},{},{}",
                layout.first_size, layout.middle_size, layout.refine_size
            ),
        ),
        (
            "partition".into(),
            format!(
                "{},{},{}",
                res.partition.first.len(),
                res.partition.middle.len(),
                res.partition.rest.len()
            ),
        ),
    ];
    if let Some(s) = &res.resample {
        metadata.push((
            "resample".into(),
            format!(
                "edges={} gamma={} floor={} ratio={} palette={} resamples={}",
                s.edges, s.gamma, s.size_floor, s.size_ratio, s.palette, s.resamples
            ),
        ));
    }
    let vertices = (0..lg.graph.n())
        .map(|v| VertexLine {
            vertex: lg.labels[v].clone(),
            color: flat[v],
            pair: Some(res.coloring.pairs[v]),
            witness: lg.labels[res.certificate.witness[v]].clone(),
        })
        .collect();
    Ok(ColoringRecord {
        n: lg.graph.n(),
        palette: res.coloring.total_colors(),
        metadata,
        vertices,
    })
}

fn color_closed(
    lg: &LabeledGraph,
    k: usize,
    opts: &PipelineOptions,
) -> anyhow::Result<ColoringRecord> {
    let res = cfcn_color(&lg.graph, k, opts)?;
    let mut metadata = vec![
        ("seed".to_owned(), opts.seed.to_string()),
        ("neighborhood".into(), "closed".into()),
        ("k".into(), k.to_string()),
        (
            "isolated".into(),
            (lg.graph.n() - res.kept.len()).to_string(),
        ),
    ];
    if let Some(cfon) = &res.cfon {
        metadata.push(("mode".into(), cfon.mode.to_string()));
        metadata.push(("scaled".into(), cfon.scaled.to_string()));
    }
    let vertices = (0..lg.graph.n())
        .map(|v| VertexLine {
            vertex: lg.labels[v].clone(),
            color: res.colors[v],
            pair: None,
            witness: lg.labels[res.certificate.witness[v]].clone(),
        })
        .collect();
    Ok(ColoringRecord {
        n: lg.graph.n(),
        palette: res.palette,
        metadata,
        vertices,
    })
}
