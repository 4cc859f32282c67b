//! The `metric-graphs` command line.
//!
//! Exit codes: 0 ok, 2 input parse (including usage errors), 3 metric
//! validation, 4 infeasible request, 5 internal invariant violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{build_cs, build_mc, build_sigma, relations_report, IntrinsicLabel};
use crate::error::{Error, Result};
use crate::graph::{is_tree, WeightedGraph};
use crate::io::{graph_json, read_matrix_csv, read_points_csv, space_json, write_points_csv};
use crate::metric::{FiniteMetricSpace, Norm, PointCloud};
use crate::space::{perturb_to_ds_with, sample_cloud, CloudModel, DEFAULT_MAX_ATTEMPTS};
use crate::tolerance::{ToleranceConfig, DEFAULT_EQ_TOL};

pub const SEED_ENV: &str = "METRIC_GRAPHS_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "metric-graphs",
    version,
    about = "Graphs induced by finite metric spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build CS, MC or Sigma and write it as an edge list, DOT or JSON.
    Build {
        #[arg(value_enum)]
        kind: GraphKind,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Emit::Edges)]
        emit: Emit,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the CS trace (defaults to `<out>.trace.json` when --out is set).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Classify the space as extrinsic, intrinsic-I or intrinsic-II.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        emit: ReportFormat,
        /// Write the JSON relations report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Perturb a point cloud into a distance-separated one.
    Perturb {
        #[command(flatten)]
        input: InputArgs,
        /// Bound on the bottleneck distance to the input (default: mesh / 20).
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
        max_attempts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the JSON report (defaults to `<out>.report.json` when --out is set).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Ensemble statistics over sampled clouds, as CSV.
    Stats {
        /// uniform-cube:N:side | grid:N:k | jittered-grid:N:k:sigma
        #[arg(long)]
        model: CloudModel,
        /// Points per cloud.
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = Norm::L2)]
        norm: Norm,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonical JSON dump of the space.
    Dump {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphKind {
    Cs,
    Mc,
    Sigma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Edges,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    PointsCsv,
    MatrixCsv,
}

#[derive(Debug, Args)]
struct TolArgs {
    /// Absolute tolerance for equal distances.
    #[arg(long, default_value_t = DEFAULT_EQ_TOL)]
    eq_tol: f64,
    /// Tolerance relative to the diameter; replaces --eq-tol.
    #[arg(long, conflicts_with = "eq_tol")]
    rel_tol: Option<f64>,
}

impl TolArgs {
    fn config(&self) -> ToleranceConfig {
        match self.rel_tol {
            Some(r) => ToleranceConfig::relative(r),
            None => ToleranceConfig::absolute(self.eq_tol),
        }
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::PointsCsv)]
    format: InputFormat,
    #[arg(long, default_value_t = Norm::L2)]
    norm: Norm,
    #[command(flatten)]
    tol: TolArgs,
}

impl InputArgs {
    fn read_text(&self) -> Result<String> {
        fs::read_to_string(&self.input)
            .map_err(|e| Error::Io(format!("{}: {e}", self.input.display())))
    }

    fn load(&self) -> Result<FiniteMetricSpace> {
        let text = self.read_text()?;
        let config = self.tol.config();
        match self.format {
            InputFormat::PointsCsv => {
                FiniteMetricSpace::from_points_with(read_points_csv(&text, self.norm)?, config)
            }
            InputFormat::MatrixCsv => {
                FiniteMetricSpace::from_matrix_with(&read_matrix_csv(&text)?, config)
            }
        }
    }

    fn load_cloud(&self) -> Result<PointCloud> {
        match self.format {
            InputFormat::PointsCsv => read_points_csv(&self.read_text()?, self.norm),
            InputFormat::MatrixCsv => Err(Error::Unsupported(
                "perturbation needs point coordinates, not a distance matrix".into(),
            )),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: Option<&Path>, content: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => stdout.write_all(content.as_bytes()).map_err(Error::from),
    }
}

fn sibling(out: &Path, suffix: &str) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

fn to_json_string(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn render_graph(g: &WeightedGraph, format: Emit, name: &str) -> String {
    match format {
        Emit::Edges => g.to_edge_list(),
        Emit::Dot => g.to_dot(name),
        Emit::Json => to_json_string(&graph_json(g)),
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Build {
            kind,
            input,
            emit: format,
            out,
            trace,
        } => {
            let space = input.load()?;
            let (graph, name) = match kind {
                GraphKind::Cs => {
                    let t = build_cs(&space);
                    let trace_path =
                        trace.or_else(|| out.as_deref().map(|o| sibling(o, ".trace.json")));
                    if let Some(path) = trace_path {
                        emit(Some(&path), &to_json_string(&t.to_json()), stdout)?;
                    }
                    writeln!(
                        stderr,
                        "cs: {} edges, {} steps, tree: {}",
                        t.graph.edge_count(),
                        t.steps.len(),
                        is_tree(&t.graph)
                    )?;
                    (t.graph, "cs")
                }
                GraphKind::Mc => {
                    let (g, cut) = build_mc(&space);
                    writeln!(stderr, "cut value: {}", cut.value)?;
                    (g, "mc")
                }
                GraphKind::Sigma => (build_sigma(&space), "sigma"),
            };
            if !graph.is_connected() {
                return Err(Error::InternalInvariantViolation(format!(
                    "{name} graph is disconnected"
                )));
            }
            emit(out.as_deref(), &render_graph(&graph, format, name), stdout)
        }
        Command::Classify {
            input,
            emit: format,
            out,
        } => {
            let space = input.load()?;
            let report = relations_report(&space)?;
            let json = to_json_string(&report.to_json());
            if let Some(path) = &out {
                emit(Some(path), &json, stdout)?;
            }
            match format {
                ReportFormat::Json if out.is_none() => emit(None, &json, stdout),
                _ => {
                    writeln!(stdout, "{}", report.class)?;
                    Ok(())
                }
            }
        }
        Command::Perturb {
            input,
            epsilon,
            seed,
            max_attempts,
            out,
            report,
        } => {
            let cloud = input.load_cloud()?;
            let config = input.tol.config();
            let epsilon = match epsilon {
                Some(e) => e,
                None => {
                    let space = FiniteMetricSpace::from_points_with(cloud.clone(), config)?;
                    space.distance_set().mesh_delta()? / 20.0
                }
            };
            let r = perturb_to_ds_with(&cloud, epsilon, seed, max_attempts, config)?;
            let json = serde_json::json!({
                "epsilon": epsilon,
                "seed": r.seed,
                "attempts": r.attempts,
                "displacement": r.displacement,
                "m": r.output.len(),
            });
            let report_path = report.or_else(|| out.as_deref().map(|o| sibling(o, ".report.json")));
            if let Some(path) = report_path {
                emit(Some(&path), &to_json_string(&json), stdout)?;
            }
            writeln!(
                stderr,
                "perturbed: attempts={} displacement={} epsilon={}",
                r.attempts, r.displacement, epsilon
            )?;
            emit(out.as_deref(), &write_points_csv(&r.output), stdout)
        }
        Command::Stats {
            model,
            points,
            trials,
            seed,
            norm,
            tol,
            out,
        } => {
            if trials == 0 {
                return Err(Error::InfeasibleModel("trials must be at least 1".into()));
            }
            let csv = stats_csv(model, points, trials, seed, norm, tol.config())?;
            emit(out.as_deref(), &csv, stdout)
        }
        Command::Dump { input, out } => {
            let space = input.load()?;
            emit(out.as_deref(), &to_json_string(&space_json(&space)), stdout)
        }
    }
}

struct TrialRow {
    trial: usize,
    seed: u64,
    cs_edges: usize,
    mc_edges: usize,
    sigma_edges: usize,
    cs_is_tree: bool,
    separated: bool,
    class: IntrinsicLabel,
}

fn run_trial(
    model: CloudModel,
    m: usize,
    trial: usize,
    seed: u64,
    norm: Norm,
    config: ToleranceConfig,
) -> Result<TrialRow> {
    let cloud = sample_cloud(model, m, seed)?.with_norm(norm);
    let space = FiniteMetricSpace::from_points_with(cloud, config)?;
    let report = relations_report(&space)?;
    Ok(TrialRow {
        trial,
        seed,
        cs_edges: report.cs.edge_count(),
        mc_edges: report.mc.edge_count(),
        sigma_edges: report.sigma.edge_count(),
        cs_is_tree: is_tree(&report.cs),
        separated: space.is_distance_separated(),
        class: report.class.label,
    })
}

/// Per-trial rows followed by one aggregate row (`trial = all`).
/// Trial `t` samples with seed `seed + t`.
pub fn stats_csv(
    model: CloudModel,
    m: usize,
    trials: usize,
    seed: u64,
    norm: Norm,
    config: ToleranceConfig,
) -> Result<String> {
    let rows = (0..trials)
        .map(|t| run_trial(model, m, t, seed.wrapping_add(t as u64), norm, config))
        .collect::<Result<Vec<_>>>()?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "trial",
        "seed",
        "model",
        "m",
        "cs_edges",
        "mc_edges",
        "sigma_edges",
        "cs_is_tree",
        "distance_separated",
        "class",
        "mc_edges_per_vertex",
    ])?;
    for r in &rows {
        w.write_record([
            r.trial.to_string(),
            r.seed.to_string(),
            model.to_string(),
            m.to_string(),
            r.cs_edges.to_string(),
            r.mc_edges.to_string(),
            r.sigma_edges.to_string(),
            r.cs_is_tree.to_string(),
            r.separated.to_string(),
            r.class.to_string(),
            format!("{:.6}", r.mc_edges as f64 / m as f64),
        ])?;
    }

    let n = rows.len() as f64;
    let mean = |f: fn(&TrialRow) -> usize| rows.iter().map(f).sum::<usize>() as f64 / n;
    let count = |label: IntrinsicLabel| rows.iter().filter(|r| r.class == label).count();
    let mean_mc = mean(|r| r.mc_edges);
    w.write_record([
        "all".to_string(),
        seed.to_string(),
        model.to_string(),
        m.to_string(),
        format!("{:.6}", mean(|r| r.cs_edges)),
        format!("{mean_mc:.6}"),
        format!("{:.6}", mean(|r| r.sigma_edges)),
        format!(
            "{}/{}",
            rows.iter().filter(|r| r.cs_is_tree).count(),
            rows.len()
        ),
        format!(
            "{}/{}",
            rows.iter().filter(|r| r.separated).count(),
            rows.len()
        ),
        format!(
            "extrinsic={};intrinsic-I={};intrinsic-II={}",
            count(IntrinsicLabel::Extrinsic),
            count(IntrinsicLabel::IntrinsicI),
            count(IntrinsicLabel::IntrinsicII)
        ),
        format!("{:.6}", mean_mc / m as f64),
    ])?;
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
