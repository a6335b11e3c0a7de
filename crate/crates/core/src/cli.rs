//! Command-line front end: `detect`, `evaluate`, and `generate`.
//!
//! Argument types live here so the binary stays a thin wrapper around
//! [`run`]. Exit codes: 0 success, 1 input or parse error, 2 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::benchmark::{generate, BenchmarkSpec};
use crate::encoding::decode;
use crate::graph::{load_edge_list, load_membership, Graph, Partition};
use crate::metrics::nmi;
use crate::nsga2::{evolve_with_progress, GaConfig, GenerationRecord, RunResult};
use crate::objectives::{community_score, modularity, ScoreParams};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "bicomm", version, about = "Bi-objective genetic community detection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve a partition of a network and write the best one.
    Detect(DetectArgs),
    /// Report modularity, community score and optionally NMI of a partition.
    Evaluate(EvaluateArgs),
    /// Write a planted-partition benchmark network and its ground truth.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Args)]
pub struct DetectArgs {
    /// Edge-list file.
    pub graph: PathBuf,
    /// Ground-truth membership file; enables NMI reporting.
    #[arg(long)]
    pub truth: Option<PathBuf>,
    #[arg(long, default_value_t = 200)]
    pub population: usize,
    #[arg(long, default_value_t = 3000)]
    pub generations: usize,
    #[arg(long, default_value_t = 0.7)]
    pub crossover_prob: f64,
    #[arg(long, default_value_t = 0.03)]
    pub mutation_prob: f64,
    /// Power-mean exponent of the community score.
    #[arg(long, default_value_t = 2.5)]
    pub exponent_r: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Run seeds seed, seed+1, ... and keep the run with the highest Q.
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    /// Evaluation threads (0 = all cores). Results do not depend on it.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Output prefix; defaults to the graph path without its extension.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Print a progress line to stderr every N generations (0 = never).
    #[arg(long, default_value_t = 0)]
    pub progress: usize,
    /// Print the summary as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct EvaluateArgs {
    /// Edge-list file.
    pub graph: PathBuf,
    /// Membership file to score.
    pub partition: PathBuf,
    /// Second membership file; enables NMI against the first.
    pub other: Option<PathBuf>,
    #[arg(long, default_value_t = 2.5)]
    pub exponent_r: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(long, default_value_t = 128)]
    pub nodes: usize,
    #[arg(long, default_value_t = 4)]
    pub communities: usize,
    #[arg(long, default_value_t = 16.0)]
    pub avg_degree: f64,
    /// Mixing parameter: expected fraction of each node's edges leaving its community.
    #[arg(long)]
    pub mu: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Writes `<output>.edges` and `<output>.truth`.
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn input_err(path: &Path) -> impl Fn(crate::Error) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    load_edge_list(&read(path)?).map_err(input_err(path))
}

fn load_partition(path: &Path, g: &Graph) -> CliResult<Partition> {
    load_membership(&read(path)?, g).map_err(input_err(path))
}

/// Configuration echo, enough to repeat a detection run exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub input: String,
    pub truth: Option<String>,
    pub population_size: usize,
    pub generations: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub exponent_r: f64,
    pub seed: u64,
    pub runs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub seed: u64,
    pub best_q: f64,
    pub best_cs: f64,
    pub k: usize,
    pub nmi: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_seconds: f64,
}

/// Serialized record of a `detect` invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub format_version: u32,
    pub config: ConfigEcho,
    /// Summary of the selected (highest-Q) run.
    pub results: RunSummary,
    pub front_size: usize,
    /// One entry per seed.
    pub runs: Vec<RunSummary>,
    pub timing: Timing,
    /// Per-generation history of the selected run.
    pub history: Vec<GenerationRecord>,
}

/// What `detect` produced, for callers that drive it as a library.
#[derive(Debug, Clone)]
pub struct DetectOutcome {
    pub record: RunRecord,
    pub partition: Partition,
    pub membership_path: PathBuf,
    pub pareto_path: PathBuf,
    pub record_path: PathBuf,
}

fn default_prefix(graph: &Path) -> PathBuf {
    graph.with_extension("")
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Pareto table: header plus one row per rank-1 individual.
pub fn pareto_csv(run: &RunResult) -> String {
    let mut out = String::from("f1,f2,q,cs,k\n");
    for ind in &run.final_front {
        let o = ind.objectives;
        let k = decode(&ind.chromosome).community_count();
        out.push_str(&format!("{},{},{},{},{}\n", o.f1, o.f2, o.q, o.cs, k));
    }
    out
}

pub fn detect(args: &DetectArgs, out: &mut dyn Write) -> CliResult<DetectOutcome> {
    if args.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let base = GaConfig {
        population_size: args.population,
        generations: args.generations,
        crossover_prob: args.crossover_prob,
        mutation_prob: args.mutation_prob,
        r: args.exponent_r,
        seed: args.seed,
        workers: args.workers,
    };
    base.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let g = load_graph(&args.graph)?;
    if g.edge_count() == 0 {
        return Err(CliError::Input(format!(
            "{}: graph has no edges",
            args.graph.display()
        )));
    }
    let truth = match &args.truth {
        Some(p) => Some(load_partition(p, &g)?),
        None => None,
    };

    let started = Instant::now();
    let mut best: Option<(RunResult, RunSummary)> = None;
    let mut summaries = Vec::with_capacity(args.runs);
    for offset in 0..args.runs as u64 {
        let seed = args.seed.wrapping_add(offset);
        let config = GaConfig { seed, ..base.clone() };
        let every = args.progress;
        let run = evolve_with_progress(&g, &config, |rec| {
            if every > 0 && rec.generation % every == 0 {
                eprintln!(
                    "seed {seed} gen {}: best q {:.6}, best cs {:.4}, front {}",
                    rec.generation, rec.best_q, rec.best_cs, rec.front_size
                );
            }
        })
        .map_err(|e| CliError::Input(e.to_string()))?;
        let partition = decode(&run.best_by_q.chromosome);
        let summary = RunSummary {
            seed,
            best_q: run.best_by_q.objectives.q,
            best_cs: run.best_by_q.objectives.cs,
            k: partition.community_count(),
            nmi: match &truth {
                Some(t) => Some(nmi(&partition, t).map_err(|e| CliError::Input(e.to_string()))?),
                None => None,
            },
        };
        summaries.push(summary.clone());
        if best.as_ref().is_none_or(|(_, b)| summary.best_q > b.best_q) {
            best = Some((run, summary));
        }
    }
    let wall_seconds = started.elapsed().as_secs_f64();
    let (run, summary) = best.expect("at least one run");
    let partition = decode(&run.best_by_q.chromosome);

    let prefix = args
        .output
        .clone()
        .unwrap_or_else(|| default_prefix(&args.graph));
    let membership_path = with_suffix(&prefix, ".membership");
    let pareto_path = with_suffix(&prefix, ".pareto.csv");
    let record_path = with_suffix(&prefix, ".run.json");

    let record = RunRecord {
        format_version: FORMAT_VERSION,
        config: ConfigEcho {
            input: args.graph.display().to_string(),
            truth: args.truth.as_ref().map(|p| p.display().to_string()),
            population_size: args.population,
            generations: args.generations,
            crossover_prob: args.crossover_prob,
            mutation_prob: args.mutation_prob,
            exponent_r: args.exponent_r,
            seed: args.seed,
            runs: args.runs,
        },
        results: summary.clone(),
        front_size: run.final_front.len(),
        runs: summaries,
        timing: Timing { wall_seconds },
        history: run.history.clone(),
    };

    write(&membership_path, &partition.to_membership(&g))?;
    write(&pareto_path, &pareto_csv(&run))?;
    let json = serde_json::to_string_pretty(&record).expect("record serializes");
    write(&record_path, &(json + "\n"))?;

    let report = if args.json {
        serde_json::to_string(&summary).expect("summary serializes") + "\n"
    } else {
        let mut s = format!(
            "seed {}\nQ = {}\nCS = {}\nk = {}\n",
            summary.seed, summary.best_q, summary.best_cs, summary.k
        );
        if let Some(v) = summary.nmi {
            s.push_str(&format!("NMI = {v}\n"));
        }
        s
    };
    out.write_all(report.as_bytes())
        .map_err(|e| CliError::Input(e.to_string()))?;

    Ok(DetectOutcome {
        record,
        partition,
        membership_path,
        pareto_path,
        record_path,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluateReport {
    pub q: f64,
    pub cs: f64,
    pub k: usize,
    pub nmi: Option<f64>,
}

pub fn evaluate(args: &EvaluateArgs, out: &mut dyn Write) -> CliResult<EvaluateReport> {
    let params = ScoreParams::new(args.exponent_r).map_err(|e| CliError::Usage(e.to_string()))?;
    let g = load_graph(&args.graph)?;
    let p = load_partition(&args.partition, &g)?;
    let q = modularity(&g, &p).map_err(input_err(&args.graph))?;
    let cs = community_score(&g, &p, params).map_err(input_err(&args.graph))?;
    let nmi = match &args.other {
        Some(path) => {
            let other = load_partition(path, &g)?;
            Some(nmi(&p, &other).map_err(input_err(path))?)
        }
        None => None,
    };
    let report = EvaluateReport {
        q,
        cs,
        k: p.community_count(),
        nmi,
    };
    let text = if args.json {
        serde_json::to_string(&report).expect("report serializes") + "\n"
    } else {
        let mut s = format!("Q = {q}\nCS = {cs}\nk = {}\n", report.k);
        if let Some(v) = nmi {
            s.push_str(&format!("NMI = {v}\n"));
        }
        s
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(report)
}

pub fn generate_benchmark(args: &GenerateArgs, out: &mut dyn Write) -> CliResult<(Graph, Partition)> {
    let spec = BenchmarkSpec {
        nodes: args.nodes,
        communities: args.communities,
        avg_degree: args.avg_degree,
        mixing: args.mu,
        seed: args.seed,
    };
    let (g, truth) = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    write(&with_suffix(&args.output, ".edges"), &g.to_edge_list())?;
    write(&with_suffix(&args.output, ".truth"), &truth.to_membership(&g))?;
    writeln!(out, "nodes {} edges {}", g.node_count(), g.edge_count())
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok((g, truth))
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Detect(a) => detect(a, out).map(drop),
        Command::Evaluate(a) => evaluate(a, out).map(drop),
        Command::Generate(a) => generate_benchmark(a, out).map(drop),
    }
}
