use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "gridqubo",
    version,
    about = "Partition power grids for parallel simulation through QUBO formulations"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed recorded in every artifact and used by stochastic solvers.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value = "out")]
    pub out_dir: PathBuf,
    /// JSON cost table, e.g. {"generator": 10, "line": 5, "load": 3, "include_loads": false}.
    #[arg(long, global = true)]
    pub cost_model: Option<PathBuf>,
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the QUBO, simulation graph and bus index of a case.
    Build(BuildArgs),
    /// Sample a QUBO and report solution quality.
    Solve(SolveArgs),
    /// Decode one assignment into a partition report.
    Evaluate(EvaluateArgs),
    /// Repeat annealing over a grid of sweeps or reads values.
    Sweep(SweepArgs),
    /// Estimate embedded problem size on annealing hardware.
    Estimate(EstimateArgs),
    /// Split a case into a power-of-two number of parts.
    Bisect(BisectArgs),
    /// Download case files listed with their SHA-256 checksums.
    FetchCases(FetchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveKind {
    /// Components + cut + network.
    Part,
    Components,
    /// Cut over line weights with the injection overhead.
    Cut,
    Network,
    Size,
    Weights,
    Mod,
    /// Weighted sum of the terms given with --term.
    Scalarized,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ObjectiveArgs {
    #[arg(long, value_enum, default_value_t = ObjectiveKind::Part)]
    pub objective: ObjectiveKind,
    /// `name=lambda` entry of a scalarized objective; repeatable.
    #[arg(long = "term", value_parser = parse_term)]
    pub terms: Vec<(ObjectiveKind, f64)>,
    /// Exponent of the weights objective.
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
}

fn parse_term(s: &str) -> Result<(ObjectiveKind, f64), String> {
    let (name, lambda) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=lambda, got {s:?}"))?;
    let kind = ObjectiveKind::from_str(name.trim(), true)?;
    if kind == ObjectiveKind::Scalarized {
        return Err("a scalarized objective cannot contain itself".into());
    }
    let lambda: f64 = lambda
        .trim()
        .parse()
        .map_err(|e| format!("bad weight {lambda:?}: {e}"))?;
    if !lambda.is_finite() {
        return Err(format!("weight {lambda} is not finite"));
    }
    Ok((kind, lambda))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Sa,
    Exact,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SolverArgs {
    #[arg(long, value_enum)]
    pub solver: Option<SolverKind>,
    #[arg(long, default_value_t = 1000)]
    pub reads: usize,
    #[arg(long, default_value_t = 100)]
    pub sweeps: usize,
    #[arg(long)]
    pub t_hot: Option<f64>,
    #[arg(long)]
    pub t_cold: Option<f64>,
    /// Largest variable count the exhaustive solver accepts.
    #[arg(long, default_value_t = gridqubo::solvers::DEFAULT_EXACT_LIMIT)]
    pub exact_limit: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct QualityArgs {
    /// Compare against the exhaustive optimum instead of the best sample.
    #[arg(long)]
    pub exact_reference: bool,
    /// Target success probability of the time-to-solution.
    #[arg(long, default_value_t = 0.99)]
    pub p_s: f64,
    /// Use measured wall time per read as the annealing time.
    #[arg(long)]
    pub wall_clock: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BuildArgs {
    #[arg(long)]
    pub case: Option<PathBuf>,
    #[command(flatten)]
    pub objective: ObjectiveArgs,
    /// Variable count of a case-free size objective.
    #[arg(long)]
    pub n_vars: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SolveArgs {
    #[arg(long, conflicts_with = "qubo", required_unless_present = "qubo")]
    pub case: Option<PathBuf>,
    /// QUBO JSON written by `build`.
    #[arg(long)]
    pub qubo: Option<PathBuf>,
    #[command(flatten)]
    pub objective: ObjectiveArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub quality: QualityArgs,
    /// Resample until the best admissible solution has two connected parts.
    #[arg(long, requires = "case")]
    pub connected: bool,
    #[arg(long, default_value_t = 10)]
    pub max_rounds: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EvaluateArgs {
    #[arg(long)]
    pub case: PathBuf,
    /// File holding a bit string or a samples JSON (best record is used).
    #[arg(long, conflicts_with = "bits", required_unless_present = "bits")]
    pub assignment: Option<PathBuf>,
    #[arg(long)]
    pub bits: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParam {
    Sweeps,
    Reads,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    #[arg(long)]
    pub case: PathBuf,
    #[command(flatten)]
    pub objective: ObjectiveArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub quality: QualityArgs,
    #[arg(long, value_enum, default_value_t = SweepParam::Sweeps)]
    pub param: SweepParam,
    /// Comma-separated grid values.
    #[arg(long, value_delimiter = ',', required = true)]
    pub values: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplerBaseArg {
    Buses,
    LogicalCouplers,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EstimateArgs {
    #[arg(long, conflicts_with = "case", required_unless_present = "case")]
    pub n: Option<usize>,
    #[arg(long)]
    pub case: Option<PathBuf>,
    /// JSON with the power-law constants and hardware limits.
    #[arg(long)]
    pub law: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub coupler_base: Option<CouplerBaseArg>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BisectArgs {
    #[arg(long)]
    pub case: PathBuf,
    #[arg(long)]
    pub parts: usize,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FetchArgs {
    /// Lines of `<url> <sha256> [file name]`; `#` starts a comment.
    #[arg(long)]
    pub urls: PathBuf,
    /// Target directory; defaults to the output directory.
    #[arg(long)]
    pub dest: Option<PathBuf>,
}
