use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polybergman::spaces::{DEFAULT_ANGULAR_NODES, DEFAULT_RADIAL_NODES, DEFAULT_TRUNCATION};
use polybergman::{Representation, WeightParam};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "polybergman",
    version,
    about = "Disc polynomials and poly-Bergman kernels on the unit disc"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Weight exponent γ > -1 of (1-|z|²)^γ.
    #[arg(long, global = true, default_value = "0", value_parser = parse_gamma, allow_negative_numbers = true)]
    pub gamma: WeightParam,
    /// Pass/fail tolerance; each command has its own default.
    #[arg(long, global = true, value_parser = parse_positive)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = DEFAULT_RADIAL_NODES, value_parser = parse_count)]
    pub radial_nodes: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_ANGULAR_NODES, value_parser = parse_count)]
    pub angular_nodes: usize,
    /// Basis truncation M (series length for `kernel`, z-degree for `project`).
    #[arg(long, global = true, default_value_t = DEFAULT_TRUNCATION, value_parser = parse_count)]
    pub trunc: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate R^γ_{m,n} at points in one or more representations.
    Eval(EvalArgs),
    /// Quadrature Gram matrix of the disc polynomials.
    Gram(GramArgs),
    /// Truncated series against closed form of the true poly-Bergman kernel.
    Kernel(KernelArgs),
    /// Expand a function and split it into true poly-Bergman components.
    Project(ProjectArgs),
    /// Write the derivation ledger (default file derivation_ledger.json).
    Ledger,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Points as re,im; repeat the flag or separate with ';'.
    #[arg(long = "points", allow_hyphen_values = true)]
    pub points: Vec<String>,
    /// Polar grid nr,ntheta with radii k/(nr+1), k = 1..nr, plus the origin.
    #[arg(long, value_parser = parse_pair)]
    pub grid: Option<(usize, usize)>,
    #[arg(long, value_delimiter = ',', default_value = "jacobi")]
    pub rep: Vec<Representation>,
}

#[derive(Debug, Args)]
pub struct GramArgs {
    #[arg(long, default_value_t = 4)]
    pub max_m: usize,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    #[arg(long)]
    pub n: usize,
    /// Points as re,im; kernel pairs are all ordered pairs of points.
    #[arg(long = "points", allow_hyphen_values = true)]
    pub points: Vec<String>,
    /// Polar grid nr,ntheta with radii k·rmax/nr, k = 1..nr, plus the origin.
    #[arg(long, value_parser = parse_pair, default_value = "2,3")]
    pub grid: (usize, usize),
    /// Largest grid radius; the series needs a larger --trunc as this grows.
    #[arg(long, default_value_t = 0.5)]
    pub rmax: f64,
}

#[derive(Debug, Args)]
pub struct ProjectArgs {
    /// Expression such as "R(2,1) + (0.5-1i)*z^2*zbar - (1-|z|^2)^2".
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["coeff_file", "random"])]
    pub expr: Option<String>,
    /// Coefficient table JSON {"gamma", "M", "J", "coeffs"}.
    #[arg(long, conflicts_with = "random")]
    pub coeff_file: Option<PathBuf>,
    /// Seeded random combination: order,degree.
    #[arg(long, value_parser = parse_pair)]
    pub random: Option<(usize, usize)>,
    /// Highest true component to extract; defaults to the input's z̄-degree.
    #[arg(long)]
    pub n: Option<usize>,
    /// Exit 1 unless the input has order n+1 within tolerance.
    #[arg(long)]
    pub expect_member: Option<usize>,
}

fn parse_gamma(s: &str) -> Result<WeightParam, String> {
    let g: f64 = s.parse().map_err(|e| format!("{e}"))?;
    WeightParam::new(g).map_err(|e| e.to_string())
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("must be positive, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_count(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two integers a,b")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}
