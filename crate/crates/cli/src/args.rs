use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ohmnet_core::rational::{int, parse_decimal, parse_rational};
use ohmnet_core::{Family, Method, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "ohmnet",
    version,
    about = "Exact effective resistance on resistor networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resistance between one pair by one or more methods.
    Resist(ResistArgs),
    /// All-pairs cross-method and metric checks over family sweeps or a file.
    Check(CheckArgs),
    /// Scan Δ_n = r(1,n+1) - r(1,n) on linear 3-trees against a target limit.
    Conjecture(ConjectureArgs),
    /// Time each method over a size sweep.
    Bench(BenchArgs),
    /// Print the Laplacian of a graph.
    Matrix(MatrixArgs),
    /// Reduce a graph to one pair and emit the reduction trace.
    Reduce(ReduceArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Generated family: path, linear2tree, linear3tree, ladder, fan, wheel.
    #[arg(long)]
    pub family: Option<Family>,
    /// Family size (rung count for ladders).
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge-list file with lines `u v r`.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this path instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ResistArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
    pub pair: Vec<usize>,
    #[arg(long = "method", value_delimiter = ',', default_values_t = [Method::Det, Method::Solve, Method::Reduce])]
    pub methods: Vec<Method>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// A family name or `all`.
    #[arg(long)]
    pub family: Option<String>,
    /// Largest size in the sweep.
    #[arg(long, default_value_t = 15)]
    pub max: usize,
    #[arg(long, conflicts_with_all = ["family"])]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long, default_value_t = 200)]
    pub nmax: usize,
    #[arg(long, default_value = "1/14", value_parser = rational_arg)]
    pub target: Rational,
    #[arg(long, default_value = "1e-6", value_parser = decimal_arg)]
    pub threshold: Rational,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "linear2tree")]
    pub family: Family,
    #[arg(long, value_delimiter = ',', default_values_t = [100, 1000, 10000])]
    pub sizes: Vec<usize>,
    /// Repetitions per cell; the median is reported.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(3..))]
    pub reps: u32,
    /// Largest size timed with the determinant method.
    #[arg(long, default_value_t = 500)]
    pub cutoff: usize,
    /// Largest size timed with the grounded solve.
    #[arg(long, default_value_t = 1000)]
    pub solve_cutoff: usize,
    /// Largest size timed with star-mesh reduction.
    #[arg(long, default_value_t = 1000)]
    pub reduce_cutoff: usize,
    #[arg(long = "method", value_delimiter = ',', default_values_t = Method::ALL)]
    pub methods: Vec<Method>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
    pub pair: Vec<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn decimal_arg(s: &str) -> Result<Rational, String> {
    let v = parse_decimal(s).map_err(|e| e.to_string())?;
    if v <= int(0) {
        return Err("threshold must be positive".into());
    }
    Ok(v)
}
