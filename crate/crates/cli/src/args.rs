use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "symte",
    version,
    about = "Symbolic transfer entropy between two time series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Directed TE over the whole input, with optional surrogate p-values.
    Compute(ComputeArgs),
    /// Directed TE along a sliding window schedule.
    Trace(TraceArgs),
    /// MSE of reduced-alphabet methods against the ordinal reference.
    Compare(CompareArgs),
    /// Alphabet sizes per embedding dimension.
    Alphabet(AlphabetArgs),
    /// Write a synthetic coupled pair as CSV with columns x,y.
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodKind {
    Ordinal,
    Binning,
    Principal,
    Kmeans,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SynthKind {
    Logistic,
    Ar,
    Noise,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Header name or 0-based index.
    #[arg(long, default_value = "0")]
    pub x_col: String,
    #[arg(long, default_value = "1")]
    pub y_col: String,
}

#[derive(Debug, Args)]
pub struct EmbeddingArgs {
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub tau: usize,
    #[arg(long, default_value_t = 1)]
    pub delta: usize,
}

#[derive(Debug, Args)]
pub struct MethodArgs {
    #[arg(long, value_enum, default_value_t = MethodKind::Ordinal)]
    pub method: MethodKind,
    #[arg(long)]
    pub bins: Option<usize>,
    #[arg(long)]
    pub t_extremes: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    #[arg(long, default_value_t = 1000)]
    pub window: usize,
    /// Defaults to the window length (non-overlapping windows).
    #[arg(long)]
    pub stride: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub embedding: EmbeddingArgs,
    #[command(flatten)]
    pub method: MethodArgs,
    /// Number of shuffle surrogates for p-values (at least 19).
    #[arg(long)]
    pub surrogates: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub embedding: EmbeddingArgs,
    #[command(flatten)]
    pub method: MethodArgs,
    #[command(flatten)]
    pub window: WindowArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub embedding: EmbeddingArgs,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Bin counts to compare, e.g. 4,5,6.
    #[arg(long, value_delimiter = ',')]
    pub bins: Vec<usize>,
    /// Extreme-group counts to compare, e.g. 1,2.
    #[arg(long, value_delimiter = ',')]
    pub t_extremes: Vec<usize>,
    /// Cluster counts to compare.
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AlphabetArgs {
    /// Embedding dimensions, `LO-HI` or a single value.
    #[arg(long, default_value = "2-10")]
    pub m: String,
    #[arg(long, value_delimiter = ',')]
    pub bins: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    pub t_extremes: Vec<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum, default_value_t = SynthKind::Logistic)]
    pub kind: SynthKind,
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    #[arg(long, default_value_t = 0.3)]
    pub coupling: f64,
    #[arg(long, default_value_t = 1.0)]
    pub noise_std: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub burn_in: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
