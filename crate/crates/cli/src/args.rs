use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ivgraph::construction::Epsilon;
use ivgraph::enumeration::DEFAULT_CAP;

/// Recognize, enumerate and count unlabeled interval graphs, and evaluate
/// the bounds on their number.
#[derive(Debug, Parser)]
#[command(name = "ivgraph", version)]
pub struct Cli {
    /// Worker threads for enumeration sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,

    /// Largest n the matching sweep accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide interval-ness of graph6 graphs; prints one JSON object per
    /// input line: {"schema":1,"graph6":..,"is_interval":..,"realization"?,"reason"?}.
    Recognize(RecognizeArgs),
    /// Count unlabeled interval graphs; CSV `n,i_n,matchings,elapsed_ms`.
    Count(CountArgs),
    /// One graph6 line (or canonical hex code) per unlabeled interval graph
    /// on n vertices, in canonical code order.
    Enumerate(EnumerateArgs),
    /// Build the anchored three-colored family for (n, k).
    Construct(ConstructArgs),
    /// Evaluate the bound formulas for a list of n (CSV or JSON).
    Bounds(BoundsArgs),
    /// Exact I_n next to its best lower bound and the matching upper bound
    /// for n = 1..=max-n.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    /// graph6 strings; if none are given, lines are read from --input or
    /// standard input.
    pub graphs: Vec<String>,

    /// File with one graph6 string per line.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SizeSelector {
    /// A single n.
    #[arg(long)]
    pub n: Option<usize>,

    /// Every n from 1 to this value.
    #[arg(long)]
    pub max_n: Option<usize>,
}

impl SizeSelector {
    pub fn sizes(&self) -> Vec<usize> {
        match (self.n, self.max_n) {
            (Some(n), _) => vec![n],
            (None, Some(m)) => (1..=m).collect(),
            (None, None) => Vec::new(),
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub size: SizeSelector,

    /// Fill the elapsed_ms column (left empty otherwise so output is
    /// reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateFormat {
    Graph6,
    Hex,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, value_enum, default_value_t = EnumerateFormat::Graph6)]
    pub format: EnumerateFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    /// One graph6 line per member.
    Graph6,
    /// One JSON object per member, with colors as a B/R/W string.
    Json,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Total vertex count.
    #[arg(long)]
    pub n: usize,

    /// Anchors per side; needs 1 <= k < n/2 and n - 2k <= k^2.
    #[arg(long)]
    pub k: usize,

    /// Anchor half-width as p/q in (0, 1/2).
    #[arg(long, default_value = "1/4")]
    pub epsilon: Epsilon,

    /// Check member count, distinct colored codes, decoding round trip,
    /// geometric adjacency and recognition.
    #[arg(long)]
    pub verify: bool,

    /// Print every family member.
    #[arg(long, value_enum)]
    pub emit: Option<EmitFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
#[group(id = "sizes", required = true, multiple = false)]
pub struct NSelector {
    #[arg(long, group = "sizes")]
    pub n: Option<u64>,

    /// Comma-separated n values.
    #[arg(long, value_delimiter = ',', group = "sizes")]
    pub n_list: Option<Vec<u64>>,

    /// start:end or start:end:step, inclusive.
    #[arg(long, group = "sizes")]
    pub n_range: Option<String>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub sizes: NSelector,

    /// Use this k for every row instead of floor(n / ln n).
    #[arg(long)]
    pub k: Option<u64>,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,

    /// Rows with n up to this value get exact ln I_n from the matching
    /// sweep (0 disables).
    #[arg(long, default_value_t = 8)]
    pub exact_max: u64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}
