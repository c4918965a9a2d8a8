use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tcnet_exact::factorial::DEFAULT_FACTORIAL_CAP;
use tcnet_oracle::DEFAULT_MAX_SIZE;

/// Count, enumerate and estimate tree-child phylogenetic networks.
///
/// Integer lists accept single values, comma lists and inclusive ranges,
/// e.g. `3`, `2,4,8` or `2..6`.
///
/// Exit codes: 0 success, 1 failed check, 2 usage error, 3 resource guard.
#[derive(Debug, Parser)]
#[command(name = "tcnet", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Largest n for which n! may be computed.
    #[arg(long, global = true, env = "TCNET_FACTORIAL_CAP", default_value_t = DEFAULT_FACTORIAL_CAP)]
    pub factorial_cap: usize,

    /// Largest l + k the brute-force oracle will enumerate.
    #[arg(long, global = true, env = "TCNET_ORACLE_MAX_SIZE", default_value_t = DEFAULT_MAX_SIZE)]
    pub oracle_max_size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a closed-form count.
    Count(CountArgs),
    /// Enumerate networks by brute force.
    Oracle(OracleArgs),
    /// Component graphs: enumeration, reduction, stars.
    Compgraph(CompgraphArgs),
    /// Leading-order asymptotics and convergence ratios.
    Asymptotic(AsymptoticArgs),
    /// Run the self-verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    /// (2l-3)!!, phylogenetic trees
    Trees,
    /// one-component tree-child networks
    OneComponent,
    /// networks over the star component graph
    Star,
    /// exact tree-child count for k = 1
    TcK1,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Trees => "trees",
            Formula::OneComponent => "one-component",
            Formula::Star => "star",
            Formula::TcK1 => "tc-k1",
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub formula: Formula,
    /// Leaf counts.
    #[arg(long, short = 'l', value_parser = parse_list)]
    pub leaves: IntList,
    /// Reticulation counts (ignored for `trees`, fixed to 1 for `tc-k1`).
    #[arg(long, short = 'k', value_parser = parse_list)]
    pub retics: Option<IntList>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, short = 'l', value_parser = parse_list)]
    pub leaves: IntList,
    #[arg(long, short = 'k', value_parser = parse_list, default_value = "0")]
    pub retics: IntList,
    /// Write every network as one JSON object per line. With several
    /// parameter pairs the networks are concatenated in row order.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CompgraphArgs {
    #[command(subcommand)]
    pub action: CompgraphAction,
    /// Graph output format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Json, global = true)]
    pub output: GraphFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum CompgraphAction {
    /// All component graphs on m vertices, up to isomorphism.
    Enumerate {
        #[arg(long)]
        m: usize,
        /// Largest m accepted.
        #[arg(long, default_value_t = tcnet_core::component_graph::DEFAULT_MAX_ENUMERATION_VERTICES)]
        max_vertices: usize,
    },
    /// Every reduction of a component graph given as JSON.
    Reduce {
        /// Graph JSON, or `@path` to read it from a file.
        #[arg(long)]
        graph: String,
    },
    /// The star component graph with k children.
    Star {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AsymptoticKind {
    /// leading term of the tree-child count, against the exact count when known
    Tc,
    /// leading term with all non-root vertices labeled
    NodeLabeled,
    /// inner sum of the star count against its Laplace estimate
    Laplace,
    /// star-count prefactor against its Stirling estimate
    Prefactor,
    /// one-component counts over their growth scale
    OBound,
}

impl AsymptoticKind {
    pub fn name(self) -> &'static str {
        match self {
            AsymptoticKind::Tc => "tc",
            AsymptoticKind::NodeLabeled => "node-labeled",
            AsymptoticKind::Laplace => "laplace",
            AsymptoticKind::Prefactor => "prefactor",
            AsymptoticKind::OBound => "o-bound",
        }
    }
}

#[derive(Debug, Args)]
pub struct AsymptoticArgs {
    #[arg(long, value_enum)]
    pub kind: AsymptoticKind,
    #[arg(long, short = 'k')]
    pub k: usize,
    /// Leaf counts.
    #[arg(long, short = 'l', value_parser = parse_list)]
    pub l: Option<IntList>,
    /// Vertex counts, for `node-labeled`.
    #[arg(long, short = 'n', value_parser = parse_list)]
    pub n: Option<IntList>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Exact,
    Oracle,
    Asymptotic,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Breaks the star-count prefactor to check that the suite notices.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Parsed integer list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

pub fn parse_list(s: &str) -> Result<IntList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.trim().parse().map_err(|_| format!("bad range start in `{part}`"))?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end in `{part}`"))?;
            if a > b {
                return Err(format!("empty range `{part}`"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| format!("not an integer: `{part}`"))?);
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(IntList(out))
}
