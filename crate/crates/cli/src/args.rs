use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations with U(h)-free modules over sp(2n).
#[derive(Debug, Parser)]
#[command(name = "cartanfree", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every bracket relation on the module table.
    Verify(CommonArgs),
    /// Support graph of one coset of W(M) in a box, with its components.
    Support(SupportArgs),
    /// Normalize a rank-one table to M0 and print the certificate.
    Classify(ClassifyArgs),
    /// Trace polynomial of an element of U(g)_0.
    Trace(TraceArgs),
    /// Print the twisted module table.
    Twist(CommonArgs),
    /// Print the tensor product with the defining representation.
    Tensor(CommonArgs),
    /// Print the module table, or the basis with `--basis`.
    Dump(DumpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    M0,
    Sl2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Built-in module.
    #[arg(long, value_enum, conflicts_with = "table")]
    pub builtin: Option<Builtin>,
    /// Module table in JSON: {n, d, actions: [{root, matrix}]}.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Rank n of sp(2n) for built-in M0.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Twist applied to the module, repeatable: `weyl:k` or `diag:c1,..,cn`.
    #[arg(long = "twist", value_name = "TWIST")]
    pub twists: Vec<String>,
    /// Append this many random twists (seeded).
    #[arg(long, default_value_t = 0)]
    pub random_twists: usize,
    /// Seed for `--random-twists`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SupportArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Coset representative, comma-separated rationals; defaults to lambda_0.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Box `lo:hi` in every coordinate; defaults to 9/2 around mu.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bbox: Option<String>,
    /// Maximum number of nodes (also CARTANFREE_NODE_CAP).
    #[arg(long)]
    pub node_cap: Option<usize>,
    /// Semisimplify before building the graph.
    #[arg(long)]
    pub semisimplify: bool,
    /// Classify components on all nodes, not only interior ones.
    #[arg(long)]
    pub all_nodes: bool,
    /// In DOT output, draw vanishing root steps as dashed arrows.
    #[arg(long)]
    pub dashed: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Box `lo:hi` used for the minimal submodule; defaults to [-9/2, 9/2].
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bbox: Option<String>,
    #[arg(long)]
    pub node_cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Word of basis labels, e.g. `X(2e1),X(-2e1)`; empty means the unit.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "casimir")]
    pub word: Option<String>,
    /// Use the quadratic Casimir element.
    #[arg(long)]
    pub casimir: bool,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Dump the Lie algebra basis and structure constants instead.
    #[arg(long)]
    pub basis: bool,
}
