use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chebflag", version, about = "Demazure-flag multiplicities from Chebyshev-type quotients")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients a_0..a_order of the quotient F_{xi,m,mu}.
    Expand(ExpandArgs),
    /// The multiplicity V_n^{xi -> m}(1).
    Mult(MultArgs),
    /// Positivity class of F_{xi,m,mu}, with threshold evidence.
    Classify(ClassifyArgs),
    /// Seeded cross-validation sweep over all oracle suites.
    Verify(VerifyArgs),
    /// Direct multiplicity formula for the hook families.
    Families(FamiliesArgs),
    /// Multiplicity table over a grid of partitions, levels and weights.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Partition as comma-separated parts.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub mu: usize,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    /// Also check the signed formula and any Dyck-product model.
    #[arg(long)]
    pub cross_validate: bool,
}

#[derive(Debug, Args)]
pub struct MultArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub xi: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub mu: usize,
    #[arg(long, default_value_t = 120)]
    pub horizon: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random cases per seeded suite.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
    /// Table CSV whose rows are recomputed and compared.
    #[arg(long)]
    pub golden: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    A,
    B,
    C,
}

#[derive(Debug, Args)]
pub struct FamiliesArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub t: usize,
    #[arg(long, default_value_t = 0)]
    pub s: usize,
    /// The single intermediate part of kind b.
    #[arg(long)]
    pub r: Option<usize>,
    /// Intermediate parts of kind c, comma-separated.
    #[arg(long)]
    pub rs: Option<String>,
    /// Coefficient index N; the weight is |xi| - 2N.
    #[arg(long = "N", default_value_t = 0)]
    pub big_n: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Partition; repeat for several rows.
    #[arg(long)]
    pub xi: Vec<String>,
    /// Levels: comma list and/or inclusive ranges `lo..hi`.
    #[arg(long)]
    pub m: String,
    /// Weights, same syntax; defaults to 0..|xi| for each partition.
    #[arg(long)]
    pub n: Option<String>,
}
