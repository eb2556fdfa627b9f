use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "sepgraph",
    version,
    about = "Separation profiles, balanced cuts and expander families"
)]
pub struct Cli {
    /// Worker threads for the parallel searches (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "subcommand")]
pub enum Command {
    /// Parse an edge list and summarise it.
    ParseCheck(GraphArgs),
    /// Shortest cycle length.
    Girth(GraphArgs),
    /// Vertex Cheeger constant, exact or spectral lower bound.
    Cheeger(CheegerArgs),
    /// Minimum balanced vertex cut, or certified bounds on large graphs.
    Cut(GraphArgs),
    /// Terminal of a maximal efficient-cut sequence with its expansion bound.
    ExtractExpander(GraphArgs),
    /// Separation profile points.
    Sep(SepArgs),
    /// Test f ≼ g between two saved profiles.
    ProfileCompare(CompareArgs),
    /// Families X(M) built from a girth-sparsified expander sequence.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Recursive shell cut of a grid patch driven by a product cover.
    AsdimCut(AsdimArgs),
    /// Cover-based upper curve for the separation profile.
    SepUpper(SepUpperArgs),
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "action")]
pub enum FamilyCommand {
    /// Assemble X(M) and optionally write its manifest.
    Build(FamilyBuildArgs),
    /// Compare sep of X(M) and X(N) at the scale of a term c in M \ N.
    Distinguish(DistinguishArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the document here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Largest vertex count searched exhaustively.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Serialize)]
pub struct GraphArgs {
    /// Edge-list file, or `builtin:NAME` (cages, `grid-AxB`, `cycle-N`, `path-N`, `complete-N`, `star-N`).
    #[arg(long = "in")]
    pub input: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheegerMethod {
    Auto,
    Exhaustive,
    Spectral,
}

#[derive(Args, Debug, Serialize)]
pub struct CheegerArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = CheegerMethod::Auto)]
    pub method: CheegerMethod,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SepKind {
    Auto,
    Exact,
    Lower,
}

#[derive(Args, Debug, Serialize)]
pub struct SepArgs {
    /// Host graph.
    #[arg(
        long = "in",
        conflicts_with = "family",
        required_unless_present = "family"
    )]
    pub input: Option<String>,
    /// Family manifest (JSON) used as the host instead of a graph.
    #[arg(long)]
    pub family: Option<PathBuf>,
    /// Sample sizes, e.g. `1,2,4..8`.
    #[arg(long)]
    pub n_list: String,
    #[arg(long, value_enum, default_value_t = SepKind::Auto)]
    pub kind: SepKind,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct CompareArgs {
    /// Profile document for f.
    #[arg(long)]
    pub f: PathBuf,
    /// Profile document for g.
    #[arg(long)]
    pub g: PathBuf,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Encoding {
    /// Bit k set means term k is selected.
    Membership,
    /// Binary prefix codes of the leading bits.
    Prefix,
}

#[derive(Args, Debug, Serialize)]
pub struct BaseArgs {
    /// `cages` for the embedded cage chain, or a family manifest path.
    #[arg(long, default_value = "cages")]
    pub base: String,
    #[arg(long)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Encoding::Membership)]
    pub encoding: Encoding,
}

#[derive(Args, Debug, Serialize)]
pub struct FamilyBuildArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Bit string selecting M; drawn from the seed when absent.
    #[arg(long)]
    pub bits: Option<String>,
    /// Also write the family manifest here.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct DistinguishArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[arg(long)]
    pub m_bits: String,
    #[arg(long)]
    pub n_bits: String,
    /// Target index in M \ N (1-based in the base sequence).
    #[arg(long)]
    pub c: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct AsdimArgs {
    /// Patch as `d,s`: a d-dimensional cube of side s.
    #[arg(long)]
    pub grid: String,
    /// Cover scale, or `auto` for f_h(n/2m) under the lattice growth model.
    #[arg(long, default_value = "auto")]
    pub r: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct SepUpperArgs {
    /// `grid:d[:C]`, `exp:b[:C]` or `empirical[:C]` (needs --in).
    #[arg(long)]
    pub model: String,
    /// Graph measured by the empirical model.
    #[arg(long = "in")]
    pub input: Option<String>,
    /// Number of cover classes.
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n_list: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::ParseCheck(a)
            | Command::Girth(a)
            | Command::Cut(a)
            | Command::ExtractExpander(a) => &a.out,
            Command::Cheeger(a) => &a.graph.out,
            Command::Sep(a) => &a.out,
            Command::ProfileCompare(a) => &a.out,
            Command::Family(FamilyCommand::Build(a)) => &a.out,
            Command::Family(FamilyCommand::Distinguish(a)) => &a.out,
            Command::AsdimCut(a) => &a.out,
            Command::SepUpper(a) => &a.out,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::ParseCheck(_) => "parse-check",
            Command::Girth(_) => "girth",
            Command::Cheeger(_) => "cheeger",
            Command::Cut(_) => "cut",
            Command::ExtractExpander(_) => "extract-expander",
            Command::Sep(_) => "sep",
            Command::ProfileCompare(_) => "profile-compare",
            Command::Family(FamilyCommand::Build(_)) => "family build",
            Command::Family(FamilyCommand::Distinguish(_)) => "family distinguish",
            Command::AsdimCut(_) => "asdim-cut",
            Command::SepUpper(_) => "sep-upper",
        }
    }
}
