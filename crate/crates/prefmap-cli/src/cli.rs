use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Convert, validate, and enumerate ties-permitted ordinal rankings.
///
/// Exit codes: 0 on success, 1 when the input is understood but invalid,
/// 2 on usage, syntax, or malformed-document errors.
#[derive(Parser)]
#[command(name = "prefmap", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Convert between ranking, preference-map, and position-vector forms
    Convert(ConvertArgs),
    /// Check an input against the domain invariants and report violations
    Validate(ValidateArgs),
    /// Exhaustively verify the conversion laws over all rankings of size n
    Check(CheckArgs),
    /// List every ties-permitted ranking of n alternatives
    Enumerate(EnumerateArgs),
}

/// Input representations a raw text argument can be forced to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReprKind {
    /// A ranking expression such as `x1 > x2 ~ x3`
    Ranking,
    /// Raw preference-map entries such as `{1} {2,3} {2,3} {4}`
    Pm,
    /// A raw position vector such as `1 2.5 2.5 4`
    Cs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
pub struct InputArgs {
    /// Inline input; read from --file or stdin when omitted
    pub input: Option<String>,

    /// Read the input from a file
    #[arg(short = 'f', long, conflicts_with = "input")]
    pub file: Option<PathBuf>,

    /// How to interpret raw text input (JSON input is detected by its
    /// "kind" field; this flag then only asserts the expected kind)
    #[arg(long, value_enum)]
    pub kind: Option<ReprKind>,

    /// Roster labels for raw text input, comma separated (default x1..xn)
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<String>>,

    /// Treat the input as a batch: one ranking expression per line,
    /// `#` comments and blank lines ignored
    #[arg(long)]
    pub batch: bool,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Write the output to a file instead of stdout
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Target representation
    #[arg(long, value_enum)]
    pub to: ReprKind,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args)]
pub struct CheckArgs {
    /// Roster size to check exhaustively
    #[arg(long)]
    pub n: usize,

    /// Allow sizes beyond the enumeration guard
    #[arg(long)]
    pub force: bool,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args)]
pub struct EnumerateArgs {
    /// Roster size to enumerate
    #[arg(long)]
    pub n: usize,

    /// Allow sizes beyond the enumeration guard
    #[arg(long)]
    pub force: bool,

    /// Output format: text is one expression per line, json is one array
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(flatten)]
    pub out: OutputArgs,
}
