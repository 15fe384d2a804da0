use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bcf",
    version,
    about = "Bifurcating continued fractions in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Alpha,
    Beta,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an m-tuple of reals into m digit sequences.
    Expand(ExpandArgs),
    /// Tabulate rational convergents of a digit specification.
    Convergents(ConvergentsArgs),
    /// Draw the bifurcating tree behind an order-2 convergent.
    Tree(TreeArgs),
    /// Cubic polynomials for constant period-1 digits.
    ClosedForm(ClosedFormArgs),
    /// k-bonacci numbers and their ratio limit.
    Kbonacci(KbonacciArgs),
    /// Expand and report the period of the digit sequences.
    Period(PeriodArgs),
    /// Search for small integer cubics vanishing near a value.
    CubicHunt(CubicHuntArgs),
    /// Evaluate convergents until they settle.
    Reconstruct(ReconstructArgs),
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Values as rat:, dec: or alg: specifications, one per sequence.
    #[arg(required = true)]
    pub values: Vec<String>,
    #[arg(long, default_value_t = 20)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Detect a period and fold it into the cycle.
    #[arg(long)]
    pub period: bool,
    /// Add creation metadata (timestamp) to the output.
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct DigitsArg {
    /// Digit file path, `-` for standard input, or inline notation such as
    /// `1(112)/(100)/(100)`.
    #[arg(long)]
    pub digits: String,
}

#[derive(Debug, Args)]
pub struct ConvergentsArgs {
    #[command(flatten)]
    pub digits: DigitsArg,
    /// Last depth; finite specifications stop at their final digit.
    #[arg(long, default_value_t = 10)]
    pub upto: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value = "backward")]
    pub evaluator: String,
    /// Fractional digits in decimal renderings.
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    #[command(flatten)]
    pub digits: DigitsArg,
    #[arg(long)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Which::Alpha)]
    pub which: Which,
}

#[derive(Debug, Args)]
pub struct ClosedFormArgs {
    #[arg(
        long,
        required_unless_present = "all_ones",
        conflicts_with = "all_ones"
    )]
    pub a: Option<u64>,
    #[arg(long, requires = "a")]
    pub b: Option<u64>,
    /// The all-ones specification of the given order instead.
    #[arg(long, requires = "order")]
    pub all_ones: bool,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct KbonacciArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    /// Also report the limiting ratio to this tolerance.
    #[arg(long)]
    pub limit: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct PeriodArgs {
    #[arg(required = true)]
    pub values: Vec<String>,
    #[arg(long, default_value_t = 40)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CubicHuntArgs {
    /// Value specification to probe.
    #[arg(long, required_unless_present = "digits", conflicts_with = "digits")]
    pub value: Option<String>,
    /// Digit specification whose first component is probed.
    #[arg(long)]
    pub digits: Option<String>,
    /// Convergence tolerance when probing a digit specification.
    #[arg(long, default_value = "1e-20")]
    pub reconstruct_tol: String,
    #[arg(long, default_value_t = 10)]
    pub height: i64,
    #[arg(long, default_value = "1e-9")]
    pub tol: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[command(flatten)]
    pub digits: DigitsArg,
    #[arg(long, default_value = "1e-8")]
    pub tol: String,
    #[arg(long, default_value_t = 500)]
    pub max_depth: usize,
    #[arg(long, default_value = "backward")]
    pub evaluator: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
}
