use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fibideal::kr::Suite;

const AFTER_HELP: &str = "\
Output formats:
  json  one object per line; every integer is a decimal string.
        Elements a + bφ of Z[φ] are written {\"a\": .., \"b\": ..} in the basis {1, φ},
        where α = (3+√5)/2 = 1 + φ. Gaussian integers are written {\"re\": .., \"im\": ..}.
  csv   header line, then raw decimal digits.

Exit status: 0 success, 1 verification failure or method mismatch, 2 usage error.
Diagnostics go to stderr; set FIBIDEAL_LOG=debug|info|quiet.";

#[derive(Debug, Parser)]
#[command(name = "fibideal", version, about = "Ideal-counting polynomials C_n(q) and the sequence λ_n", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print λ_1..λ_max by one or all methods.
    Lambda(LambdaArgs),
    /// Print the coefficients of C_n(q) and exact evaluations.
    Cn(CnArgs),
    /// Recompute and check the identities for 1 ≤ n ≤ max.
    Verify(VerifyArgs),
    /// Dump the coefficients of one of the infinite products.
    Series(SeriesArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write results to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads for per-n work (default: all cores).
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    #[arg(long = "max", value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,

    #[arg(long, value_enum, default_value_t = Method::Product)]
    pub method: Method,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CnArgs {
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,

    /// Comma-separated evaluation points.
    #[arg(long = "eval", value_enum, value_delimiter = ',')]
    pub eval_points: Vec<EvalPoint>,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "max", value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,

    /// Comma-separated subset of theorem,gf,lattice,sigma,shape.
    #[arg(long, value_delimiter = ',', default_value = "theorem,gf,lattice,sigma,shape")]
    pub suites: Vec<Suite>,

    /// Upper bound on n for the symbolic gf suite.
    #[arg(long, value_name = "N", default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub gf_max: u64,

    /// Write the full report as JSON to FILE.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Truncation order: coefficients of t^0..t^N are printed.
    #[arg(long = "max", value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,

    #[arg(long, value_enum, default_value_t = SeriesKind::Lambda)]
    pub kind: SeriesKind,

    /// Value of q for the kr product.
    #[arg(long, value_enum, default_value_t = QValue::Symbolic)]
    pub at: QValue,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Product,
    Divisor,
    Eval,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalPoint {
    Alpha,
    #[value(name = "minus_one")]
    MinusOne,
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// ∏ (1 + F(t^m)), coefficients λ_n.
    Lambda,
    /// ∏ (1 − t^m)² / (1 − (q + q⁻¹) t^m + t^{2m}).
    Kr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QValue {
    Symbolic,
    Alpha,
    One,
}
