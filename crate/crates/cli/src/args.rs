use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mcz", version, about = "Zeta-family values, multiple cosine functions and identity checks")]
pub struct Cli {
    /// TOML file with default settings (`tol`, `jobs`, `format`).
    #[arg(long, global = true, env = "MCZ_CONFIG")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function and print value, error bound and route.
    Eval(EvalArgs),
    /// Run identity checks and optionally write a report.
    Verify(VerifyArgs),
    /// Print a worked table: closed form, recomputed value, residual.
    Table(TableArgs),
    /// Time routes over a grid and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// zeta, hurwitz, zeta_e, lambda, beta, L, li, cl2, lgamma, trigamma,
    /// barnes_g, mcos, msin, euler_integral
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long)]
    pub r: Option<u32>,
    /// Polylogarithm order.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Character for `L`: chi3, chi6 or principal:M.
    #[arg(long)]
    pub chi: Option<String>,
    /// Sign of the unit-circle point for `li`: `-e^{i pi x}` (plus) or `-e^{-i pi x}` (minus).
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub sign: SignArg,
    #[arg(long, default_value = "auto")]
    pub route: String,
    /// Fail with exit 3 when the error bound exceeds this.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated tags or ids; `all` selects everything but errata.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Report format; inferred from the report extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<ReportFormat>,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Print the identity catalogue as Markdown and exit.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// example-2.6, corollary-2.9, example-2.10 or section5-sums
    #[arg(long)]
    pub name: String,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// mcos, msin or euler_integral
    #[arg(long = "fn")]
    pub function: String,
    #[arg(long, default_value_t = 2)]
    pub r: u32,
    /// Comma-separated routes.
    #[arg(long, default_value = "series,integral")]
    pub routes: String,
    /// start:stop:step, stop inclusive.
    #[arg(long, default_value = "0.05:0.45:0.05")]
    pub grid: String,
    /// Product-route cutoff.
    #[arg(long, default_value_t = 100_000)]
    pub terms: u64,
}
