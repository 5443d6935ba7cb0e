//! Command-line definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "bsymbol", version, about = "b-symbol weights of irreducible cyclic codes")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GlobalArgs {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of codewords or tuples enumerated by brute force.
    #[arg(long, global = true, env = "BSYMBOL_ENUMERATION_LIMIT", default_value_t = 1 << 20)]
    pub enumeration_limit: u64,
    /// Maximum number of subspaces visited by the generalized-weight oracle.
    #[arg(long, global = true, env = "BSYMBOL_SUBSPACE_LIMIT", default_value_t = 10_000_000)]
    pub subspace_limit: u64,
    /// Absolute tolerance of floating-point checks.
    #[arg(long, global = true, env = "BSYMBOL_TOLERANCE", default_value_t = 1e-6)]
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// The field `F_{p^e}`: explicit flags or a JSON config file `{p, e, modulus}`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct FieldArgs {
    /// Modulus coefficients from degree 0 upwards, e.g. `1,1,0,0,1`.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// JSON field config `{"p": .., "e": .., "modulus": [..]}`.
    #[arg(long)]
    pub field_config: Option<PathBuf>,
}

/// A code `C(p^{sm}, N)` over `F_{p^s}`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct CodeArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub big_n: u64,
    #[command(flatten)]
    pub field: FieldArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Full,
    PerClass,
    Orbits,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum View {
    Distinct,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    Closed,
    Auto,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe a finite field and optionally one of its elements.
    Field(FieldCmd),
    /// Gaussian periods of order k.
    Periods(PeriodsCmd),
    /// Circulant invertibility over every field up to a given order (CSV).
    #[command(name = "conjecture15-scan")]
    ConjectureScan(ScanCmd),
    /// b-symbol weight of one word.
    Weight(WeightCmd),
    /// b-symbol weight distribution of a code.
    Enumerate(EnumerateCmd),
    /// The #U(b, i, N1) profile of a code.
    Uset(UsetCmd),
    /// b-symbol and generalized Hamming weight hierarchies.
    Hierarchy(HierarchyCmd),
    /// Shorten a code on the b-symbol support of a minimal codeword.
    Shorten(ShortenCmd),
    /// Recompute the published #U(b, 0, N1) table.
    Table1,
    /// Recompute the published shortened Simplex codes.
    Table2,
    /// Run the verification suite.
    Verify(VerifyCmd),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FieldCmd {
    #[arg(long, required_unless_present = "field_config")]
    pub p: Option<u32>,
    #[arg(long, required_unless_present = "field_config")]
    pub e: Option<u32>,
    #[command(flatten)]
    pub field: FieldArgs,
    /// An element, as its integer encoding `Σ c_i p^i`.
    #[arg(long)]
    pub element: Option<u32>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PeriodsCmd {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub k: u32,
    /// Trace-count evaluation (default).
    #[arg(long, conflicts_with = "closed")]
    pub exact: bool,
    /// Known closed-form evaluation.
    #[arg(long)]
    pub closed: bool,
    #[command(flatten)]
    pub field: FieldArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ScanCmd {
    #[arg(long, default_value_t = 1 << 12)]
    pub max_order: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WeightCmd {
    /// Comma-separated symbols: integers `Σ c_i p^i`, or coefficient vectors `c0:c1:..`.
    #[arg(long)]
    pub word: String,
    #[arg(long)]
    pub q: u32,
    /// One or more window sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub b: Vec<usize>,
    /// Read symbols as discrete logs of a primitive element of `F_q`, `-` for zero.
    #[arg(long)]
    pub alpha_log: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EnumerateCmd {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long)]
    pub b: usize,
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    pub mode: Mode,
    /// Count distinct codewords or every β ∈ F_Q.
    #[arg(long, value_enum, default_value_t = View::Beta)]
    pub view: View,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct UsetCmd {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long)]
    pub b: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct HierarchyCmd {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Also compute generalized Hamming weights.
    #[arg(long)]
    pub ghw: bool,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ShortenCmd {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long)]
    pub b: usize,
    /// Use the Simplex code `S(m, q)` in place of `C(Q, N)`; `--N` is ignored.
    #[arg(long)]
    pub simplex: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyCmd {
    /// Add the exhaustive grid and the `C(3^10, 2)` checks.
    #[arg(long)]
    pub extended: bool,
}
