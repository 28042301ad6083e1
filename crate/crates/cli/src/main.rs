mod chart;
mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Numerical checks for Orlicz functions, their sequence spaces and disjoint sums
/// in `L_p + L_2`.
#[derive(Parser, Debug)]
#[command(name = "orlicz-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Root output directory.
    #[arg(long, default_value = "out")]
    outdir: PathBuf,
    /// Run directory name; defaults to a timestamp.
    #[arg(long)]
    label: Option<String>,
    /// Omit the timestamp comment from SVG charts.
    #[arg(long)]
    deterministic: bool,
    /// Flat key=value file of flag defaults. Command-line flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exponent estimates and the ε-margin verdict.
    Indices(IndicesArgs),
    /// Equivalence constant between two Orlicz functions.
    Equivalence(EquivalenceArgs),
    /// Cesàro head and tail ratios of m.
    Cesaro(CesaroArgs),
    /// Main-condition constant for f = m or a tabulated rearrangement.
    MainCond(MainCondArgs),
    /// Main condition against the ε-margin for one family.
    Theorem33(Theorem33Args),
    /// The explicit pair x, y and its consequences.
    #[command(subcommand)]
    Counterexample(CounterexampleCommand),
    /// Monte Carlo norms of sums of independent symmetric copies.
    Simulate(SimulateArgs),
    /// Monte Carlo check of the L_p + L_2 formula for one coefficient vector.
    Rosenthal(RosenthalArgs),
}

#[derive(Subcommand, Debug)]
enum CounterexampleCommand {
    /// Two-sided bounds on the minimum integral for every L up to --max-log.
    Lemma51(Lemma51Args),
    /// Witnesses that the distributions of x and y are not equivalent.
    Witness(WitnessArgs),
    /// Induced Orlicz function against t/log(e/t).
    Induced(InducedArgs),
    /// Disjoint-copy norms against Luxemburg norms.
    Prop53(Prop53Args),
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum Family {
    Power,
    Powerlog,
    Tabulated,
    InducedX,
    InducedY,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum SeriesArg {
    X,
    Y,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum SchemeArg {
    Flat,
    Unit,
    Geometric,
}

#[derive(Args, Serialize, Debug, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value = "power")]
    family: Family,
    /// Exponent for --family power.
    #[arg(long)]
    q: Option<f64>,
    /// CSV with columns log2_t, log2_M for --family tabulated.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Number of closed-form terms for the induced families.
    #[arg(long, default_value_t = 14)]
    k: u32,
}

#[derive(Args, Serialize, Debug)]
struct IndicesArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    #[arg(long, default_value_t = -64, allow_hyphen_values = true)]
    log2_lo: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    log2_hi: i64,
    #[arg(long, default_value_t = 0.02)]
    margin: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct EquivalenceArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Family on the other side.
    #[arg(long, value_enum, default_value = "powerlog")]
    against: Family,
    #[arg(long)]
    against_q: Option<f64>,
    #[arg(long, default_value_t = -256, allow_hyphen_values = true)]
    log2_lo: i64,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    log2_hi: i64,
    #[arg(long, default_value_t = 10.0)]
    cap: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct CesaroArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// Single point; overrides the grid bounds.
    #[arg(long, allow_hyphen_values = true)]
    log2_t: Option<f64>,
    #[arg(long, default_value_t = -40, allow_hyphen_values = true)]
    log2_lo: i64,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    log2_hi: i64,
    /// Truncate the head integral at 2^floor instead of integrating to 0.
    #[arg(long, allow_hyphen_values = true)]
    log2_floor: Option<f64>,
    #[arg(long, default_value_t = 10.0)]
    cap: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct MainCondArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// CSV with columns log2_value, log2_measure for f*; defaults to m.
    #[arg(long)]
    rearrangement: Option<PathBuf>,
    #[arg(long, default_value_t = -40, allow_hyphen_values = true)]
    log2_lo: i64,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    log2_hi: i64,
    #[arg(long, default_value_t = 10.0)]
    cap: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct Theorem33Args {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    #[arg(long, default_value_t = -256, allow_hyphen_values = true)]
    log2_lo: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    log2_hi: i64,
    #[arg(long, default_value_t = 10.0)]
    cap: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct Lemma51Args {
    #[arg(long, value_enum, default_value = "x")]
    series: SeriesArg,
    /// Largest L = log2(1/t).
    #[arg(long, default_value_t = 4096)]
    max_log: u64,
    /// Number of terms; defaults to the smallest admissible value.
    #[arg(long)]
    k: Option<u32>,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct WitnessArgs {
    /// log2 C for each witness.
    #[arg(long, value_delimiter = ',', default_values_t = [1i64, 16, 64])]
    log2_c: Vec<i64>,
    #[arg(long, default_value_t = 14)]
    k: u32,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct InducedArgs {
    #[arg(long, value_enum, default_value = "x")]
    series: SeriesArg,
    #[arg(long, default_value_t = 14)]
    k: u32,
    #[arg(long, default_value_t = -256, allow_hyphen_values = true)]
    log2_lo: i64,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    log2_hi: i64,
    /// Lower end of the extended grid used for the stability check.
    #[arg(long, default_value_t = -512, allow_hyphen_values = true)]
    wide_lo: i64,
    #[arg(long, default_value_t = 0.1)]
    max_growth: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct Prop53Args {
    #[arg(long, default_value_t = 14)]
    k: u32,
    /// Flat vectors of length 2^j for j in [log2-lo, log2-hi].
    #[arg(long, default_value_t = 0)]
    log2_lo: i64,
    #[arg(long, default_value_t = 16)]
    log2_hi: i64,
    #[arg(long, default_value_t = 10.0)]
    cap: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct SimulateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    #[arg(long, value_delimiter = ',', default_values_t = [16usize, 64, 256, 1024])]
    n: Vec<usize>,
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value = "flat")]
    scheme: SchemeArg,
    #[arg(long, default_value_t = 0.5)]
    ratio: f64,
    /// Atoms in the dyadic step approximation of m.
    #[arg(long, default_value_t = 64)]
    atoms: u32,
    /// CSV rearrangement to sample instead of m; the reference becomes exact.
    #[arg(long)]
    rearrangement: Option<PathBuf>,
    /// Largest admissible band max/min.
    #[arg(long, default_value_t = 3.0)]
    max_band: f64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Serialize, Debug)]
struct RosenthalArgs {
    /// Atoms value:measure of a probability rearrangement.
    #[arg(long, value_delimiter = ',', default_values_t = ["4:0.125".to_string(), "2:0.375".to_string(), "1:0.5".to_string()])]
    atoms: Vec<String>,
    /// CSV rearrangement; overrides --atoms.
    #[arg(long)]
    rearrangement: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_values_t = [1.0f64])]
    a: Vec<f64>,
    #[arg(long, default_value_t = 1.5)]
    p: f64,
    #[arg(long, default_value_t = 20000)]
    trials: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[serde(skip)]
    #[command(flatten)]
    common: Common,
}

/// Bad flags, config or environment; maps to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn init_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("ORLICZ_LAB_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| usage(format!("ORLICZ_LAB_THREADS must be a positive integer, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(argv: Vec<String>) -> anyhow::Result<bool> {
    let argv = config::expand(argv)?;
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            e.print()?;
            if code == 0 {
                std::process::exit(0);
            }
            return Err(usage("invalid arguments"));
        }
    };
    init_threads()?;
    commands::dispatch(cli.command)
}

fn main() -> ExitCode {
    match run(std::env::args().collect()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<UsageError>() => {
            if e.to_string() != "invalid arguments" {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
