use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "gammadet", version, about = "Exact moment transforms, mod-phi data and limit-theorem checks for log-determinants and log-volumes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Re-run the configuration recorded in a JSON output of this tool.
    #[arg(long, global = true, value_name = "FILE")]
    pub replay: Option<PathBuf>,

    /// Output format; `sample` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Everything that determines a result. Serialized into each JSON output so
/// the run can be replayed.
#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Exact log-moment transform and cumulants.
    Mellin(MellinArgs),
    /// Terms of the decomposition of L(p,l,alpha;z) and the identity residual.
    Expand(ExpandArgs),
    /// Mod-phi data of an ensemble in a growth regime.
    Modphi(ModphiArgs),
    /// Extended CLT and precise-deviation tails.
    Deviation(DeviationArgs),
    /// Berry-Esseen bound on the Kolmogorov distance.
    BeBound(BeArgs),
    /// Local-limit window probability.
    Llt(LltArgs),
    /// Exact Monte Carlo draws of the log statistic.
    Sample(SampleArgs),
    /// Run a named check suite and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct EnsembleArgs {
    /// Ensemble kind: laguerre, jacobi, ginibre, gue, fixed-trace-gue, chiral,
    /// bdg (with --variant), bdg1..bdg4, parallelotope-*, simplex-*.
    #[arg(long)]
    pub ensemble: Option<String>,
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub n1: u64,
    #[arg(long, default_value_t = 0)]
    pub n2: u64,
    #[arg(long, default_value_t = 0.0)]
    pub nu: f64,
    /// Symmetry class 1-4 for `--ensemble bdg`.
    #[arg(long)]
    pub variant: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct RegimeArgs {
    /// full, vanishing-gap, fixed-gap, growing-gap or fixed-p; may carry the
    /// ensemble as a prefix, as in laguerre-full. Inferred when absent.
    #[arg(long)]
    pub regime: Option<String>,
    /// Gap parameter for vanishing-gap and fixed-gap.
    #[arg(long)]
    pub gap: Option<f64>,
    /// Jacobi with p fixed: n1 ~ tau1 n.
    #[arg(long)]
    pub tau1: Option<f64>,
    /// Jacobi with p fixed: n2 ~ tau2 n.
    #[arg(long)]
    pub tau2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct PointArgs {
    #[arg(long = "z-re", default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_re: f64,
    #[arg(long = "z-im", default_value_t = 0.0, allow_hyphen_values = true)]
    pub z_im: f64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct MellinArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub point: PointArgs,
    /// Absolute quadrature tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ExpandArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 0.0)]
    pub l: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub point: PointArgs,
    /// Largest accepted identity residual.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ModphiArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub regime: RegimeArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub point: PointArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct DeviationArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub regime: RegimeArgs,
    /// Deviation level on the X_n / t_n scale.
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ZoneArgs {
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub v: Option<f64>,
    #[arg(long)]
    pub w: Option<f64>,
    #[arg(long = "zone-d")]
    pub d: Option<f64>,
    #[arg(long)]
    pub k1: Option<f64>,
    #[arg(long)]
    pub k2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct BeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub regime: RegimeArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub zone: ZoneArgs,
    /// Also compute the exact Kolmogorov distance by CF inversion.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct LltArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub regime: RegimeArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub zone: ZoneArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub b: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    /// Also compute the exact window probability by CF inversion.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SampleArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    #[arg(long)]
    pub count: usize,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    /// Suite name: mellin, expansion, modphi, sampling or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
}
