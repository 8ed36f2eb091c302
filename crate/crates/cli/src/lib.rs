//! Command-line front end for `varregion`: sharp bounds, region geometry,
//! the crossover constant `b0`, power-deformation bounds and the
//! verification suites.
//!
//! [`run`] is the whole program; `main` only wires it to the process.

// `!(x < y)` is used deliberately so that NaN inputs are rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub mod commands;
pub mod number;
pub mod output;
pub mod record;
pub mod verify;

pub use record::{Bound, ClassTag, Functional, ResultRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] varregion::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "varregion", version, about = "Variability regions of log(f(z)/z) for univalent function classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sharp value of Φ^±(b) or Ψ(t) for a class, pointwise or over the disk.
    Bound(BoundArgs),
    /// Boundary of a variability region as CSV or SVG.
    Region(RegionArgs),
    /// The crossover constant b0 of the close-to-convex bound.
    B0(B0Args),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Sharp bound of log|f_c(z)/z| for the power deformation with c = a + ib.
    Power(PowerArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Plus,
    Minus,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("direction").required(true).args(["b", "t"]))]
pub struct BoundArgs {
    #[arg(long, value_enum)]
    pub class: ClassTag,
    /// plus (supremum) or minus (infimum); required with --b
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// direction angle for Ψ(t); with --class ctc --kind minus gives the infimum Ψ^-(t)
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// evaluation radius |z|; absent means the whole disk
    #[arg(long)]
    pub r: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    /// the plane of γ, Ω = -W(C)
    Omega,
    /// the plane of the values log(f(z)/z)
    W,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long, value_enum)]
    pub class: ClassTag,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// output file; standard output when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// ctc only: boundary of the pointwise region W_r(C) instead of γ
    #[arg(long)]
    pub pointwise: bool,
    /// ctc only: the common-tangent segments (SVG) or the hull boundary (CSV)
    #[arg(long)]
    pub hull: bool,
    /// ctc full region only: which plane the curve is written in
    #[arg(long, value_enum, default_value_t = FrameArg::Omega)]
    pub frame: FrameArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Analytic,
    Geometric,
    Both,
}

#[derive(Debug, Args)]
pub struct B0Args {
    #[arg(long, value_enum, default_value_t = Method::Analytic)]
    pub method: Method,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Oracle,
    Containment,
    Powerdef,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// starlike samples per radius; close-to-convex runs use a tenth of this
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// overrides every check's tolerance
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
}

/// Parses `args` (including the program name) and executes the command,
/// writing normal output to `out` and diagnostics to `err`. Returns the exit
/// status: 0 success, 1 verification failure, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Bound(a) => commands::cmd_bound(a, out),
        Command::Region(a) => commands::cmd_region(a, out),
        Command::B0(a) => commands::cmd_b0(a, out),
        Command::Verify(a) => verify::cmd_verify(a, out),
        Command::Power(a) => commands::cmd_power(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
