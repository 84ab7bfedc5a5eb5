//! `acsm` command-line interface.
//!
//! Standard output carries data (JSON or CSV); diagnostics go to standard
//! error. Exit codes: 0 success, 2 input error, 1 internal error.

mod bench;
mod compare;
mod gen;
mod retrieve;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::ingest::{self, AlphabetSource};
use crate::matrix::SymbolMatrix;
use crate::measures::MeasureKind;
use crate::params::DistanceMetric;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "acsm", version, about = "Average Common Submatrix (dis)similarity measures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare two matrices and print a similarity report.
    Compare(compare::CompareArgs),
    /// Rank a labelled corpus by dissimilarity to a query matrix.
    Retrieve(retrieve::RetrieveArgs),
    /// Time the measures on seeded random pairs; prints CSV.
    Bench(bench::BenchArgs),
    /// Write seeded random matrices (optionally a planted pair) as CSV.
    Gen(gen::GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureName {
    Acsm,
    Approx,
    Eacsm,
}

/// Measure selection shared by `compare` and `retrieve`.
#[derive(Debug, Clone, Args)]
pub struct MeasureArgs {
    #[arg(long, value_enum, default_value_t = MeasureName::Acsm)]
    pub measure: MeasureName,
    /// Minimum submatrix area.
    #[arg(long, default_value_t = 1)]
    pub alpha: u64,
    /// Sampling interval (approx only).
    #[arg(long)]
    pub interval: Option<usize>,
    /// Odd neighbourhood side (eacsm only).
    #[arg(long)]
    pub epsilon: Option<usize>,
    /// Strict distance threshold (eacsm only).
    #[arg(long)]
    pub tau: Option<f64>,
    /// hamming | mad | nmad (eacsm only; default hamming).
    #[arg(long)]
    pub metric: Option<String>,
    /// Frequency-gate threshold (eacsm only; default 0 = off).
    #[arg(long)]
    pub p0: Option<f64>,
}

impl MeasureArgs {
    /// Resolves the flags into a measure, rejecting flags the measure does not use.
    pub fn kind(&self) -> Result<MeasureKind, CliError> {
        let reject = |flag: &str, present: bool| -> Result<(), CliError> {
            if present {
                Err(CliError::input(format!(
                    "--{flag} is not valid with --measure {}",
                    self.measure
                        .to_possible_value()
                        .expect("no skipped variants")
                        .get_name()
                )))
            } else {
                Ok(())
            }
        };
        let eacsm_flags = [
            ("epsilon", self.epsilon.is_some()),
            ("tau", self.tau.is_some()),
            ("metric", self.metric.is_some()),
            ("p0", self.p0.is_some()),
        ];
        let kind = match self.measure {
            MeasureName::Acsm => {
                reject("interval", self.interval.is_some())?;
                for (flag, present) in eacsm_flags {
                    reject(flag, present)?;
                }
                MeasureKind::Acsm { alpha: self.alpha }
            }
            MeasureName::Approx => {
                for (flag, present) in eacsm_flags {
                    reject(flag, present)?;
                }
                let interval = self
                    .interval
                    .ok_or_else(|| CliError::input("--measure approx requires --interval"))?;
                MeasureKind::ApproxAcsm {
                    alpha: self.alpha,
                    interval,
                }
            }
            MeasureName::Eacsm => {
                reject("interval", self.interval.is_some())?;
                let epsilon = self
                    .epsilon
                    .ok_or_else(|| CliError::input("--measure eacsm requires --epsilon"))?;
                let tau = self
                    .tau
                    .ok_or_else(|| CliError::input("--measure eacsm requires --tau"))?;
                let metric = match &self.metric {
                    Some(name) => name.parse::<DistanceMetric>()?,
                    None => DistanceMetric::HammingFraction,
                };
                MeasureKind::Eacsm {
                    alpha: self.alpha,
                    epsilon,
                    metric,
                    tau,
                    p0: self.p0.unwrap_or(0.0),
                }
            }
        };
        kind.params()?;
        Ok(kind)
    }
}

/// Alphabet handling shared by commands that load two or more matrices.
#[derive(Debug, Clone, Args)]
pub struct LoadArgs {
    /// Reduce every input to this many symbols before comparing.
    #[arg(long)]
    pub quantize: Option<u32>,
    /// Alphabet size for grid (CSV) inputs instead of max+1.
    #[arg(long)]
    pub alphabet: Option<u32>,
}

/// A matrix loaded from disk together with how its alphabet was obtained.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub matrix: SymbolMatrix,
    pub source: AlphabetSource,
}

impl LoadArgs {
    pub fn load(&self, path: &Path) -> Result<Loaded, Error> {
        let (matrix, source) = ingest::load_path(path)?;
        let matrix = match (self.alphabet, source) {
            (Some(l), AlphabetSource::Inferred) => matrix.widen_alphabet(l)?,
            _ => matrix,
        };
        let source = if self.alphabet.is_some() {
            AlphabetSource::Declared
        } else {
            source
        };
        Ok(Loaded { matrix, source })
    }

    /// Brings two loaded matrices to a common alphabet, then applies `--quantize`.
    ///
    /// An inferred (CSV) alphabet is only a lower bound, so it is widened to
    /// match the other input; two declared alphabets must agree.
    pub fn unify(&self, a: &Loaded, b: &Loaded) -> Result<(SymbolMatrix, SymbolMatrix), Error> {
        let (la, lb) = (a.matrix.alphabet_size(), b.matrix.alphabet_size());
        let (ma, mb) = if la == lb {
            (a.matrix.clone(), b.matrix.clone())
        } else if la < lb && a.source == AlphabetSource::Inferred {
            (a.matrix.clone().widen_alphabet(lb)?, b.matrix.clone())
        } else if lb < la && b.source == AlphabetSource::Inferred {
            (a.matrix.clone(), b.matrix.clone().widen_alphabet(la)?)
        } else {
            return Err(Error::AlphabetMismatch { a: la, b: lb });
        };
        match self.quantize {
            Some(target) => Ok((ingest::quantize(&ma, target)?, ingest::quantize(&mb, target)?)),
            None => Ok((ma, mb)),
        }
    }
}

/// Measure parameters as a JSON object.
pub fn params_json(kind: &MeasureKind) -> serde_json::Value {
    match *kind {
        MeasureKind::Acsm { alpha } => json!({ "alpha": alpha }),
        MeasureKind::ApproxAcsm { alpha, interval } => json!({ "alpha": alpha, "interval": interval }),
        MeasureKind::Eacsm {
            alpha,
            epsilon,
            metric,
            tau,
            p0,
        } => json!({
            "alpha": alpha,
            "epsilon": epsilon,
            "metric": metric.short_name(),
            "tau": tau,
            "p0": p0,
        }),
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unusable input files (exit 2).
    Input(String),
    /// Anything else (exit 1).
    Internal(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Internal(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(format!("serialization failed: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compare(args) => compare::run(args, out),
        Command::Retrieve(args) => retrieve::run(args, out, err),
        Command::Bench(args) => bench::run(args, out),
        Command::Gen(args) => gen::run(args, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
