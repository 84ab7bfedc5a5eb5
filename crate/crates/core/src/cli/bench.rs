use std::io::Write;
use std::time::Instant;

use clap::Args;

use super::CliError;
use crate::ingest::gen_random;
use crate::measures::{measure, MeasureKind};
use crate::params::DistanceMetric;

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Matrix sides to time, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Neighbourhood sides for eacsm, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "5")]
    pub epsilons: Vec<usize>,
    /// Sampling intervals for approx rows, comma-separated (none by default).
    #[arg(long, value_delimiter = ',')]
    pub intervals: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub alphabet: u32,
    #[arg(long, default_value_t = 1)]
    pub alpha: u64,
    /// eacsm distance metric.
    #[arg(long, default_value = "hamming")]
    pub metric: String,
    /// eacsm distance threshold.
    #[arg(long, default_value_t = 0.25)]
    pub tau: f64,
}

/// Seed of matrix `which` (0 = A, 1 = B) for a given size and trial.
pub fn pair_seed(seed: u64, n: usize, trial: usize, which: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((n as u64) << 32)
        .wrapping_add((trial as u64) << 1)
        .wrapping_add(which)
}

pub const HEADER: &str = "measure,n,m,epsilon,interval,trial,elapsed_ms";

pub fn run(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let metric: DistanceMetric = args.metric.parse()?;
    if args.trials == 0 {
        return Err(CliError::input("--trials must be ≥ 1"));
    }
    let mut configs: Vec<MeasureKind> = vec![MeasureKind::Acsm { alpha: args.alpha }];
    configs.extend(args.epsilons.iter().map(|&epsilon| MeasureKind::Eacsm {
        alpha: args.alpha,
        epsilon,
        metric,
        tau: args.tau,
        p0: 0.0,
    }));
    configs.extend(args.intervals.iter().map(|&interval| MeasureKind::ApproxAcsm {
        alpha: args.alpha,
        interval,
    }));
    for kind in &configs {
        kind.params()?;
    }

    writeln!(out, "{HEADER}")?;
    for &n in &args.sizes {
        if n == 0 {
            return Err(CliError::input("--sizes entries must be ≥ 1"));
        }
        let pairs = (0..args.trials)
            .map(|t| {
                Ok((
                    gen_random(n, args.alphabet, pair_seed(args.seed, n, t, 0))?,
                    gen_random(n, args.alphabet, pair_seed(args.seed, n, t, 1))?,
                ))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        for kind in &configs {
            // warm-up, not reported
            measure(&pairs[0].0, &pairs[0].1, kind)?;
            for (trial, (a, b)) in pairs.iter().enumerate() {
                let started = Instant::now();
                measure(a, b, kind)?;
                let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
                let (epsilon, interval) = match *kind {
                    MeasureKind::Acsm { .. } => (String::new(), String::new()),
                    MeasureKind::Eacsm { epsilon, .. } => (epsilon.to_string(), String::new()),
                    MeasureKind::ApproxAcsm { interval, .. } => (String::new(), interval.to_string()),
                };
                writeln!(
                    out,
                    "{},{n},{n},{epsilon},{interval},{trial},{elapsed_ms:.6}",
                    kind.name()
                )?;
            }
        }
    }
    Ok(())
}
