use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Args;

use super::CliError;
use crate::error::Error;
use crate::ingest::{gen_planted_pair, gen_random, render_csv};

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Side of A.
    #[arg(long)]
    pub n: usize,
    /// Side of B (planted pairs only; defaults to n).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub alphabet: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Side of a block copied from A into B; produces a pair.
    #[arg(long)]
    pub plant: Option<usize>,
    /// Output file for A (standard output when omitted and no pair is generated).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output file for B (planted pairs only).
    #[arg(long)]
    pub out_b: Option<PathBuf>,
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| {
        Error::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        }
        .into()
    })
}

pub fn run(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n == 0 || args.alphabet == 0 {
        return Err(CliError::input("--n and --alphabet must be ≥ 1"));
    }
    let Some(k) = args.plant else {
        if args.m.is_some() || args.out_b.is_some() {
            return Err(CliError::input("--m and --out-b require --plant"));
        }
        let matrix = gen_random(args.n, args.alphabet, args.seed)?;
        let header = [format!("seed={} n={} alphabet={}", args.seed, args.n, args.alphabet)];
        let text = render_csv(&matrix, &header);
        return match &args.out {
            Some(path) => write_file(path, &text),
            None => Ok(out.write_all(text.as_bytes())?),
        };
    };
    let m = args.m.unwrap_or(args.n);
    let (Some(path_a), Some(path_b)) = (&args.out, &args.out_b) else {
        return Err(CliError::input("--plant requires --out and --out-b"));
    };
    let pair = gen_planted_pair(args.n, m, args.alphabet, k, args.seed)?;
    let (i, j) = pair.block_anchor;
    let meta = |role: &str| {
        vec![format!(
            "seed={} n={} m={m} alphabet={} plant_k={k} plant_i={i} plant_j={j} role={role}",
            args.seed, args.n, args.alphabet
        )]
    };
    write_file(path_a, &render_csv(&pair.a, &meta("a")))?;
    write_file(path_b, &render_csv(&pair.b, &meta("b")))?;
    Ok(())
}
