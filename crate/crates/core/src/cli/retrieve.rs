use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use super::{params_json, CliError, LoadArgs, MeasureArgs};
use crate::error::Error;
use crate::measures::{measure, MeasureKind};

#[derive(Debug, Args)]
pub struct RetrieveArgs {
    pub query: PathBuf,
    /// Directory whose subdirectories are labels containing matrix files.
    pub corpus_root: PathBuf,
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    #[command(flatten)]
    pub measure: MeasureArgs,
    #[command(flatten)]
    pub load: LoadArgs,
}

#[derive(Debug, Clone, Serialize)]
pub struct Ranked {
    pub path: String,
    pub label: String,
    pub dissimilarity: f64,
}

#[derive(Debug, Serialize)]
struct RetrieveOutput {
    query: String,
    measure: &'static str,
    params: serde_json::Value,
    k: usize,
    corpus_size: usize,
    skipped: usize,
    majority_label: Option<String>,
    results: Vec<Ranked>,
}

/// `(label, file)` pairs under `root/<label>/`, sorted by path.
fn corpus_files(root: &Path) -> Result<Vec<(String, PathBuf)>, Error> {
    let io_err = |e: std::io::Error| Error::Io {
        path: root.to_path_buf(),
        message: e.to_string(),
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(root).map_err(io_err)? {
        let entry = entry.map_err(io_err)?;
        let path = entry.path();
        if !path.is_dir() {
            continue;
        }
        let label = entry.file_name().to_string_lossy().into_owned();
        let mut stack = vec![path];
        while let Some(dir) = stack.pop() {
            for item in std::fs::read_dir(&dir).map_err(io_err)? {
                let item = item.map_err(io_err)?.path();
                if item.is_dir() {
                    stack.push(item);
                } else {
                    files.push((label.clone(), item));
                }
            }
        }
    }
    files.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(files)
}

/// Most frequent label among `ranked`; ties go to the label ranked first.
pub fn majority_label(ranked: &[Ranked]) -> Option<String> {
    let mut counts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for (rank, r) in ranked.iter().enumerate() {
        let entry = counts.entry(&r.label).or_insert((0, rank));
        entry.0 += 1;
    }
    counts
        .into_iter()
        .max_by(|a, b| a.1 .0.cmp(&b.1 .0).then(b.1 .1.cmp(&a.1 .1)))
        .map(|(label, _)| label.to_string())
}

/// Sorts ascending by dissimilarity, ties by path, and keeps the first `k`.
pub fn rank(mut items: Vec<Ranked>, k: usize) -> Vec<Ranked> {
    items.sort_by(|a, b| {
        a.dissimilarity
            .total_cmp(&b.dissimilarity)
            .then_with(|| a.path.cmp(&b.path))
    });
    items.truncate(k);
    items
}

fn score(args: &RetrieveArgs, kind: &MeasureKind, query: &super::Loaded, path: &Path) -> Result<f64, Error> {
    let item = args.load.load(path)?;
    let (a, b) = args.load.unify(query, &item)?;
    Ok(measure(&a, &b, kind)?.dissimilarity)
}

pub fn run(args: &RetrieveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let kind = args.measure.kind()?;
    if args.k == 0 {
        return Err(CliError::input("--k must be ≥ 1"));
    }
    let query = args.load.load(&args.query)?;
    query.matrix.side()?;
    let files = corpus_files(&args.corpus_root)?;

    let scored: Vec<(String, PathBuf, Result<f64, Error>)> = files
        .into_par_iter()
        .map(|(label, path)| {
            let result = score(args, &kind, &query, &path);
            (label, path, result)
        })
        .collect();

    let mut items = Vec::new();
    let mut skipped = 0;
    for (label, path, result) in scored {
        match result {
            Ok(dissimilarity) => items.push(Ranked {
                path: path.display().to_string(),
                label,
                dissimilarity,
            }),
            Err(e) => {
                skipped += 1;
                writeln!(err, "warning: skipping {}: {e}", path.display())?;
            }
        }
    }
    if items.is_empty() {
        return Err(CliError::input(format!(
            "empty corpus: no usable matrices under {}",
            args.corpus_root.display()
        )));
    }
    let corpus_size = items.len();
    let results = rank(items, args.k);
    let doc = RetrieveOutput {
        query: args.query.display().to_string(),
        measure: kind.name(),
        params: params_json(&kind),
        k: args.k,
        corpus_size,
        skipped,
        majority_label: majority_label(&results),
        results,
    };
    serde_json::to_writer(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}
