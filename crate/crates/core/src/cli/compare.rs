use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;

use super::{params_json, CliError, LoadArgs, MeasureArgs};
use crate::measures::measure;
use crate::params::MatchResult;
use crate::report::SimilarityReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Plain,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub path_a: PathBuf,
    pub path_b: PathBuf,
    #[command(flatten)]
    pub measure: MeasureArgs,
    #[command(flatten)]
    pub load: LoadArgs,
    /// Include the per-position match map in the output.
    #[arg(long)]
    pub dump_w: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
}

#[derive(Debug, Serialize)]
struct Cell {
    w: u64,
    /// `[k, h, s]`
    anchor: Option<[usize; 3]>,
}

impl From<&MatchResult> for Cell {
    fn from(r: &MatchResult) -> Self {
        Cell {
            w: r.w,
            anchor: r.anchor.map(|a| [a.k, a.h, a.s]),
        }
    }
}

/// The `compare` JSON document; field set and order are fixed.
#[derive(Debug, Serialize)]
pub(crate) struct CompareOutput {
    measure: &'static str,
    params: serde_json::Value,
    n: usize,
    m: usize,
    s_numerator: u64,
    s_denominator: u64,
    s_normalized: f64,
    dissimilarity: f64,
    p1: f64,
    p2: f64,
    gated: bool,
    elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    w_map: Option<Vec<Vec<Cell>>>,
}

impl CompareOutput {
    fn new(name: &'static str, params: serde_json::Value, m: usize, report: &SimilarityReport, dump_w: bool) -> Self {
        Self {
            measure: name,
            params,
            n: report.n(),
            m,
            s_numerator: report.s_numerator,
            s_denominator: report.s_denominator,
            s_normalized: report.s_normalized,
            dissimilarity: report.dissimilarity,
            p1: report.p1,
            p2: report.p2,
            gated: report.gated,
            elapsed_ms: report.elapsed.as_secs_f64() * 1e3,
            w_map: dump_w.then(|| {
                report
                    .w_map
                    .rows()
                    .map(|row| row.iter().map(Cell::from).collect())
                    .collect()
            }),
        }
    }
}

pub fn run(args: &CompareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind = args.measure.kind()?;
    let a = args.load.load(&args.path_a)?;
    let b = args.load.load(&args.path_b)?;
    let (a, b) = args.load.unify(&a, &b)?;
    let report = measure(&a, &b, &kind)?;
    let doc = CompareOutput::new(kind.name(), params_json(&kind), b.rows(), &report, args.dump_w);
    match args.output {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        OutputFormat::Plain => write_plain(&doc, out)?,
    }
    Ok(())
}

fn write_plain(doc: &CompareOutput, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "measure: {}", doc.measure)?;
    if let Some(params) = doc.params.as_object() {
        for (key, value) in params {
            match value.as_str() {
                Some(text) => writeln!(out, "{key}: {text}")?,
                None => writeln!(out, "{key}: {value}")?,
            }
        }
    }
    writeln!(out, "n: {}", doc.n)?;
    writeln!(out, "m: {}", doc.m)?;
    writeln!(out, "similarity: {}/{}", doc.s_numerator, doc.s_denominator)?;
    writeln!(out, "s_normalized: {:.12}", doc.s_normalized)?;
    writeln!(out, "dissimilarity: {:.12}", doc.dissimilarity)?;
    writeln!(out, "p1: {:.12}", doc.p1)?;
    writeln!(out, "p2: {:.12}", doc.p2)?;
    writeln!(out, "gated: {}", doc.gated)?;
    writeln!(out, "elapsed_ms: {:.3}", doc.elapsed_ms)?;
    if let Some(rows) = &doc.w_map {
        writeln!(out, "w_map:")?;
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| c.w.to_string()).collect();
            writeln!(out, "  {}", cells.join(" "))?;
        }
    }
    Ok(())
}
