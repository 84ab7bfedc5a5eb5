//! Loading matrices from files, alphabet reduction and synthetic data.

mod csv;
mod gen;
mod pgm;

use std::path::Path;

pub use self::csv::{load_csv, render_csv};
pub use self::gen::{gen_planted_pair, gen_random, PlantedPair};
pub use self::pgm::load_pgm;

use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;

/// Maps every symbol `v` to `floor(v * target / L)`; the result has alphabet size `target`.
pub fn quantize(matrix: &SymbolMatrix, target: u32) -> Result<SymbolMatrix> {
    if target == 0 {
        return Err(Error::InvalidParameter("quantization target must be ≥ 1".into()));
    }
    let from = u64::from(matrix.alphabet_size());
    let symbols = matrix
        .symbols()
        .iter()
        .map(|&v| (u64::from(v) * u64::from(target) / from) as u32)
        .collect();
    SymbolMatrix::new(matrix.rows(), matrix.cols(), target, symbols)
}

/// How a loaded matrix got its alphabet size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphabetSource {
    /// Declared by the file (PGM maxval).
    Declared,
    /// Inferred as `max + 1` from the data (CSV).
    Inferred,
}

/// Loads a `.pgm`/`.pnm` image or an integer grid, chosen by extension
/// (anything else is tried as PGM when it starts with `P`, CSV otherwise).
pub fn load_path(path: &Path) -> Result<(SymbolMatrix, AlphabetSource)> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .unwrap_or_default();
    let is_pgm = match ext.as_str() {
        "pgm" | "pnm" => true,
        "csv" | "txt" | "tsv" => false,
        _ => bytes.first() == Some(&b'P'),
    };
    if is_pgm {
        Ok((load_pgm(&bytes)?, AlphabetSource::Declared))
    } else {
        let text = String::from_utf8(bytes).map_err(|_| Error::InvalidToken {
            line: 0,
            token: "<non-UTF-8 data>".into(),
        })?;
        Ok((load_csv(&text)?, AlphabetSource::Inferred))
    }
}
