use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by matrix construction, ingestion and the measures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix dimensions must be positive (got {rows}×{cols})")]
    ZeroDimension { rows: usize, cols: usize },

    #[error("alphabet size must be positive")]
    EmptyAlphabet,

    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("symbol {symbol} ≥ alphabet size {alphabet}")]
    SymbolOutOfRange { symbol: i64, alphabet: u32 },

    #[error("matrix must be square (got {rows}×{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("alphabet mismatch: {a} vs {b}")]
    AlphabetMismatch { a: u32, b: u32 },

    #[error("side-{s} window anchored at ({i},{j}) does not fit in a {rows}×{cols} matrix")]
    WindowOutOfBounds {
        i: usize,
        j: usize,
        s: usize,
        rows: usize,
        cols: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("alpha admits no submatrices")]
    NoAdmissibleSubmatrix,

    #[error("unsupported magic {0:?}")]
    UnsupportedMagic(String),

    #[error("maxval {0} exceeds 255")]
    MaxvalTooLarge(u32),

    #[error("truncated payload: expected {expected} pixels, got {got}")]
    TruncatedPayload { expected: usize, got: usize },

    #[error("pixel {pixel} exceeds maxval {maxval}")]
    PixelExceedsMaxval { pixel: u32, maxval: u32 },

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("row {row} has {got} column{}, expected {expected}", if *.got == 1 { "" } else { "s" })]
    JaggedRow { row: usize, got: usize, expected: usize },

    #[error("negative symbol {token:?} on line {line}")]
    NegativeSymbol { line: usize, token: String },

    #[error("invalid token {token:?} on line {line}")]
    InvalidToken { line: usize, token: String },

    #[error("empty input")]
    EmptyInput,

    #[error("block exceeds matrix (k={k}, min side {min_side})")]
    BlockExceedsMatrix { k: usize, min_side: usize },

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
