//! C ABI for the `acsm` library.
//!
//! Matrices and reports cross the boundary as opaque handles that the caller
//! releases with the matching `*_free` function. Every fallible call returns
//! an [`AcsmStatus`]; on failure [`acsm_last_error_message`] describes the
//! error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use acsm::measures::{measure, MeasureKind};
use acsm::{ingest, DistanceMetric, Error, SimilarityReport, SymbolMatrix};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcsmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NotSquare = 4,
    AlphabetMismatch = 5,
    IoError = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcsmMeasure {
    Acsm = 0,
    Approx = 1,
    Eacsm = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcsmMetric {
    Hamming = 0,
    Mad = 1,
    Nmad = 2,
}

/// Measure selection. Fields a measure does not use are ignored.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct AcsmParams {
    pub measure: AcsmMeasure,
    pub alpha: u64,
    /// approx only
    pub interval: usize,
    /// eacsm only
    pub epsilon: usize,
    /// eacsm only
    pub metric: AcsmMetric,
    /// eacsm only
    pub tau: f64,
    /// eacsm only; 0 disables the gate
    pub p0: f64,
}

/// Scalar part of a report.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct AcsmSummary {
    pub n: usize,
    pub s_numerator: u64,
    pub s_denominator: u64,
    pub s_normalized: f64,
    pub dissimilarity: f64,
    pub p1: f64,
    pub p2: f64,
    pub gated: bool,
    pub elapsed_ms: f64,
}

/// Opaque square symbol matrix.
pub struct AcsmMatrix(SymbolMatrix);

/// Opaque similarity report.
pub struct AcsmReport(SimilarityReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
}

fn status_of(err: &Error) -> AcsmStatus {
    match err {
        Error::NotSquare { .. } => AcsmStatus::NotSquare,
        Error::AlphabetMismatch { .. } => AcsmStatus::AlphabetMismatch,
        Error::Io { .. } => AcsmStatus::IoError,
        Error::UnsupportedMagic(_)
        | Error::MaxvalTooLarge(_)
        | Error::TruncatedPayload { .. }
        | Error::PixelExceedsMaxval { .. }
        | Error::MalformedHeader(_)
        | Error::JaggedRow { .. }
        | Error::NegativeSymbol { .. }
        | Error::InvalidToken { .. }
        | Error::EmptyInput => AcsmStatus::ParseError,
        _ => AcsmStatus::InvalidArgument,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), AcsmStatus>) -> AcsmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            AcsmStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            AcsmStatus::Panic
        }
    }
}

fn fail(err: Error) -> AcsmStatus {
    set_last_error(&err.to_string());
    status_of(&err)
}

fn null(what: &str) -> AcsmStatus {
    set_last_error(&format!("{what} is null"));
    AcsmStatus::NullPointer
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn acsm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn acsm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a matrix from `len` row-major symbols.
///
/// # Safety
/// `symbols` must point to `len` readable `uint32_t`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_new(
    rows: usize,
    cols: usize,
    alphabet: u32,
    symbols: *const u32,
    len: usize,
    out: *mut *mut AcsmMatrix,
) -> AcsmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if symbols.is_null() && len > 0 {
            return Err(null("symbols"));
        }
        let data = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(symbols, len).to_vec()
        };
        let matrix = SymbolMatrix::new(rows, cols, alphabet, data).map_err(fail)?;
        put(out, AcsmMatrix(matrix));
        Ok(())
    })
}

/// Loads a `.pgm`/`.pnm` image or a CSV/whitespace integer grid from `path`.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_load(path: *const c_char, out: *mut *mut AcsmMatrix) -> AcsmStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let path = CStr::from_ptr(path).to_str().map_err(|_| {
            set_last_error("path is not valid UTF-8");
            AcsmStatus::InvalidArgument
        })?;
        let (matrix, _) = ingest::load_path(Path::new(path)).map_err(fail)?;
        put(out, AcsmMatrix(matrix));
        Ok(())
    })
}

/// Parses PGM (`P2`/`P5`) bytes.
///
/// # Safety
/// `bytes` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_from_pgm(bytes: *const u8, len: usize, out: *mut *mut AcsmMatrix) -> AcsmStatus {
    guard(|| {
        if bytes.is_null() {
            return Err(null("bytes"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let matrix = ingest::load_pgm(std::slice::from_raw_parts(bytes, len)).map_err(fail)?;
        put(out, AcsmMatrix(matrix));
        Ok(())
    })
}

/// Parses a CSV/whitespace integer grid; the alphabet is `max + 1`.
///
/// # Safety
/// `text` must be a NUL-terminated UTF-8 string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_from_csv(text: *const c_char, out: *mut *mut AcsmMatrix) -> AcsmStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| {
            set_last_error("text is not valid UTF-8");
            AcsmStatus::InvalidArgument
        })?;
        let matrix = ingest::load_csv(text).map_err(fail)?;
        put(out, AcsmMatrix(matrix));
        Ok(())
    })
}

/// Re-declares the alphabet size of a matrix (e.g. to align two CSV inputs).
///
/// # Safety
/// `matrix` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_set_alphabet(matrix: *mut AcsmMatrix, alphabet: u32) -> AcsmStatus {
    guard(|| {
        let Some(handle) = matrix.as_mut() else {
            return Err(null("matrix"));
        };
        handle.0 = handle.0.clone().widen_alphabet(alphabet).map_err(fail)?;
        Ok(())
    })
}

/// New matrix with every symbol `v` mapped to `floor(v * target / L)`.
///
/// # Safety
/// `matrix` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_quantize(
    matrix: *const AcsmMatrix,
    target: u32,
    out: *mut *mut AcsmMatrix,
) -> AcsmStatus {
    guard(|| {
        let Some(handle) = matrix.as_ref() else {
            return Err(null("matrix"));
        };
        if out.is_null() {
            return Err(null("out"));
        }
        let q = ingest::quantize(&handle.0, target).map_err(fail)?;
        put(out, AcsmMatrix(q));
        Ok(())
    })
}

/// Row count, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_rows(matrix: *const AcsmMatrix) -> usize {
    matrix.as_ref().map_or(0, |m| m.0.rows())
}

/// Column count, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_cols(matrix: *const AcsmMatrix) -> usize {
    matrix.as_ref().map_or(0, |m| m.0.cols())
}

/// Alphabet size, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_alphabet(matrix: *const AcsmMatrix) -> u32 {
    matrix.as_ref().map_or(0, |m| m.0.alphabet_size())
}

/// Releases a matrix. Null is a no-op.
///
/// # Safety
/// `matrix` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn acsm_matrix_free(matrix: *mut AcsmMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Parameters with the library defaults for `measure`
/// (alpha 1, interval 2, epsilon 5, hamming, tau 0.25, p0 0).
#[no_mangle]
pub extern "C" fn acsm_params_default(measure: AcsmMeasure) -> AcsmParams {
    AcsmParams {
        measure,
        alpha: 1,
        interval: 2,
        epsilon: 5,
        metric: AcsmMetric::Hamming,
        tau: 0.25,
        p0: 0.0,
    }
}

impl AcsmParams {
    fn kind(&self) -> MeasureKind {
        match self.measure {
            AcsmMeasure::Acsm => MeasureKind::Acsm { alpha: self.alpha },
            AcsmMeasure::Approx => MeasureKind::ApproxAcsm {
                alpha: self.alpha,
                interval: self.interval,
            },
            AcsmMeasure::Eacsm => MeasureKind::Eacsm {
                alpha: self.alpha,
                epsilon: self.epsilon,
                metric: match self.metric {
                    AcsmMetric::Hamming => DistanceMetric::HammingFraction,
                    AcsmMetric::Mad => DistanceMetric::MeanAbsDiff,
                    AcsmMetric::Nmad => DistanceMetric::NormalizedMeanAbsDiff,
                },
                tau: self.tau,
                p0: self.p0,
            },
        }
    }
}

/// Compares `a` against `b`; the report's per-position map refers to `a`.
///
/// # Safety
/// `a`, `b` must be live handles, `params` readable, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_compare(
    a: *const AcsmMatrix,
    b: *const AcsmMatrix,
    params: *const AcsmParams,
    out: *mut *mut AcsmReport,
) -> AcsmStatus {
    guard(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return Err(null("matrix"));
        };
        let Some(params) = params.as_ref() else {
            return Err(null("params"));
        };
        if out.is_null() {
            return Err(null("out"));
        }
        let report = measure(&a.0, &b.0, &params.kind()).map_err(fail)?;
        put(out, AcsmReport(report));
        Ok(())
    })
}

/// Copies the scalar fields of `report` into `out`.
///
/// # Safety
/// `report` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_report_summary(report: *const AcsmReport, out: *mut AcsmSummary) -> AcsmStatus {
    guard(|| {
        let Some(report) = report.as_ref() else {
            return Err(null("report"));
        };
        let Some(out) = out.as_mut() else {
            return Err(null("out"));
        };
        let r = &report.0;
        *out = AcsmSummary {
            n: r.n(),
            s_numerator: r.s_numerator,
            s_denominator: r.s_denominator,
            s_normalized: r.s_normalized,
            dissimilarity: r.dissimilarity,
            p1: r.p1,
            p2: r.p2,
            gated: r.gated,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        };
        Ok(())
    })
}

/// Match at 1-based position `(i, j)` of A: area `w` and anchor `(k, h, s)`,
/// all zero when nothing matched.
///
/// # Safety
/// `report` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn acsm_report_cell(
    report: *const AcsmReport,
    i: usize,
    j: usize,
    w: *mut u64,
    k: *mut usize,
    h: *mut usize,
    s: *mut usize,
) -> AcsmStatus {
    guard(|| {
        let Some(report) = report.as_ref() else {
            return Err(null("report"));
        };
        if w.is_null() || k.is_null() || h.is_null() || s.is_null() {
            return Err(null("output"));
        }
        let n = report.0.n();
        if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
            set_last_error(&format!("position ({i},{j}) outside 1..={n}"));
            return Err(AcsmStatus::InvalidArgument);
        }
        let cell = report.0.w_map.get(i, j);
        *w = cell.w;
        let (ak, ah, asz) = cell.anchor.map_or((0, 0, 0), |a| (a.k, a.h, a.s));
        *k = ak;
        *h = ah;
        *s = asz;
        Ok(())
    })
}

/// Releases a report. Null is a no-op.
///
/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn acsm_report_free(report: *mut AcsmReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
