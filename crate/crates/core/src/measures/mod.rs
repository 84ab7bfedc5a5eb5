//! ACSM, interval-approximate ACSM and ε-ACSM reports.
//!
//! Every measure runs the same directed pipeline twice (A→B and B→A): the
//! A→B pass fills the report's `w_map`, `S`, `p1` and `p2`, and both passes
//! feed the symmetric dissimilarity.

pub mod oracle;

use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matching::{largest_match_with, DirectComparator, OffsetTables, WindowComparator};
use crate::matrix::SymbolMatrix;
use crate::params::{DistanceMetric, MatchResult, MatcherSpec, MeasureParams, Scope};
use crate::report::{DirectedSummary, SimilarityReport, WMap};

pub use oracle::oracle_acsm;

/// Table cells (u64) the automatic strategy may allocate per directed pass.
const TABLE_BUDGET_CELLS: usize = 1 << 23;

/// The three measures and their parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasureKind {
    Acsm {
        alpha: u64,
    },
    ApproxAcsm {
        alpha: u64,
        interval: usize,
    },
    Eacsm {
        alpha: u64,
        epsilon: usize,
        metric: DistanceMetric,
        tau: f64,
        p0: f64,
    },
}

impl MeasureKind {
    pub fn name(&self) -> &'static str {
        match self {
            MeasureKind::Acsm { .. } => "acsm",
            MeasureKind::ApproxAcsm { .. } => "approx",
            MeasureKind::Eacsm { .. } => "eacsm",
        }
    }

    pub fn alpha(&self) -> u64 {
        match *self {
            MeasureKind::Acsm { alpha } | MeasureKind::ApproxAcsm { alpha, .. } | MeasureKind::Eacsm { alpha, .. } => {
                alpha
            }
        }
    }

    pub fn params(&self) -> Result<MeasureParams> {
        match *self {
            MeasureKind::Acsm { alpha } => MeasureParams::new(alpha, Scope::Global, MatcherSpec::Exact, 0.0),
            MeasureKind::ApproxAcsm { alpha, interval } => {
                MeasureParams::new(alpha, Scope::Global, MatcherSpec::interval(interval)?, 0.0)
            }
            MeasureKind::Eacsm {
                alpha,
                epsilon,
                metric,
                tau,
                p0,
            } => MeasureParams::new(
                alpha,
                Scope::neighborhood(epsilon)?,
                MatcherSpec::distance(metric, tau)?,
                p0,
            ),
        }
    }
}

/// How windows are compared inside the directed passes. Results never depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Offset tables for neighbourhood scopes that fit the memory budget, direct otherwise.
    #[default]
    Auto,
    Direct,
    OffsetTables,
}

impl Strategy {
    fn resolve(self, scope: Scope, n: usize, m: usize, matcher: &MatcherSpec) -> Strategy {
        match self {
            Strategy::Auto => match scope {
                Scope::Neighborhood { .. } if OffsetTables::cell_count(scope, n, m, matcher) <= TABLE_BUDGET_CELLS => {
                    Strategy::OffsetTables
                }
                _ => Strategy::Direct,
            },
            other => other,
        }
    }
}

/// Checks the measure preconditions; returns `(n, m)`.
pub(crate) fn check_inputs(a: &SymbolMatrix, b: &SymbolMatrix, params: &MeasureParams) -> Result<(usize, usize)> {
    let n = a.side()?;
    let m = b.side()?;
    if a.alphabet_size() != b.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            a: a.alphabet_size(),
            b: b.alphabet_size(),
        });
    }
    params.validate()?;
    Ok((n, m))
}

fn run_positions<C: WindowComparator>(cmp: &C, n: usize, m: usize, scope: Scope, s_min: usize) -> WMap {
    let cells: Vec<MatchResult> = (1..=n)
        .into_par_iter()
        .flat_map_iter(|i| (1..=n).map(move |j| largest_match_with(cmp, (i, j), n, m, scope, s_min)))
        .collect();
    WMap::new(n, cells)
}

/// Per-position largest matches of A's windows inside B.
pub fn directed_w_map(a: &SymbolMatrix, b: &SymbolMatrix, params: &MeasureParams, strategy: Strategy) -> Result<WMap> {
    let (n, m) = check_inputs(a, b, params)?;
    let s_min = params.s_min();
    Ok(match strategy.resolve(params.scope, n, m, &params.matcher) {
        Strategy::OffsetTables => {
            let tables = OffsetTables::build(a, b, params.scope, params.matcher)?;
            run_positions(&tables, n, m, params.scope, s_min)
        }
        _ => {
            let cmp = DirectComparator::new(a, b, params.matcher)?;
            run_positions(&cmp, n, m, params.scope, s_min)
        }
    })
}

/// Upper bound on `S` for an `n×n` A against an `m×m` B at minimum area `alpha`.
pub fn s_max(n: usize, m: usize, alpha: u64) -> Ratio<u64> {
    Ratio::new(s_max_numerator(n, m, alpha), (n * n) as u64)
}

fn s_max_numerator(n: usize, m: usize, alpha: u64) -> u64 {
    let mut total = 0u64;
    for i in 1..=n {
        for j in 1..=n {
            let c = i.min(j).min(m) as u64;
            if c * c >= alpha {
                total += c * c;
            }
        }
    }
    total
}

/// Exact `D = 1 - (S_ab / s_max(n,m) + S_ba / s_max(m,n)) / 2`, clamped to `[0, 1]`.
pub fn dissimilarity_exact(s_ab: Ratio<u64>, s_ba: Ratio<u64>, n: usize, m: usize, alpha: u64) -> Result<Ratio<u128>> {
    let max_ab = s_max(n, m, alpha);
    let max_ba = s_max(m, n, alpha);
    if *max_ab.numer() == 0 || *max_ba.numer() == 0 {
        return Err(Error::NoAdmissibleSubmatrix);
    }
    let widen = |r: Ratio<u64>| Ratio::new(u128::from(*r.numer()), u128::from(*r.denom()));
    let half = Ratio::new(1u128, 2);
    let mean = (widen(s_ab) / widen(max_ab) + widen(s_ba) / widen(max_ba)) * half;
    let one = Ratio::from_integer(1u128);
    Ok(if mean >= one {
        Ratio::from_integer(0)
    } else {
        one - mean
    })
}

/// Symmetric dissimilarity in `[0, 1]`; see [`dissimilarity_exact`].
pub fn dissimilarity(s_ab: Ratio<u64>, s_ba: Ratio<u64>, n: usize, m: usize, alpha: u64) -> Result<f64> {
    dissimilarity_exact(s_ab, s_ba, n, m, alpha).map(|d| ratio_to_f64(&d))
}

pub(crate) fn ratio_to_f64(r: &Ratio<u128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Full report for an arbitrary parameter set.
pub fn compute(a: &SymbolMatrix, b: &SymbolMatrix, params: &MeasureParams) -> Result<SimilarityReport> {
    compute_with(a, b, params, Strategy::Auto)
}

pub fn compute_with(
    a: &SymbolMatrix,
    b: &SymbolMatrix,
    params: &MeasureParams,
    strategy: Strategy,
) -> Result<SimilarityReport> {
    let started = Instant::now();
    let (n, m) = check_inputs(a, b, params)?;
    if s_max_numerator(n, m, params.alpha) == 0 {
        return Err(Error::NoAdmissibleSubmatrix);
    }
    let w_map = directed_w_map(a, b, params, strategy)?;
    let reverse_map = directed_w_map(b, a, params, strategy)?;
    let forward = DirectedSummary::from_w_map(&w_map, params.p0);
    let reverse = DirectedSummary::from_w_map(&reverse_map, params.p0);
    Ok(assemble(n, m, params.alpha, w_map, forward, reverse, started))
}

pub(crate) fn assemble(
    n: usize,
    m: usize,
    alpha: u64,
    w_map: WMap,
    forward: DirectedSummary,
    reverse: DirectedSummary,
    started: Instant,
) -> SimilarityReport {
    let s_ab = Ratio::new(forward.s_numerator, forward.s_denominator);
    let s_ba = Ratio::new(reverse.s_numerator, reverse.s_denominator);
    let dissimilarity_exact = if forward.gated || reverse.gated {
        Ratio::from_integer(1)
    } else {
        dissimilarity_exact(s_ab, s_ba, n, m, alpha).expect("admissibility checked before the passes")
    };
    let normalized = s_ab / s_max(n, m, alpha);
    SimilarityReport {
        s_numerator: forward.s_numerator,
        s_denominator: forward.s_denominator,
        s_normalized: (*normalized.numer() as f64 / *normalized.denom() as f64).min(1.0),
        dissimilarity: ratio_to_f64(&dissimilarity_exact),
        dissimilarity_exact,
        p1: forward.p1,
        p2: forward.p2,
        matched_positions: forward.matched_positions,
        distinct_anchors: forward.distinct_anchors,
        gated: forward.gated,
        w_map,
        reverse,
        elapsed: started.elapsed(),
    }
}

/// Exact ACSM: global scope, exact matching, gate disabled.
pub fn acsm_similarity(a: &SymbolMatrix, b: &SymbolMatrix, alpha: u64) -> Result<SimilarityReport> {
    measure(a, b, &MeasureKind::Acsm { alpha })
}

/// Interval-approximate ACSM: global scope, sampled-grid matching.
pub fn approx_acsm(a: &SymbolMatrix, b: &SymbolMatrix, alpha: u64, interval: usize) -> Result<SimilarityReport> {
    measure(a, b, &MeasureKind::ApproxAcsm { alpha, interval })
}

/// ε-ACSM: neighbourhood scope, distance-threshold matching and the `p0` frequency gate.
#[allow(clippy::too_many_arguments)]
pub fn eacsm(
    a: &SymbolMatrix,
    b: &SymbolMatrix,
    alpha: u64,
    epsilon: usize,
    metric: DistanceMetric,
    tau: f64,
    p0: f64,
) -> Result<SimilarityReport> {
    measure(
        a,
        b,
        &MeasureKind::Eacsm {
            alpha,
            epsilon,
            metric,
            tau,
            p0,
        },
    )
}

pub fn measure(a: &SymbolMatrix, b: &SymbolMatrix, kind: &MeasureKind) -> Result<SimilarityReport> {
    compute(a, b, &kind.params()?)
}
