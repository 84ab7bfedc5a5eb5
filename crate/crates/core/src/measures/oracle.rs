//! Brute-force reference implementation used to check the measures.
//!
//! Written independently of [`crate::matching`]: no shared predicates, no
//! short-circuiting inside a window comparison, no precomputation. Every
//! candidate window is compared in full. Intended for matrices up to ~16×16.

use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;
use crate::params::{Anchor, DistanceMetric, MatchResult, MatcherSpec, Scope};
use crate::report::{DirectedSummary, WMap};
use crate::SimilarityReport;

/// Reference report for `(alpha, scope, matcher)` with the gate disabled.
pub fn oracle_acsm(
    a: &SymbolMatrix,
    b: &SymbolMatrix,
    alpha: u64,
    scope: Scope,
    matcher: MatcherSpec,
) -> Result<SimilarityReport> {
    let started = Instant::now();
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    if a.alphabet_size() != b.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            a: a.alphabet_size(),
            b: b.alphabet_size(),
        });
    }
    if alpha == 0 {
        return Err(Error::InvalidParameter("alpha must be ≥ 1".into()));
    }
    let (n, m) = (a.rows(), b.rows());
    let bound_ab = brute_bound(n, m, alpha);
    let bound_ba = brute_bound(m, n, alpha);
    if bound_ab == 0 || bound_ba == 0 {
        return Err(Error::NoAdmissibleSubmatrix);
    }

    let (w_ab, fwd) = directed(a, b, alpha, scope, matcher);
    let (_, rev) = directed(b, a, alpha, scope, matcher);

    let nn = (n * n) as u128;
    let mm = (m * m) as u128;
    // S_ab / bound_ab with both over n²: the n² cancels
    let ratio_ab = Ratio::new(u128::from(fwd.s_numerator), u128::from(bound_ab));
    let ratio_ba = Ratio::new(u128::from(rev.s_numerator), u128::from(bound_ba));
    debug_assert_eq!(u128::from(fwd.s_denominator), nn);
    debug_assert_eq!(u128::from(rev.s_denominator), mm);
    let mean = (ratio_ab + ratio_ba) / 2;
    let one = Ratio::from_integer(1u128);
    let d = if mean > one { Ratio::from_integer(0) } else { one - mean };

    Ok(SimilarityReport {
        s_numerator: fwd.s_numerator,
        s_denominator: fwd.s_denominator,
        s_normalized: *ratio_ab.numer() as f64 / *ratio_ab.denom() as f64,
        dissimilarity: *d.numer() as f64 / *d.denom() as f64,
        dissimilarity_exact: d,
        p1: fwd.p1,
        p2: fwd.p2,
        matched_positions: fwd.matched_positions,
        distinct_anchors: fwd.distinct_anchors,
        gated: false,
        w_map: w_ab,
        reverse: rev,
        elapsed: started.elapsed(),
    })
}

fn brute_bound(nx: usize, ny: usize, alpha: u64) -> u64 {
    let mut total = 0;
    for i in 1..=nx {
        for j in 1..=nx {
            let mut best = 0;
            for s in 1..=nx.min(ny) {
                let area = (s * s) as u64;
                if s <= i && s <= j && area >= alpha {
                    best = area;
                }
            }
            total += best;
        }
    }
    total
}

fn in_scope(scope: Scope, i: usize, j: usize, k: usize, h: usize) -> bool {
    match scope {
        Scope::Global => true,
        Scope::Neighborhood { epsilon } => {
            let half = (epsilon - 1) / 2;
            k.abs_diff(i) <= half && h.abs_diff(j) <= half
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn windows_match(
    x: &SymbolMatrix,
    i: usize,
    j: usize,
    y: &SymbolMatrix,
    k: usize,
    h: usize,
    s: usize,
    matcher: MatcherSpec,
) -> bool {
    let xs = x.symbols();
    let ys = y.symbols();
    let (xc, yc) = (x.cols(), y.cols());
    let mut mismatches = 0u64;
    let mut sampled_mismatches = 0u64;
    let mut abs_sum = 0u64;
    for dr in 0..s {
        for dc in 0..s {
            let xv = xs[(i - s + dr) * xc + (j - s + dc)];
            let yv = ys[(k - s + dr) * yc + (h - s + dc)];
            let differ = xv != yv;
            mismatches += differ as u64;
            abs_sum += (i64::from(xv) - i64::from(yv)).unsigned_abs();
            if let MatcherSpec::Interval(step) = matcher {
                if dr % step == 0 && dc % step == 0 {
                    sampled_mismatches += differ as u64;
                }
            }
        }
    }
    let area = (s * s) as u64;
    match matcher {
        MatcherSpec::Exact => mismatches == 0,
        MatcherSpec::Interval(_) => sampled_mismatches == 0,
        MatcherSpec::Distance { metric, tau } => {
            let d = match metric {
                DistanceMetric::HammingFraction => mismatches as f64 / area as f64,
                DistanceMetric::MeanAbsDiff => abs_sum as f64 / area as f64,
                DistanceMetric::NormalizedMeanAbsDiff => {
                    let levels = u64::from(x.alphabet_size()) - 1;
                    if levels == 0 {
                        0.0
                    } else {
                        abs_sum as f64 / (area * levels) as f64
                    }
                }
            };
            d < tau
        }
    }
}

fn directed(
    x: &SymbolMatrix,
    y: &SymbolMatrix,
    alpha: u64,
    scope: Scope,
    matcher: MatcherSpec,
) -> (WMap, DirectedSummary) {
    let (nx, ny) = (x.rows(), y.rows());
    let mut cells = Vec::with_capacity(nx * nx);
    for i in 1..=nx {
        for j in 1..=nx {
            let mut result = MatchResult { w: 0, anchor: None };
            let top = i.min(j).min(ny);
            'sides: for s in (1..=top).rev() {
                if ((s * s) as u64) < alpha {
                    break;
                }
                for k in 1..=ny {
                    for h in 1..=ny {
                        if k < s || h < s || !in_scope(scope, i, j, k, h) {
                            continue;
                        }
                        if windows_match(x, i, j, y, k, h, s, matcher) {
                            result = MatchResult {
                                w: (s * s) as u64,
                                anchor: Some(Anchor { k, h, s }),
                            };
                            break 'sides;
                        }
                    }
                }
            }
            cells.push(result);
        }
    }
    let total = (nx * nx) as u64;
    let s_numerator = cells.iter().map(|c| c.w).sum();
    let matched = cells.iter().filter(|c| c.anchor.is_some()).count() as u64;
    let distinct: BTreeSet<Anchor> = cells.iter().filter_map(|c| c.anchor).collect();
    let summary = DirectedSummary {
        s_numerator,
        s_denominator: total,
        matched_positions: matched,
        distinct_anchors: distinct.len() as u64,
        p1: matched as f64 / total as f64,
        p2: distinct.len() as f64 / total as f64,
        gated: false,
    };
    (WMap::new(nx, cells), summary)
}
