//! Window comparison predicates, anchor search and the descending-size
//! largest-match procedure.
//!
//! All searches go through [`WindowComparator`], so the same scan order and
//! tie-breaking apply whether windows are compared element by element
//! ([`DirectComparator`]) or through per-offset prefix sums ([`OffsetTables`]).

mod tables;

pub use tables::OffsetTables;

use crate::error::{Error, Result};
use crate::matrix::{index_bounds, min_side, SymbolMatrix};
use crate::params::{Anchor, DistanceMetric, MatchResult, MatcherSpec, Scope};

/// Inclusive 1-based bounds of admissible anchors in B for one side length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateWindow {
    pub k_lo: usize,
    pub k_hi: usize,
    pub h_lo: usize,
    pub h_hi: usize,
}

impl CandidateWindow {
    /// Anchors for a side-`s` window of A at `(i, j)` inside an `m×m` B.
    pub fn for_scope(scope: Scope, i: usize, j: usize, s: usize, m: usize) -> Self {
        match scope.radius() {
            None => Self {
                k_lo: s,
                k_hi: m,
                h_lo: s,
                h_hi: m,
            },
            Some(r) => Self {
                k_lo: s.max(i.saturating_sub(r)),
                k_hi: m.min(i + r),
                h_lo: s.max(j.saturating_sub(r)),
                h_hi: m.min(j + r),
            },
        }
    }

    pub fn is_empty(&self) -> bool {
        self.k_lo > self.k_hi || self.h_lo > self.h_hi
    }

    /// Anchors in row-major order (k ascending, then h ascending).
    pub fn iter(self) -> impl Iterator<Item = (usize, usize)> {
        let (h_lo, h_hi) = (self.h_lo, self.h_hi);
        (self.k_lo..=self.k_hi).flat_map(move |k| (h_lo..=h_hi).map(move |h| (k, h)))
    }
}

fn check_windows(a: &SymbolMatrix, i: usize, j: usize, b: &SymbolMatrix, k: usize, h: usize, s: usize) -> Result<()> {
    a.check_window(i, j, s)?;
    b.check_window(k, h, s)
}

/// True iff the side-`s` windows at `(i, j)` in A and `(k, h)` in B are identical.
pub fn exact_equal(
    a: &SymbolMatrix,
    i: usize,
    j: usize,
    b: &SymbolMatrix,
    k: usize,
    h: usize,
    s: usize,
) -> Result<bool> {
    check_windows(a, i, j, b, k, h, s)?;
    Ok(exact_equal_unchecked(a, i, j, b, k, h, s))
}

#[inline]
fn exact_equal_unchecked(a: &SymbolMatrix, i: usize, j: usize, b: &SymbolMatrix, k: usize, h: usize, s: usize) -> bool {
    // Bottom-right elements first: cheap rejection for the common case.
    if a.row0(i - 1)[j - 1] != b.row0(k - 1)[h - 1] {
        return false;
    }
    (0..s).all(|r| a.row0(i - s + r)[j - s..j] == b.row0(k - s + r)[h - s..h])
}

/// Compares only window offsets `(r, c)` with `r % interval == 0` and `c % interval == 0`.
#[allow(clippy::too_many_arguments)]
pub fn interval_equal(
    a: &SymbolMatrix,
    i: usize,
    j: usize,
    b: &SymbolMatrix,
    k: usize,
    h: usize,
    s: usize,
    interval: usize,
) -> Result<bool> {
    if interval == 0 {
        return Err(Error::InvalidParameter("interval must be ≥ 1".into()));
    }
    check_windows(a, i, j, b, k, h, s)?;
    Ok(interval_equal_unchecked(a, i, j, b, k, h, s, interval))
}

#[inline]
#[allow(clippy::too_many_arguments)]
fn interval_equal_unchecked(
    a: &SymbolMatrix,
    i: usize,
    j: usize,
    b: &SymbolMatrix,
    k: usize,
    h: usize,
    s: usize,
    interval: usize,
) -> bool {
    if interval == 1 {
        return exact_equal_unchecked(a, i, j, b, k, h, s);
    }
    (0..s).step_by(interval).all(|r| {
        let ra = &a.row0(i - s + r)[j - s..j];
        let rb = &b.row0(k - s + r)[h - s..h];
        (0..s).step_by(interval).all(|c| ra[c] == rb[c])
    })
}

/// Per-element cost accumulated by a metric: mismatch indicator or absolute difference.
#[inline]
pub(crate) fn element_cost(metric: DistanceMetric, x: u32, y: u32) -> u64 {
    match metric {
        DistanceMetric::HammingFraction => u64::from(x != y),
        DistanceMetric::MeanAbsDiff | DistanceMetric::NormalizedMeanAbsDiff => u64::from(x.abs_diff(y)),
    }
}

/// Distance between the side-`s` windows at `(i, j)` in A and `(k, h)` in B.
#[allow(clippy::too_many_arguments)]
pub fn distance(
    a: &SymbolMatrix,
    i: usize,
    j: usize,
    b: &SymbolMatrix,
    k: usize,
    h: usize,
    s: usize,
    metric: DistanceMetric,
) -> Result<f64> {
    if a.alphabet_size() != b.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            a: a.alphabet_size(),
            b: b.alphabet_size(),
        });
    }
    check_windows(a, i, j, b, k, h, s)?;
    let cost: u64 = (0..s)
        .map(|r| {
            let ra = &a.row0(i - s + r)[j - s..j];
            let rb = &b.row0(k - s + r)[h - s..h];
            ra.iter()
                .zip(rb)
                .map(|(&x, &y)| element_cost(metric, x, y))
                .sum::<u64>()
        })
        .sum();
    Ok(metric.finish(cost, s, a.alphabet_size()))
}

/// `distance(..) < tau`, stopping as soon as the accumulated cost already rules out a match.
#[inline]
#[allow(clippy::too_many_arguments)]
fn within_distance_unchecked(
    a: &SymbolMatrix,
    i: usize,
    j: usize,
    b: &SymbolMatrix,
    k: usize,
    h: usize,
    s: usize,
    metric: DistanceMetric,
    tau: f64,
) -> bool {
    let alphabet = a.alphabet_size();
    let mut cost = 0u64;
    for r in 0..s {
        let ra = &a.row0(i - s + r)[j - s..j];
        let rb = &b.row0(k - s + r)[h - s..h];
        cost += ra
            .iter()
            .zip(rb)
            .map(|(&x, &y)| element_cost(metric, x, y))
            .sum::<u64>();
        // cost only grows, so the metric value only grows
        if metric.finish(cost, s, alphabet) >= tau {
            return false;
        }
    }
    metric.finish(cost, s, alphabet) < tau
}

/// Applies `matcher` to one pair of windows.
#[allow(clippy::too_many_arguments)]
pub fn matches(
    a: &SymbolMatrix,
    i: usize,
    j: usize,
    b: &SymbolMatrix,
    k: usize,
    h: usize,
    s: usize,
    matcher: &MatcherSpec,
) -> Result<bool> {
    match *matcher {
        MatcherSpec::Exact => exact_equal(a, i, j, b, k, h, s),
        MatcherSpec::Interval(interval) => interval_equal(a, i, j, b, k, h, s, interval),
        MatcherSpec::Distance { metric, tau } => Ok(distance(a, i, j, b, k, h, s, metric)? < tau),
    }
}

/// Decides whether a side-`s` window of A at `(i, j)` matches the window of B at `(k, h)`.
///
/// Callers guarantee both windows fit.
pub trait WindowComparator: Sync {
    fn window_matches(&self, i: usize, j: usize, k: usize, h: usize, s: usize) -> bool;

    /// First matching anchor of `window` in row-major order.
    fn first_match(&self, i: usize, j: usize, s: usize, window: CandidateWindow) -> Option<(usize, usize)> {
        window.iter().find(|&(k, h)| self.window_matches(i, j, k, h, s))
    }
}

/// Element-by-element comparison straight from the matrices.
#[derive(Debug, Clone, Copy)]
pub struct DirectComparator<'a> {
    a: &'a SymbolMatrix,
    b: &'a SymbolMatrix,
    matcher: MatcherSpec,
}

impl<'a> DirectComparator<'a> {
    pub fn new(a: &'a SymbolMatrix, b: &'a SymbolMatrix, matcher: MatcherSpec) -> Result<Self> {
        matcher.validate()?;
        if matches!(matcher, MatcherSpec::Distance { .. }) && a.alphabet_size() != b.alphabet_size() {
            return Err(Error::AlphabetMismatch {
                a: a.alphabet_size(),
                b: b.alphabet_size(),
            });
        }
        Ok(Self { a, b, matcher })
    }
}

impl WindowComparator for DirectComparator<'_> {
    #[inline]
    fn window_matches(&self, i: usize, j: usize, k: usize, h: usize, s: usize) -> bool {
        let (a, b) = (self.a, self.b);
        match self.matcher {
            MatcherSpec::Exact => exact_equal_unchecked(a, i, j, b, k, h, s),
            MatcherSpec::Interval(interval) => interval_equal_unchecked(a, i, j, b, k, h, s, interval),
            MatcherSpec::Distance { metric, tau } => within_distance_unchecked(a, i, j, b, k, h, s, metric, tau),
        }
    }

    fn first_match(&self, i: usize, j: usize, s: usize, window: CandidateWindow) -> Option<(usize, usize)> {
        if let MatcherSpec::Distance { .. } = self.matcher {
            return window.iter().find(|&(k, h)| self.window_matches(i, j, k, h, s));
        }
        // Exact and interval matching both compare the top-left elements (and
        // the next sampled element of the top row when the window has one), so
        // only anchors agreeing on those need a full check.
        let step = match self.matcher {
            MatcherSpec::Interval(interval) => interval,
            _ => 1,
        };
        let top = self.a.row0(i - s);
        let first = top[j - s];
        let second = (step < s).then(|| top[j - s + step]);
        let len = window.h_hi - window.h_lo + 1;
        for k in window.k_lo..=window.k_hi {
            let row = self.b.row0(k - s);
            let base = window.h_lo - s;
            let lead = &row[base..base + len];
            let next = second.map(|_| &row[base + step..base + step + len]);
            let mut start = 0;
            while start < len {
                let end = (start + 32).min(len);
                let mut mask = 0u32;
                match (next, second) {
                    (Some(next), Some(second)) => {
                        let pairs = lead[start..end].iter().zip(&next[start..end]);
                        for (x, (&l, &nx)) in pairs.enumerate() {
                            mask |= u32::from((l == first) & (nx == second)).wrapping_shl(x as u32);
                        }
                    }
                    _ => {
                        for (x, &l) in lead[start..end].iter().enumerate() {
                            mask |= u32::from(l == first).wrapping_shl(x as u32);
                        }
                    }
                }
                while mask != 0 {
                    let h = window.h_lo + start + mask.trailing_zeros() as usize;
                    if self.window_matches(i, j, k, h, s) {
                        return Some((k, h));
                    }
                    mask &= mask - 1;
                }
                start = end;
            }
        }
        None
    }
}

/// First anchor in row-major order of the candidate window whose window matches.
pub fn find_anchor_with<C: WindowComparator + ?Sized>(
    cmp: &C,
    (i, j): (usize, usize),
    s: usize,
    m: usize,
    scope: Scope,
) -> Option<(usize, usize)> {
    if s == 0 || s > i.min(j) {
        return None;
    }
    let window = CandidateWindow::for_scope(scope, i, j, s, m);
    if window.is_empty() {
        return None;
    }
    cmp.first_match(i, j, s, window)
}

/// Searches B for a match of A's side-`s` window at `(i, j)`; `None` when no candidate matches.
pub fn find_anchor(
    a: &SymbolMatrix,
    (i, j): (usize, usize),
    s: usize,
    b: &SymbolMatrix,
    scope: Scope,
    matcher: &MatcherSpec,
) -> Option<(usize, usize)> {
    if !a.window_fits(i, j, s) || scope.validate().is_err() {
        return None;
    }
    let cmp = DirectComparator::new(a, b, *matcher).ok()?;
    find_anchor_with(&cmp, (i, j), s, b.rows().min(b.cols()), scope)
}

/// Descending-size search at `(i, j)`: the first side (from the largest) with a match wins.
pub fn largest_match_with<C: WindowComparator + ?Sized>(
    cmp: &C,
    (i, j): (usize, usize),
    n: usize,
    m: usize,
    scope: Scope,
    s_min: usize,
) -> MatchResult {
    let s_start = index_bounds(i, j, n, m);
    for s in (s_min..=s_start).rev() {
        if let Some((k, h)) = find_anchor_with(cmp, (i, j), s, m, scope) {
            return MatchResult::matched(Anchor { k, h, s });
        }
    }
    MatchResult::NONE
}

/// Largest square match of A's windows anchored at `(i, j)` inside B, with area ≥ `alpha`.
pub fn largest_match(
    a: &SymbolMatrix,
    (i, j): (usize, usize),
    b: &SymbolMatrix,
    scope: Scope,
    matcher: &MatcherSpec,
    alpha: u64,
) -> Result<MatchResult> {
    let n = a.side()?;
    let m = b.side()?;
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::WindowOutOfBounds {
            i,
            j,
            s: 1,
            rows: n,
            cols: n,
        });
    }
    if alpha == 0 {
        return Err(Error::InvalidParameter("alpha must be ≥ 1".into()));
    }
    scope.validate()?;
    let cmp = DirectComparator::new(a, b, *matcher)?;
    Ok(largest_match_with(&cmp, (i, j), n, m, scope, min_side(alpha)))
}
