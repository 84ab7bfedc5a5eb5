//! Per-offset prefix sums for constant-time window comparison.
//!
//! For an anchor offset `(dk, dh) = (k - i, h - j)` every element of A's
//! window is paired with the element of B displaced by the same offset. A
//! (strided) 2D prefix sum of the per-element cost over A's coordinates then
//! yields the total cost of any window pair at that offset in O(1).
//! Building the tables costs O(offsets · n²), which pays off when the scope
//! limits the number of offsets.
//!
//! Storage is cell-major: the sums of all offsets for one A cell are
//! contiguous, so a row-major anchor scan walks memory sequentially.

use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;
use crate::params::{DistanceMetric, MatcherSpec, Scope};

use super::{element_cost, WindowComparator};

/// Prefix-sum tables for every anchor offset reachable under a scope.
#[derive(Debug, Clone)]
pub struct OffsetTables {
    n: usize,
    stride: usize,
    /// Padded table side, `n + stride`.
    width: usize,
    offset_lo: isize,
    /// Offsets per axis.
    span: usize,
    sums: Vec<u64>,
    /// `cutoff[s]`: a side-`s` pair matches iff its cost is below this.
    cutoff: Vec<u64>,
}

impl OffsetTables {
    /// Number of offsets `(dk, dh)` that can produce a valid anchor under `scope`.
    pub fn offset_count(scope: Scope, n: usize, m: usize) -> usize {
        let (lo, hi) = Self::offset_range(scope, n, m);
        if lo > hi {
            0
        } else {
            let span = (hi - lo + 1) as usize;
            span * span
        }
    }

    /// Table cells needed for `scope` (memory use in `u64`s).
    pub fn cell_count(scope: Scope, n: usize, m: usize, matcher: &MatcherSpec) -> usize {
        let stride = match *matcher {
            MatcherSpec::Interval(i) => i.max(1),
            _ => 1,
        };
        Self::offset_count(scope, n, m).saturating_mul((n + stride) * (n + stride))
    }

    fn offset_range(scope: Scope, n: usize, m: usize) -> (isize, isize) {
        // anchors satisfy 1 ≤ k ≤ m and 1 ≤ i ≤ n, so dk ∈ [1 - n, m - 1]
        let (mut lo, mut hi) = (1 - n as isize, m as isize - 1);
        if let Some(r) = scope.radius() {
            lo = lo.max(-(r as isize));
            hi = hi.min(r as isize);
        }
        (lo, hi)
    }

    pub fn build(a: &SymbolMatrix, b: &SymbolMatrix, scope: Scope, matcher: MatcherSpec) -> Result<Self> {
        let n = a.side()?;
        let m = b.side()?;
        scope.validate()?;
        matcher.validate()?;
        let (stride, metric) = match matcher {
            MatcherSpec::Exact => (1, DistanceMetric::HammingFraction),
            MatcherSpec::Interval(i) => (i, DistanceMetric::HammingFraction),
            MatcherSpec::Distance { metric, .. } => {
                if a.alphabet_size() != b.alphabet_size() {
                    return Err(Error::AlphabetMismatch {
                        a: a.alphabet_size(),
                        b: b.alphabet_size(),
                    });
                }
                (1, metric)
            }
        };
        let cutoff = (0..=n)
            .map(|s| match matcher {
                MatcherSpec::Distance { metric, tau } if s > 0 => cost_cutoff(metric, tau, s, a.alphabet_size()),
                _ => 1,
            })
            .collect();

        let (lo, hi) = Self::offset_range(scope, n, m);
        let span = if lo > hi { 0 } else { (hi - lo + 1) as usize };
        let count = span * span;
        let width = n + stride;
        let mut sums = vec![0u64; width * width * count];
        let mut costs = vec![0u64; count];
        for r in 0..n {
            let a_row = a.row0(r);
            for (c, &x) in a_row.iter().enumerate() {
                for (o, cost) in costs.iter_mut().enumerate() {
                    let br = r as isize + lo + (o / span) as isize;
                    let bc = c as isize + lo + (o % span) as isize;
                    *cost = if (0..m as isize).contains(&br) && (0..m as isize).contains(&bc) {
                        element_cost(metric, x, b.row0(br as usize)[bc as usize])
                    } else {
                        0
                    };
                }
                let (pr, pc) = (r + stride, c + stride);
                let here = (pr * width + pc) * count;
                let up = ((pr - stride) * width + pc) * count;
                let left = (pr * width + pc - stride) * count;
                let diag = ((pr - stride) * width + pc - stride) * count;
                for o in 0..count {
                    sums[here + o] = costs[o]
                        .wrapping_add(sums[up + o])
                        .wrapping_add(sums[left + o])
                        .wrapping_sub(sums[diag + o]);
                }
            }
        }
        Ok(Self {
            n,
            stride,
            width,
            offset_lo: lo,
            span,
            sums,
            cutoff,
        })
    }

    /// Accumulated (sampled) cost between A's side-`s` window at `(i, j)` and B's at `(k, h)`.
    #[inline]
    pub fn window_cost(&self, i: usize, j: usize, k: usize, h: usize, s: usize) -> u64 {
        let dk = k as isize - i as isize;
        let dh = h as isize - j as isize;
        let o = (dk - self.offset_lo) as usize * self.span + (dh - self.offset_lo) as usize;
        let count = self.span * self.span;
        let w = self.width;
        let p = self.stride;
        // sampled rows: top, top + p, ..., top + p*q in 0-based A coordinates
        let q = (s - 1) / p;
        let (top, left) = (i - s, j - s);
        let (bottom, right) = (top + p * q + p, left + p * q + p);
        let at = |r: usize, c: usize| self.sums[(r * w + c) * count + o];
        at(bottom, right)
            .wrapping_sub(at(top, right))
            .wrapping_sub(at(bottom, left))
            .wrapping_add(at(top, left))
    }

    pub fn side(&self) -> usize {
        self.n
    }
}

/// Smallest cost whose metric value reaches `tau` at side `s`; `u64::MAX` if none does.
fn cost_cutoff(metric: DistanceMetric, tau: f64, s: usize, alphabet: u32) -> u64 {
    let area = (s * s) as u64;
    let max_cost = match metric {
        DistanceMetric::HammingFraction => area,
        _ => area * u64::from(alphabet.saturating_sub(1)),
    };
    if metric.finish(max_cost, s, alphabet) < tau {
        return u64::MAX;
    }
    // finish is non-decreasing in cost
    let (mut lo, mut hi) = (0u64, max_cost);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if metric.finish(mid, s, alphabet) >= tau {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

impl WindowComparator for OffsetTables {
    #[inline]
    fn window_matches(&self, i: usize, j: usize, k: usize, h: usize, s: usize) -> bool {
        self.window_cost(i, j, k, h, s) < self.cutoff[s]
    }
}
