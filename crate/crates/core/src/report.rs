//! Similarity reports.

use std::time::Duration;

use num_rational::Ratio;

use crate::params::{Anchor, MatchResult};

/// Row-major `n×n` grid of per-position match results, indexed 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WMap {
    side: usize,
    cells: Vec<MatchResult>,
}

impl WMap {
    pub(crate) fn new(side: usize, cells: Vec<MatchResult>) -> Self {
        assert_eq!(cells.len(), side * side);
        Self { side, cells }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> &MatchResult {
        assert!((1..=self.side).contains(&i) && (1..=self.side).contains(&j));
        &self.cells[(i - 1) * self.side + (j - 1)]
    }

    pub fn cells(&self) -> &[MatchResult] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[MatchResult]> {
        self.cells.chunks(self.side)
    }
}

/// Aggregates of one directed pass (A searched inside B).
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedSummary {
    pub s_numerator: u64,
    pub s_denominator: u64,
    /// Positions with `w > 0`.
    pub matched_positions: u64,
    /// Distinct `(k, h, s)` anchor triples among matched positions.
    pub distinct_anchors: u64,
    pub p1: f64,
    pub p2: f64,
    pub gated: bool,
}

impl DirectedSummary {
    pub(crate) fn from_w_map(w_map: &WMap, p0: f64) -> Self {
        use std::collections::HashSet;

        let s_numerator = w_map.cells().iter().map(|c| c.w).sum();
        let s_denominator = (w_map.side() * w_map.side()) as u64;
        let matched_positions = w_map.cells().iter().filter(|c| c.w > 0).count() as u64;
        let distinct_anchors = w_map
            .cells()
            .iter()
            .filter_map(|c| c.anchor)
            .collect::<HashSet<Anchor>>()
            .len() as u64;
        let p1 = matched_positions as f64 / s_denominator as f64;
        let p2 = distinct_anchors as f64 / s_denominator as f64;
        Self {
            s_numerator,
            s_denominator,
            matched_positions,
            distinct_anchors,
            p1,
            p2,
            gated: p0 > 0.0 && p1.min(p2) < p0,
        }
    }
}

/// Result of comparing A against B under one measure.
///
/// The top-level fields describe the directed pass A→B. `reverse` holds the
/// B→A aggregates needed for the symmetric dissimilarity.
#[derive(Debug, Clone)]
pub struct SimilarityReport {
    /// `Σ W(i,j)` over A.
    pub s_numerator: u64,
    /// `n²`.
    pub s_denominator: u64,
    /// `S / s_max(n, m, alpha)`.
    pub s_normalized: f64,
    pub dissimilarity: f64,
    /// Exact dissimilarity; `dissimilarity` is its nearest float.
    pub dissimilarity_exact: Ratio<u128>,
    pub p1: f64,
    pub p2: f64,
    pub matched_positions: u64,
    pub distinct_anchors: u64,
    pub gated: bool,
    pub w_map: WMap,
    pub reverse: DirectedSummary,
    pub elapsed: Duration,
}

impl SimilarityReport {
    /// Side of A.
    pub fn n(&self) -> usize {
        self.w_map.side()
    }

    /// Directed similarity `S` as an exact (unreduced on display) rational.
    pub fn similarity(&self) -> Ratio<u64> {
        Ratio::new(self.s_numerator, self.s_denominator)
    }

    /// Aggregates of the A→B pass.
    pub fn forward(&self) -> DirectedSummary {
        DirectedSummary {
            s_numerator: self.s_numerator,
            s_denominator: self.s_denominator,
            matched_positions: self.matched_positions,
            distinct_anchors: self.distinct_anchors,
            p1: self.p1,
            p2: self.p2,
            gated: self.gated,
        }
    }

    /// Equality of everything except wall-clock time.
    pub fn same_outcome(&self, other: &SimilarityReport) -> bool {
        self.s_numerator == other.s_numerator
            && self.s_denominator == other.s_denominator
            && self.dissimilarity_exact == other.dissimilarity_exact
            && self.matched_positions == other.matched_positions
            && self.distinct_anchors == other.distinct_anchors
            && self.gated == other.gated
            && self.w_map == other.w_map
            && self.reverse == other.reverse
    }
}
