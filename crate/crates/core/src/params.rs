//! Measure parameters: how windows are compared, where anchors are searched,
//! and the per-position match outcome.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::min_side;

/// Distance between two equal-size windows over raw symbol codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMetric {
    /// Mismatching positions over window area.
    HammingFraction,
    /// Sum of absolute code differences over window area.
    MeanAbsDiff,
    /// `MeanAbsDiff` scaled by `L - 1`; zero for a single-symbol alphabet.
    NormalizedMeanAbsDiff,
}

impl DistanceMetric {
    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            DistanceMetric::HammingFraction => "hamming",
            DistanceMetric::MeanAbsDiff => "mad",
            DistanceMetric::NormalizedMeanAbsDiff => "nmad",
        }
    }

    /// Turns an accumulated cost (mismatch count or absolute-difference sum)
    /// over a side-`s` window into the metric value.
    #[inline]
    pub fn finish(self, cost: u64, side: usize, alphabet: u32) -> f64 {
        let area = (side * side) as u64;
        match self {
            DistanceMetric::HammingFraction | DistanceMetric::MeanAbsDiff => cost as f64 / area as f64,
            DistanceMetric::NormalizedMeanAbsDiff => {
                if alphabet <= 1 {
                    0.0
                } else {
                    cost as f64 / (area * u64::from(alphabet - 1)) as f64
                }
            }
        }
    }
}

impl fmt::Display for DistanceMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for DistanceMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "hamming" | "hamming_fraction" => Ok(DistanceMetric::HammingFraction),
            "mad" | "mean_abs_diff" => Ok(DistanceMetric::MeanAbsDiff),
            "nmad" | "normalized_mean_abs_diff" => Ok(DistanceMetric::NormalizedMeanAbsDiff),
            _ => Err(Error::InvalidParameter(format!(
                "unknown metric {s:?} (expected hamming, mad or nmad)"
            ))),
        }
    }
}

/// How two equal-size windows are compared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatcherSpec {
    /// Every element pair must be equal.
    Exact,
    /// Only offsets `(r, c)` with `r % interval == 0 && c % interval == 0` are compared.
    Interval(usize),
    /// Positive match when `metric(window_a, window_b) < tau`.
    Distance { metric: DistanceMetric, tau: f64 },
}

impl MatcherSpec {
    pub fn interval(interval: usize) -> Result<Self> {
        if interval == 0 {
            return Err(Error::InvalidParameter("interval must be ≥ 1".into()));
        }
        Ok(MatcherSpec::Interval(interval))
    }

    pub fn distance(metric: DistanceMetric, tau: f64) -> Result<Self> {
        if !(tau.is_finite() && tau > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "tau must be a finite value > 0 (got {tau})"
            )));
        }
        Ok(MatcherSpec::Distance { metric, tau })
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match *self {
            MatcherSpec::Exact => Ok(()),
            MatcherSpec::Interval(i) => Self::interval(i).map(drop),
            MatcherSpec::Distance { metric, tau } => Self::distance(metric, tau).map(drop),
        }
    }
}

/// Where candidate anchors are searched in B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Global,
    /// Square window of side `epsilon` (odd) centred on the anchor's own coordinates.
    Neighborhood {
        epsilon: usize,
    },
}

impl Scope {
    pub fn neighborhood(epsilon: usize) -> Result<Self> {
        if epsilon == 0 || epsilon.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be an odd integer ≥ 1 (got {epsilon})"
            )));
        }
        Ok(Scope::Neighborhood { epsilon })
    }

    /// Chebyshev radius, `None` for global scope.
    pub fn radius(&self) -> Option<usize> {
        match *self {
            Scope::Global => None,
            Scope::Neighborhood { epsilon } => Some(epsilon / 2),
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match *self {
            Scope::Global => Ok(()),
            Scope::Neighborhood { epsilon } => Self::neighborhood(epsilon).map(drop),
        }
    }
}

/// Full parameter set of one directed similarity computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureParams {
    /// Minimum submatrix area.
    pub alpha: u64,
    pub scope: Scope,
    pub matcher: MatcherSpec,
    /// Frequency-gate threshold in `[0, 1]`; 0 disables the gate.
    pub p0: f64,
}

impl MeasureParams {
    pub fn new(alpha: u64, scope: Scope, matcher: MatcherSpec, p0: f64) -> Result<Self> {
        let params = Self {
            alpha,
            scope,
            matcher,
            p0,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha == 0 {
            return Err(Error::InvalidParameter("alpha must be ≥ 1".into()));
        }
        if !(0.0..=1.0).contains(&self.p0) {
            return Err(Error::InvalidParameter(format!(
                "p0 must lie in [0, 1] (got {})",
                self.p0
            )));
        }
        self.scope.validate()?;
        self.matcher.validate()
    }

    /// Smallest admissible side, `ceil(sqrt(alpha))`.
    pub fn s_min(&self) -> usize {
        min_side(self.alpha)
    }
}

/// Bottom-right corner `(k, h)` in B plus side `s`; identifies a submatrix of B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Anchor {
    pub k: usize,
    pub h: usize,
    pub s: usize,
}

/// Outcome of the largest-match search at one position of A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MatchResult {
    /// Matched area, 0 when nothing of area ≥ alpha matched.
    pub w: u64,
    pub anchor: Option<Anchor>,
}

impl MatchResult {
    pub const NONE: MatchResult = MatchResult { w: 0, anchor: None };

    pub fn matched(anchor: Anchor) -> Self {
        Self {
            w: (anchor.s * anchor.s) as u64,
            anchor: Some(anchor),
        }
    }
}
