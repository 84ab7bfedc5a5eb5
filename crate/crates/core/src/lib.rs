//! Average Common Submatrix (ACSM) similarity measures for square symbol matrices.
//!
//! Three measures share one pipeline: for every position of A, the largest
//! square window anchored there that matches somewhere in B is found by a
//! descending-size search, and the matched areas are averaged.
//!
//! * [`measures::acsm_similarity`]: exact matching anywhere in B.
//! * [`measures::approx_acsm`]: matching on a sampled grid of window offsets.
//! * [`measures::eacsm`]: matching restricted to an ε×ε neighbourhood, with a
//!   distance threshold and a frequency gate on matched positions.

pub mod cli;
pub mod error;
pub mod ingest;
pub mod matching;
pub mod matrix;
pub mod measures;
pub mod params;
pub mod report;

pub use error::{Error, Result};
pub use matrix::{index_bounds, validate_matrix, Symbol, SymbolMatrix};
pub use measures::{acsm_similarity, approx_acsm, dissimilarity, eacsm, s_max, MeasureKind};
pub use params::{Anchor, DistanceMetric, MatchResult, MatcherSpec, MeasureParams, Scope};
pub use report::{DirectedSummary, SimilarityReport, WMap};
