//! Code divergence between per-platform source trees.
//!
//! Each platform's code for a given problem is reduced to a set of
//! normalised line records; two platforms are compared with the Jaccard
//! similarity of their sets, and code divergence is the mean Jaccard
//! distance over all unordered platform pairs. Ratios are exact rationals;
//! rounding only happens when rendering.

mod manifest;
mod metric;
mod normalize;
mod report;

use std::path::PathBuf;

use thiserror::Error;

pub use manifest::{FileEntry, Manifest, PlatformEntry, ProblemEntry};
pub use metric::{
    code_divergence, mean_pairwise_distance, round_decimal, similarity, CodeDivergence,
    PairSimilarity, PlatformLineSet, Similarity,
};
pub use normalize::{normalize_lines, CommentDialect, LineRecord, NormalizeWarning, Normalized};
pub use report::{analyze, analyze_path, DivergenceOutcome, DivergenceReport, PairRow, ProblemSummary};

/// Decimal places used when rendering similarities and divergences.
pub const REPORT_PLACES: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivergenceError {
    #[error("both line sets are empty ({left} vs {right}); similarity is undefined")]
    EmptyComparison { left: String, right: String },
    #[error("code divergence undefined: platforms {left} and {right} both have no lines")]
    UndefinedDivergence { left: String, right: String },
    #[error("cannot compare {left} with {right}: application or problem differs")]
    ContextMismatch { left: String, right: String },
    #[error("code divergence needs at least 2 platforms, got {0}")]
    TooFewPlatforms(usize),
    #[error("platform {0} listed twice")]
    DuplicatePlatform(String),
    #[error("invalid counts: intersection {intersection} with union {union}")]
    InvalidCounts { union: usize, intersection: usize },
    #[error("invalid manifest: {0}")]
    Manifest(String),
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
}
