use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::normalize::LineRecord;
use super::DivergenceError;

/// The set of normalised lines platform `platform` needs to build
/// `application` and run `problem`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatformLineSet {
    pub platform: String,
    pub application: String,
    pub problem: String,
    pub lines: BTreeSet<LineRecord>,
}

impl PlatformLineSet {
    pub fn new(
        platform: impl Into<String>,
        application: impl Into<String>,
        problem: impl Into<String>,
        lines: impl IntoIterator<Item = LineRecord>,
    ) -> Self {
        Self {
            platform: platform.into(),
            application: application.into(),
            problem: problem.into(),
            lines: lines.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// Jaccard similarity as raw counts; the ratio is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Similarity {
    pub union: usize,
    pub intersection: usize,
}

impl Similarity {
    /// Counts must satisfy `0 <= intersection <= union`, `union > 0`.
    pub fn from_counts(union: usize, intersection: usize) -> Result<Self, DivergenceError> {
        if union == 0 || intersection > union {
            return Err(DivergenceError::InvalidCounts {
                union,
                intersection,
            });
        }
        Ok(Self {
            union,
            intersection,
        })
    }

    /// `|ci ∩ cj| / |ci ∪ cj|`.
    pub fn value(&self) -> BigRational {
        BigRational::new(self.intersection.into(), self.union.into())
    }

    /// Jaccard distance, `1 - value`.
    pub fn distance(&self) -> BigRational {
        BigRational::one() - self.value()
    }

    pub fn to_f64(&self) -> f64 {
        self.intersection as f64 / self.union as f64
    }

    /// Decimal rendering, rounded half-up.
    pub fn rounded(&self, places: u32) -> String {
        round_decimal(&self.value(), places)
    }
}

/// Similarity of two platforms' line sets.
///
/// Both sets empty is an error rather than `0/0`.
pub fn similarity(ci: &PlatformLineSet, cj: &PlatformLineSet) -> Result<Similarity, DivergenceError> {
    if ci.application != cj.application || ci.problem != cj.problem {
        return Err(DivergenceError::ContextMismatch {
            left: format!("{}/{}", ci.application, ci.problem),
            right: format!("{}/{}", cj.application, cj.problem),
        });
    }
    let (small, large) = if ci.len() <= cj.len() {
        (&ci.lines, &cj.lines)
    } else {
        (&cj.lines, &ci.lines)
    };
    let intersection = small.iter().filter(|r| large.contains(*r)).count();
    let union = ci.len() + cj.len() - intersection;
    if union == 0 {
        return Err(DivergenceError::EmptyComparison {
            left: ci.platform.clone(),
            right: cj.platform.clone(),
        });
    }
    Ok(Similarity {
        union,
        intersection,
    })
}

/// Similarity of one unordered platform pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSimilarity {
    pub left: String,
    pub right: String,
    pub similarity: Similarity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeDivergence {
    /// Mean pairwise Jaccard distance, exact.
    pub value: BigRational,
    /// Every unordered pair, in input order (`i < j`).
    pub pairs: Vec<PairSimilarity>,
}

impl CodeDivergence {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.value)
    }

    pub fn rounded(&self, places: u32) -> String {
        round_decimal(&self.value, places)
    }
}

/// Mean of `1 - s` over the given pairwise similarities.
pub fn mean_pairwise_distance<I>(similarities: I) -> Option<BigRational>
where
    I: IntoIterator<Item = BigRational>,
{
    let mut sum = BigRational::zero();
    let mut count = 0u64;
    for s in similarities {
        sum += BigRational::one() - s;
        count += 1;
    }
    (count > 0).then(|| sum / BigRational::from_integer(count.into()))
}

/// Average pairwise Jaccard distance across one line set per platform.
///
/// Needs at least two platforms with distinct ids sharing application and
/// problem. Any pair of empty sets makes the result undefined; the error
/// names that pair.
pub fn code_divergence(sets: &[PlatformLineSet]) -> Result<CodeDivergence, DivergenceError> {
    if sets.len() < 2 {
        return Err(DivergenceError::TooFewPlatforms(sets.len()));
    }
    let mut seen = BTreeSet::new();
    for s in sets {
        if !seen.insert(s.platform.as_str()) {
            return Err(DivergenceError::DuplicatePlatform(s.platform.clone()));
        }
    }
    let mut pairs = Vec::with_capacity(sets.len() * (sets.len() - 1) / 2);
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            let similarity = similarity(a, b).map_err(|e| match e {
                DivergenceError::EmptyComparison { left, right } => {
                    DivergenceError::UndefinedDivergence { left, right }
                }
                other => other,
            })?;
            pairs.push(PairSimilarity {
                left: a.platform.clone(),
                right: b.platform.clone(),
                similarity,
            });
        }
    }
    let value = mean_pairwise_distance(pairs.iter().map(|p| p.similarity.value()))
        .expect("at least one pair");
    Ok(CodeDivergence { value, pairs })
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Rounds half away from zero to `places` decimals and renders the result.
pub fn round_decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let negative = r.is_negative();
    let magnitude = r.abs() * BigRational::from_integer(scale.clone());
    let half = BigRational::new(1.into(), 2.into());
    let scaled = (magnitude + half).floor().to_integer();
    let (whole, frac) = scaled.div_rem(&scale);
    let sign = if negative && !scaled.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = places as usize)
}
