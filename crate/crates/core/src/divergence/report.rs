use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use num_rational::BigRational;

use super::manifest::Manifest;
use super::metric::{code_divergence, mean_pairwise_distance, rational_to_f64, round_decimal};
use super::normalize::{normalize_lines, NormalizeWarning};
use super::{similarity, DivergenceError, PlatformLineSet, Similarity, REPORT_PLACES};
use num_traits::One;

/// One compared platform pair, `left < right` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRow {
    pub problem: String,
    pub left: String,
    pub right: String,
    /// `None` when both sides are empty.
    pub similarity: Option<Similarity>,
}

impl PairRow {
    pub fn platform_label(&self) -> String {
        format!("{}-{}", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivergenceOutcome {
    Defined(BigRational),
    /// Names the first pair whose similarity is undefined.
    Undefined { left: String, right: String },
}

impl DivergenceOutcome {
    pub fn value(&self) -> Option<&BigRational> {
        match self {
            Self::Defined(v) => Some(v),
            Self::Undefined { .. } => None,
        }
    }

    fn render(&self) -> String {
        match self {
            Self::Defined(v) => round_decimal(v, REPORT_PLACES),
            Self::Undefined { left, right } => format!("undefined ({left} vs {right} both empty)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSummary {
    pub problem: String,
    pub platforms: Vec<String>,
    pub divergence: DivergenceOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceReport {
    pub application: String,
    /// Sorted by `(problem, left, right)`.
    pub rows: Vec<PairRow>,
    pub problems: Vec<ProblemSummary>,
    /// Mean of the per-problem divergences; `None` if any is undefined.
    pub overall: Option<BigRational>,
    pub warnings: Vec<NormalizeWarning>,
}

/// Loads the manifest at `path` and analyses it.
pub fn analyze_path(path: &Path) -> Result<DivergenceReport, DivergenceError> {
    analyze(&Manifest::load(path)?)
}

/// Reads every file the manifest lists and builds the full report.
pub fn analyze(manifest: &Manifest) -> Result<DivergenceReport, DivergenceError> {
    let mut rows = Vec::new();
    let mut problems = Vec::new();
    let mut warnings = Vec::new();

    for problem in &manifest.problems {
        let mut sets = Vec::with_capacity(problem.platforms.len());
        for platform in &problem.platforms {
            let dialect = manifest.dialect_for(platform);
            let mut lines = BTreeSet::new();
            for file in &platform.files {
                let path = manifest.resolve(file);
                let text = std::fs::read_to_string(&path).map_err(|e| DivergenceError::Io {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
                let normalized = normalize_lines(file.record_name(), &text, &dialect);
                lines.extend(normalized.records);
                warnings.extend(normalized.warnings);
            }
            sets.push(PlatformLineSet {
                platform: platform.id.clone(),
                application: manifest.application.clone(),
                problem: problem.id.clone(),
                lines,
            });
        }

        let divergence = match code_divergence(&sets) {
            Ok(cd) => DivergenceOutcome::Defined(cd.value),
            Err(DivergenceError::UndefinedDivergence { left, right }) => {
                DivergenceOutcome::Undefined { left, right }
            }
            Err(e) => return Err(e),
        };

        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                let (a, b) = if a.platform <= b.platform { (a, b) } else { (b, a) };
                let similarity = match similarity(a, b) {
                    Ok(s) => Some(s),
                    Err(DivergenceError::EmptyComparison { .. }) => None,
                    Err(e) => return Err(e),
                };
                rows.push(PairRow {
                    problem: problem.id.clone(),
                    left: a.platform.clone(),
                    right: b.platform.clone(),
                    similarity,
                });
            }
        }

        problems.push(ProblemSummary {
            problem: problem.id.clone(),
            platforms: sets.iter().map(|s| s.platform.clone()).collect(),
            divergence,
        });
    }

    rows.sort_by(|x, y| (&x.problem, &x.left, &x.right).cmp(&(&y.problem, &y.left, &y.right)));

    // mean CD = 1 - mean(1 - CD); reuse the exact averaging helper
    let overall = problems
        .iter()
        .map(|p| p.divergence.value().cloned())
        .collect::<Option<Vec<_>>>()
        .and_then(|cds| mean_pairwise_distance(cds.into_iter().map(|cd| BigRational::one() - cd)));

    Ok(DivergenceReport {
        application: manifest.application.clone(),
        rows,
        problems,
        overall,
        warnings,
    })
}

impl DivergenceReport {
    /// Fixed-width table: Similarity, Union, Intersection, Platform, Problem,
    /// followed by the divergence lines.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<10}  {:>8}  {:>12}  {:<24}  {}",
            "Similarity", "Union", "Intersection", "Platform", "Problem"
        );
        for row in &self.rows {
            let (sim, union, inter) = match &row.similarity {
                Some(s) => (
                    s.rounded(REPORT_PLACES),
                    s.union.to_string(),
                    s.intersection.to_string(),
                ),
                None => ("empty".to_string(), "0".to_string(), "0".to_string()),
            };
            let _ = writeln!(
                out,
                "{:<10}  {:>8}  {:>12}  {:<24}  {}",
                sim,
                union,
                inter,
                row.platform_label(),
                row.problem
            );
        }
        out.push('\n');
        for p in &self.problems {
            let _ = writeln!(out, "code divergence [{}]: {}", p.problem, p.divergence.render());
        }
        match &self.overall {
            Some(v) => {
                let _ = writeln!(out, "code divergence [overall]: {}", round_decimal(v, REPORT_PLACES));
            }
            None => out.push_str("code divergence [overall]: undefined\n"),
        }
        out
    }

    /// CSV with one `pair` row per comparison and one `cd` row per problem
    /// plus an `overall` row.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record([
            "kind",
            "similarity",
            "union",
            "intersection",
            "platform",
            "problem",
            "code_divergence",
        ])?;
        for row in &self.rows {
            let (sim, union, inter) = match &row.similarity {
                Some(s) => (
                    s.rounded(REPORT_PLACES),
                    s.union.to_string(),
                    s.intersection.to_string(),
                ),
                None => ("empty".to_string(), "0".to_string(), "0".to_string()),
            };
            w.write_record([
                "pair",
                &sim,
                &union,
                &inter,
                &row.platform_label(),
                &row.problem,
                "",
            ])?;
        }
        for p in &self.problems {
            w.write_record([
                "cd",
                "",
                "",
                "",
                &p.platforms.join("|"),
                &p.problem,
                &p.divergence.render(),
            ])?;
        }
        let overall = self
            .overall
            .as_ref()
            .map(|v| round_decimal(v, REPORT_PLACES))
            .unwrap_or_else(|| "undefined".to_string());
        w.write_record(["cd", "", "", "", "", "overall", &overall])?;
        w.flush()?;
        Ok(())
    }

    pub fn overall_f64(&self) -> Option<f64> {
        self.overall.as_ref().map(rational_to_f64)
    }
}
