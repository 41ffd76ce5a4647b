//! TOML manifest describing which files make up each platform's code.
//!
//! ```toml
//! application = "genvectorx"
//!
//! # optional; defaults to //, # and /* */
//! [comments]
//! line = ["//"]
//! block = [["/*", "*/"]]
//!
//! [[problems]]
//! id = "invariant-masses"
//!
//! [[problems.platforms]]
//! id = "cpu"
//! files = ["src/LorentzVector.h", "src/InvariantMasses.cxx"]
//!
//! [[problems.platforms]]
//! id = "cuda"
//! files = [
//!     "src/LorentzVector.h",
//!     # a per-platform variant counted under the shared name
//!     { path = "cuda/InvariantMasses.cu", as = "src/InvariantMasses.cxx" },
//! ]
//! comments = { line = ["//"], block = [["/*", "*/"]] }
//! ```
//!
//! Paths are relative to the manifest's directory. The name a file is
//! recorded under (its path, or `as` when given) is part of every line
//! record, so only lines of identically named files can match.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::normalize::CommentDialect;
use super::DivergenceError;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub application: String,
    #[serde(default)]
    pub comments: Option<CommentDialect>,
    pub problems: Vec<ProblemEntry>,
    /// Directory the file paths are resolved against.
    #[serde(skip)]
    pub base_dir: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemEntry {
    pub id: String,
    pub platforms: Vec<PlatformEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlatformEntry {
    pub id: String,
    #[serde(default)]
    pub files: Vec<FileEntry>,
    #[serde(default)]
    pub comments: Option<CommentDialect>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum FileEntry {
    Path(String),
    Aliased {
        path: String,
        #[serde(rename = "as")]
        name: String,
    },
}

impl FileEntry {
    pub fn path(&self) -> &str {
        match self {
            Self::Path(p) | Self::Aliased { path: p, .. } => p,
        }
    }

    /// Name recorded in each line record.
    pub fn record_name(&self) -> &str {
        match self {
            Self::Path(p) => p,
            Self::Aliased { name, .. } => name,
        }
    }
}

impl Manifest {
    pub fn parse(text: &str, base_dir: impl Into<PathBuf>) -> Result<Self, DivergenceError> {
        let mut manifest: Manifest =
            toml::from_str(text).map_err(|e| DivergenceError::Manifest(e.to_string()))?;
        manifest.base_dir = base_dir.into();
        Ok(manifest)
    }

    pub fn load(path: &Path) -> Result<Self, DivergenceError> {
        let text = std::fs::read_to_string(path).map_err(|source| DivergenceError::Io {
            path: path.to_path_buf(),
            message: source.to_string(),
        })?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Self::parse(&text, base)
    }

    /// Comment dialect in force for `platform`.
    pub fn dialect_for(&self, platform: &PlatformEntry) -> CommentDialect {
        platform
            .comments
            .clone()
            .or_else(|| self.comments.clone())
            .unwrap_or_default()
    }

    pub fn resolve(&self, file: &FileEntry) -> PathBuf {
        self.base_dir.join(file.path())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_layout() {
        let text = r##"
            application = "app"
            [comments]
            line = ["//"]
            block = [["/*", "*/"]]

            [[problems]]
            id = "boost"
            [[problems.platforms]]
            id = "cpu"
            files = ["a.h"]
            [[problems.platforms]]
            id = "cuda"
            files = ["a.h", { path = "cuda/b.cu", as = "b.cxx" }]
            comments = { line = ["#"] }
        "##;
        let m = Manifest::parse(text, "/tmp/x").unwrap();
        assert_eq!(m.application, "app");
        let p = &m.problems[0];
        assert_eq!(p.platforms[1].files[1].record_name(), "b.cxx");
        assert_eq!(p.platforms[1].files[1].path(), "cuda/b.cu");
        assert_eq!(m.dialect_for(&p.platforms[0]), CommentDialect::c_family());
        assert_eq!(m.dialect_for(&p.platforms[1]).line, vec!["#".to_string()]);
        assert_eq!(m.resolve(&p.platforms[0].files[0]), PathBuf::from("/tmp/x/a.h"));
    }

    #[test]
    fn rejects_unknown_keys() {
        let err = Manifest::parse("application = 'a'\nproblems = []\nextra = 1\n", ".").unwrap_err();
        assert!(matches!(err, DivergenceError::Manifest(_)));
    }
}
