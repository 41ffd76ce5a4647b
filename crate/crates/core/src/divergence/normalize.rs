//! Source-line normalisation: comments out, whitespace collapsed, blanks
//! dropped.

use serde::{Deserialize, Serialize};

/// Which comment syntaxes are stripped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommentDialect {
    /// Markers that start a comment running to the end of the line.
    #[serde(default)]
    pub line: Vec<String>,
    /// `(open, close)` pairs delimiting block comments, which may span lines.
    #[serde(default)]
    pub block: Vec<(String, String)>,
}

impl Default for CommentDialect {
    /// `//`, `#` and `/* ... */`.
    fn default() -> Self {
        Self {
            line: vec!["//".into(), "#".into()],
            block: vec![("/*".into(), "*/".into())],
        }
    }
}

impl CommentDialect {
    /// C-family comments only; keeps preprocessor lines.
    pub fn c_family() -> Self {
        Self {
            line: vec!["//".into()],
            block: vec![("/*".into(), "*/".into())],
        }
    }
}

/// One normalised source line, identified by the file it came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineRecord {
    pub file: String,
    pub text: String,
}

impl LineRecord {
    pub fn new(file: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            file: file.into(),
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeWarning {
    /// A block comment opened on `line` (1-based) never closed; the rest of
    /// the file was treated as comment.
    UnterminatedBlockComment { file: String, line: usize },
}

impl std::fmt::Display for NormalizeWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::UnterminatedBlockComment { file, line } => write!(
                f,
                "{file}:{line}: unterminated block comment, rest of file ignored"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Normalized {
    pub records: Vec<LineRecord>,
    pub warnings: Vec<NormalizeWarning>,
}

fn flush(buf: &mut String, file: &str, out: &mut Vec<LineRecord>) {
    let text = buf.split_whitespace().collect::<Vec<_>>().join(" ");
    if !text.is_empty() {
        out.push(LineRecord::new(file, text));
    }
    buf.clear();
}

/// Normalises one file's text into line records tagged with `file`.
///
/// Double-quoted string literals are respected, so `"http://x"` survives.
/// A block comment is replaced by a single space.
pub fn normalize_lines(file: &str, text: &str, dialect: &CommentDialect) -> Normalized {
    let mut out = Normalized::default();
    let mut buf = String::new();
    let mut line_no = 1usize;
    // (close delimiter, line it opened on)
    let mut block: Option<(&str, usize)> = None;
    let mut in_string = false;

    let mut i = 0;
    while i < text.len() {
        let rest = &text[i..];
        let ch = rest.chars().next().expect("non-empty remainder");

        if ch == '\n' {
            flush(&mut buf, file, &mut out.records);
            line_no += 1;
            in_string = false;
            i += 1;
            continue;
        }

        if let Some((close, _)) = block {
            if rest.starts_with(close) {
                block = None;
                i += close.len();
            } else {
                i += ch.len_utf8();
            }
            continue;
        }

        if in_string {
            buf.push(ch);
            i += ch.len_utf8();
            if ch == '\\' {
                if let Some(next) = text[i..].chars().next().filter(|c| *c != '\n') {
                    buf.push(next);
                    i += next.len_utf8();
                }
            } else if ch == '"' {
                in_string = false;
            }
            continue;
        }

        if let Some((open, close)) = dialect
            .block
            .iter()
            .find(|(open, _)| !open.is_empty() && rest.starts_with(open.as_str()))
        {
            block = Some((close.as_str(), line_no));
            buf.push(' ');
            i += open.len();
            continue;
        }

        if dialect
            .line
            .iter()
            .any(|m| !m.is_empty() && rest.starts_with(m.as_str()))
        {
            i += rest.find('\n').unwrap_or(rest.len());
            continue;
        }

        if ch == '"' {
            in_string = true;
        }
        buf.push(ch);
        i += ch.len_utf8();
    }

    flush(&mut buf, file, &mut out.records);
    if let Some((_, line)) = block {
        out.warnings.push(NormalizeWarning::UnterminatedBlockComment {
            file: file.to_string(),
            line,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<String> {
        normalize_lines("f.cpp", src, &CommentDialect::default())
            .records
            .into_iter()
            .map(|r| r.text)
            .collect()
    }

    #[test]
    fn strips_line_comment_and_collapses_whitespace() {
        assert_eq!(texts("int  x = 1; // init"), ["int x = 1;"]);
        assert_eq!(texts("\t  a\t\tb  \r\n"), ["a b"]);
    }

    #[test]
    fn comment_only_file_is_empty() {
        assert!(texts("// one\n# two\n/* three\n four */\n\n   \n").is_empty());
    }

    #[test]
    fn multi_line_block_comment() {
        assert_eq!(texts("/* a \n b */ y=2;"), ["y=2;"]);
        assert_eq!(texts("int/*x*/y;"), ["int y;"]);
    }

    #[test]
    fn strings_are_not_comments() {
        assert_eq!(texts(r#"url = "http://x/*y*/"; // c"#), [r#"url = "http://x/*y*/";"#]);
        assert_eq!(texts(r#"s = "a\"//b"; // c"#), [r#"s = "a\"//b";"#]);
    }

    #[test]
    fn unterminated_block_warns() {
        let n = normalize_lines("g.h", "keep;\n/* open\nlost;\n", &CommentDialect::default());
        assert_eq!(n.records, vec![LineRecord::new("g.h", "keep;")]);
        assert_eq!(
            n.warnings,
            vec![NormalizeWarning::UnterminatedBlockComment {
                file: "g.h".into(),
                line: 2
            }]
        );
    }

    #[test]
    fn c_family_dialect_keeps_preprocessor() {
        let n = normalize_lines("a.h", "#include <x>\n// c\n", &CommentDialect::c_family());
        assert_eq!(n.records, vec![LineRecord::new("a.h", "#include <x>")]);
        assert!(texts("#include <x>").is_empty());
    }

    #[test]
    fn records_keep_file_path() {
        let n = normalize_lines("dir/k.cu", "a;\nb;", &CommentDialect::default());
        assert!(n.records.iter().all(|r| r.file == "dir/k.cu"));
    }
}
