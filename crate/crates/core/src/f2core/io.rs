//! Plain-text code files.
//!
//! ```text
//! # optional comments
//! n=6
//! 000000
//! 111000   # trailing comments are fine too
//! ```
//!
//! The header must be the first non-blank line. Every following non-blank
//! line holds one word of exactly `n` characters; duplicates are an error.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::f2core::code::Code;
use crate::f2core::word::Word;

pub fn parse_code(text: &str) -> Result<Code> {
    let mut len: Option<usize> = None;
    let mut seen = HashSet::new();
    let mut words = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = len else {
            let value = line.strip_prefix("n=").ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("expected header `n=<int>`, found {line:?}"),
            })?;
            let n: usize = value.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad length {value:?}"),
            })?;
            if n == 0 || n > crate::f2core::word::MAX_LEN {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unsupported length {n}"),
                });
            }
            len = Some(n);
            continue;
        };
        if line.len() != n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("word has {} characters, expected {n}", line.len()),
            });
        }
        let w: Word = line.parse().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: lineno, msg },
            other => Error::Parse {
                line: lineno,
                msg: other.to_string(),
            },
        })?;
        if !seen.insert(w) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate word {w}"),
            });
        }
        words.push(w);
    }
    let n = len.ok_or(Error::Parse {
        line: 0,
        msg: "missing `n=` header".into(),
    })?;
    Code::new(n, words)
}

/// Serializes a code with its words in ascending lexicographic order.
pub fn format_code(c: &Code) -> String {
    let mut s = String::with_capacity((c.len() + 1) * (c.size() + 1));
    let _ = writeln!(s, "n={}", c.len());
    for w in c {
        let _ = writeln!(s, "{w}");
    }
    s
}

pub fn read_code(path: impl AsRef<Path>) -> Result<Code> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_code(&text)
}

pub fn write_code(path: impl AsRef<Path>, c: &Code) -> Result<()> {
    std::fs::write(path.as_ref(), format_code(c))
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let c = parse_code("# demo\n\nn=4\n1100 # first\n0011\n").unwrap();
        assert_eq!(c.size(), 2);
        assert_eq!(format_code(&c), "n=4\n0011\n1100\n");
    }

    #[test]
    fn rejects_duplicates_and_bad_lines() {
        assert!(matches!(
            parse_code("n=2\n01\n01\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_code("n=2\n011\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_code("n=2\n0a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_code("01\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_code("# nothing\n").is_err());
    }

    #[test]
    fn header_only_is_empty_code() {
        assert!(parse_code("n=3\n").unwrap().is_empty());
    }
}
