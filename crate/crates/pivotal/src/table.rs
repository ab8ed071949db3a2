//! Text file format for operation tables.
//!
//! ```text
//! domain 2
//! zero 0
//! one 1
//! arity 3
//! table 0 0 0 1 0 1 1 1
//! ```
//!
//! The five lines appear in this order; entries follow the fixed tuple
//! encoding (first argument most significant). Lines starting with `#` are
//! comments and blank lines are ignored. [`format_table`] emits the canonical
//! form above, so parse/format round-trips are byte-identical modulo comments
//! and blank lines.

use crate::ops::{Domain, El, OpError, Operation};
use std::fmt::Write as _;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableParseError {
    #[error("missing `{0}` line")]
    MissingLine(&'static str),
    #[error("line {line}: expected `{key} <value>`")]
    BadLine { line: usize, key: &'static str },
    #[error("line {line}: invalid number `{token}`")]
    BadNumber { line: usize, token: String },
    #[error("unexpected content after the table line: `{0}`")]
    TrailingContent(String),
    #[error(transparent)]
    Invalid(#[from] OpError),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next non-comment, non-blank line with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line));
        }
        None
    }
}

fn parse_number<T: FromStr>(line_no: usize, token: &str) -> Result<T, TableParseError> {
    token
        .parse()
        .map_err(|_| TableParseError::BadNumber { line: line_no, token: token.to_owned() })
}

fn parse_keyed(lines: &mut Lines, key: &'static str) -> Result<(usize, String), TableParseError> {
    let (line_no, line) = lines.next_content().ok_or(TableParseError::MissingLine(key))?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some(key) {
        return Err(TableParseError::BadLine { line: line_no, key });
    }
    let rest: Vec<&str> = parts.collect();
    if rest.is_empty() {
        return Err(TableParseError::BadLine { line: line_no, key });
    }
    Ok((line_no, rest.join(" ")))
}

/// Parse an operation from the table file format.
pub fn parse_table(text: &str) -> Result<Operation, TableParseError> {
    let mut lines = Lines::new(text);

    let (ln, value) = parse_keyed(&mut lines, "domain")?;
    let size: usize = parse_number(ln, &value)?;
    let (ln, value) = parse_keyed(&mut lines, "zero")?;
    let zero: usize = parse_number(ln, &value)?;
    let (ln, value) = parse_keyed(&mut lines, "one")?;
    let one: usize = parse_number(ln, &value)?;
    let (ln, value) = parse_keyed(&mut lines, "arity")?;
    let arity: usize = parse_number(ln, &value)?;

    let el = |v: usize| -> Result<El, TableParseError> {
        El::try_from(v).map_err(|_| OpError::ElementOutOfRange { element: v, size }.into())
    };
    let domain = Domain::new(size, el(zero)?, el(one)?)?;

    let (ln, value) = parse_keyed(&mut lines, "table")?;
    let mut table = Vec::new();
    for token in value.split_whitespace() {
        let v: usize = parse_number(ln, token)?;
        table.push(el(v)?);
    }
    if let Some((_, extra)) = lines.next_content() {
        return Err(TableParseError::TrailingContent(extra.to_owned()));
    }
    Ok(Operation::from_table(domain, arity, table)?)
}

/// Canonical text form of an operation; inverse of [`parse_table`].
pub fn format_table(op: &Operation) -> String {
    let mut out = String::new();
    let d = op.domain();
    writeln!(out, "domain {}", d.size()).unwrap();
    writeln!(out, "zero {}", d.zero()).unwrap();
    writeln!(out, "one {}", d.one()).unwrap();
    writeln!(out, "arity {}", op.arity()).unwrap();
    out.push_str("table");
    for &e in op.table() {
        write!(out, " {e}").unwrap();
    }
    out.push('\n');
    out
}

impl FromStr for Operation {
    type Err = TableParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_table(s)
    }
}

impl std::fmt::Display for Operation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_table(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const MED: &str = "domain 2\nzero 0\none 1\narity 3\ntable 0 0 0 1 0 1 1 1\n";

    #[test]
    fn parse_canonical() {
        let op = parse_table(MED).unwrap();
        assert_eq!(op.arity(), 3);
        assert_eq!(op.table(), &[0, 0, 0, 1, 0, 1, 1, 1]);
        assert_eq!(format_table(&op), MED);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = format!("# the boolean median\n\n{MED}# trailing comment\n");
        let op = parse_table(&text).unwrap();
        assert_eq!(format_table(&op), MED);
    }

    #[test]
    fn nullary_table() {
        let text = "domain 3\nzero 0\none 2\narity 0\ntable 1\n";
        let op = parse_table(text).unwrap();
        assert_eq!(op.arity(), 0);
        assert_eq!(op.table(), &[1]);
        assert_eq!(format_table(&op), text);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_table(""), Err(TableParseError::MissingLine("domain"))));
        assert!(parse_table("domain x\nzero 0\none 1\narity 0\ntable 0\n").is_err());
        assert!(parse_table("domain 2\nzero 0\narity 0\ntable 0\n").is_err());
        // wrong table length
        assert!(matches!(
            parse_table("domain 2\nzero 0\none 1\narity 1\ntable 0\n"),
            Err(TableParseError::Invalid(OpError::TableLength { expected: 2, got: 1 }))
        ));
        // element out of range
        assert!(parse_table("domain 2\nzero 0\none 1\narity 1\ntable 0 2\n").is_err());
        // trailing garbage
        assert!(matches!(
            parse_table(&format!("{MED}domain 2\n")),
            Err(TableParseError::TrailingContent(_))
        ));
        // enormous arity must error, not allocate
        assert!(parse_table("domain 2\nzero 0\none 1\narity 10000\ntable 0\n").is_err());
    }

    fn arb_operation() -> impl Strategy<Value = Operation> {
        (2..=4usize, 0..=3usize).prop_flat_map(|(m, n)| {
            let d = Domain::new(m, 0, (m - 1) as u8).unwrap();
            let len = d.table_len(n).unwrap();
            proptest::collection::vec(0..m as u8, len)
                .prop_map(move |table| Operation::from_table(d, n, table).unwrap())
        })
    }

    proptest! {
        #[test]
        fn round_trip(op in arb_operation()) {
            let text = format_table(&op);
            let back = parse_table(&text).unwrap();
            prop_assert_eq!(&back, &op);
            prop_assert_eq!(format_table(&back), text);
        }
    }
}
