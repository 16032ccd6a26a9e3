//! Tab-separated text formats for cocycle tables and one-cochains.
//!
//! Fields are separated by single tabs, shown here as `<TAB>`:
//!
//! ```text
//! # comment
//! window<TAB>W
//! m<TAB>n<TAB>value      (cocycle tables, m < n)
//! n<TAB>value            (one-cochains)
//! ```

use std::collections::BTreeSet;

use super::{OneCochain, TwoCocycleTable};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn table_err(line: usize, message: impl Into<String>) -> Error {
    Error::Table {
        line,
        message: message.into(),
    }
}

/// Data lines with 1-based line numbers, skipping blanks and `#` comments.
fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<u64> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| table_err(1, "missing header line `window<TAB>W`"))?;
    let fields: Vec<&str> = line.split('\t').collect();
    match fields.as_slice() {
        ["window", w] => w
            .trim()
            .parse()
            .map_err(|_| table_err(no, format!("invalid window {w:?}"))),
        _ => Err(table_err(no, "missing header line `window<TAB>W`")),
    }
}

fn parse_index(no: usize, field: &str) -> Result<i64> {
    field
        .trim()
        .parse()
        .map_err(|_| table_err(no, format!("invalid index {field:?}")))
}

fn parse_value(no: usize, field: &str) -> Result<Scalar> {
    field
        .parse()
        .map_err(|e: crate::error::ParseScalarError| table_err(no, e.to_string()))
}

fn check_window(no: usize, index: i64, window: u64) -> Result<()> {
    if index.unsigned_abs() > window {
        Err(table_err(
            no,
            format!("index {index} lies outside the declared window {window}"),
        ))
    } else {
        Ok(())
    }
}

impl TwoCocycleTable {
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = records(text);
        let window = parse_header(&mut lines)?;
        let mut table = TwoCocycleTable::new(window);
        let mut seen = BTreeSet::new();
        for (no, line) in lines {
            let fields: Vec<&str> = line.split('\t').collect();
            let [m, n, value] = fields.as_slice() else {
                return Err(table_err(no, "expected `m<TAB>n<TAB>value`"));
            };
            let (m, n) = (parse_index(no, m)?, parse_index(no, n)?);
            let value = parse_value(no, value)?;
            if m >= n {
                return Err(table_err(no, format!("entry ({m}, {n}) must have m < n")));
            }
            check_window(no, m, window)?;
            check_window(no, n, window)?;
            if !seen.insert((m, n)) {
                return Err(table_err(no, format!("duplicate entry ({m}, {n})")));
            }
            table.set(m, n, value)?;
        }
        Ok(table)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("window\t{}\n", self.window());
        for ((m, n), v) in self.iter() {
            out.push_str(&format!("{m}\t{n}\t{v}\n"));
        }
        out
    }
}

impl OneCochain {
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = records(text);
        let window = parse_header(&mut lines)?;
        let mut beta = OneCochain::zero(window);
        let mut seen = BTreeSet::new();
        for (no, line) in lines {
            let fields: Vec<&str> = line.split('\t').collect();
            let [n, value] = fields.as_slice() else {
                return Err(table_err(no, "expected `n<TAB>value`"));
            };
            let n = parse_index(no, n)?;
            let value = parse_value(no, value)?;
            check_window(no, n, window)?;
            if !seen.insert(n) {
                return Err(table_err(no, format!("duplicate entry {n}")));
            }
            beta.set(n, value)?;
        }
        Ok(beta)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("window\t{}\n", self.window());
        for (n, v) in self.iter() {
            out.push_str(&format!("{n}\t{v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::CocycleOracle;

    #[test]
    fn parses_table_with_comments() {
        let text = "# virasoro on window 3\nwindow\t3\n\n-3\t3\t-2\n-2\t2\t-1/2\r\n";
        let t = TwoCocycleTable::from_text(text).unwrap();
        assert_eq!(t.window(), 3);
        assert_eq!(t.get(3, -3), Scalar::from_int(2));
        assert_eq!(t.get(2, -2), Scalar::ratio(1, 2));
        assert_eq!(t, TwoCocycleTable::tabulate(&CocycleOracle::virasoro(), 3));
    }

    #[test]
    fn round_trips() {
        let t = TwoCocycleTable::tabulate(&CocycleOracle::virasoro(), 10);
        assert_eq!(TwoCocycleTable::from_text(&t.to_text()).unwrap(), t);
        let b = OneCochain::new(4, [(-4, Scalar::ratio(1, 3)), (2, Scalar::from_int(-7))]).unwrap();
        assert_eq!(OneCochain::from_text(&b.to_text()).unwrap(), b);
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Table { line, .. } => line,
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(line_of(TwoCocycleTable::from_text("").unwrap_err()), 1);
        assert_eq!(
            line_of(TwoCocycleTable::from_text("1\t2\t3\n").unwrap_err()),
            1
        );
        let dup = "window\t4\n1\t2\t3\n1\t2\t3\n";
        assert_eq!(line_of(TwoCocycleTable::from_text(dup).unwrap_err()), 3);
        let order = "window\t4\n2\t1\t3\n";
        assert_eq!(line_of(TwoCocycleTable::from_text(order).unwrap_err()), 2);
        let outside = "window\t4\n1\t5\t3\n";
        assert_eq!(line_of(TwoCocycleTable::from_text(outside).unwrap_err()), 2);
        let bad_scalar = "window\t4\n1\t2\t1/0\n";
        assert_eq!(
            line_of(TwoCocycleTable::from_text(bad_scalar).unwrap_err()),
            2
        );
        let short = "window\t4\n1\t2\n";
        assert_eq!(line_of(TwoCocycleTable::from_text(short).unwrap_err()), 2);
        let dup_zero = "window\t4\n1\t2\t0\n1\t2\t1\n";
        assert_eq!(
            line_of(TwoCocycleTable::from_text(dup_zero).unwrap_err()),
            3
        );
    }

    #[test]
    fn rejects_malformed_cochains() {
        assert!(OneCochain::from_text("0\t1\n").is_err());
        assert!(OneCochain::from_text("window\t2\n0\t1\n0\t2\n").is_err());
        assert!(OneCochain::from_text("window\t2\n3\t1\n").is_err());
        assert!(OneCochain::from_text("window\tx\n").is_err());
    }
}
