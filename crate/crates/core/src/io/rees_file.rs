//! The `.rees` text format for bigraded Rees-algebra Betti data.
//!
//! ```text
//! # (x, y): one syzygy in bidegree (1, 1)
//! k=1 r=1
//! 0 0 0 1
//! 1 1 1 1
//! ```
//!
//! The first non-comment line is the header; every further line is
//! `i j m beta` with `beta > 0` and each `(i, j, m)` at most once.

use std::collections::BTreeSet;

use crate::error::{ParseError, Result};
use crate::lab::ReesBettiData;

pub fn parse_rees(doc: &str) -> Result<ReesBettiData> {
    let mut header: Option<(usize, u32)> = None;
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for (idx, raw) in doc.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let fields = fields_with_columns(content);
        if fields.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(line, &fields)?);
            continue;
        }
        if fields.len() != 4 {
            return Err(ParseError::new(
                line,
                fields[0].0,
                format!("expected 'i j m beta', found {} field(s)", fields.len()),
            )
            .into());
        }
        let num = |(col, s): (usize, &str)| -> std::result::Result<u64, ParseError> {
            s.parse::<u64>()
                .map_err(|_| ParseError::new(line, col, format!("'{s}' is not a nonnegative integer")))
        };
        let small = |f: (usize, &str)| -> std::result::Result<u32, ParseError> {
            u32::try_from(num(f)?).map_err(|_| ParseError::new(line, f.0, "value out of range"))
        };
        let i = small(fields[0])? as usize;
        let j = small(fields[1])?;
        let m = small(fields[2])?;
        let beta = num(fields[3])?;
        if beta == 0 {
            return Err(ParseError::new(line, fields[3].0, "zero entries must be omitted").into());
        }
        if !seen.insert((i, j, m)) {
            return Err(ParseError::new(line, fields[0].0, format!("duplicate entry ({i}, {j}, {m})")).into());
        }
        entries.push(((i, j, m), beta));
    }
    let Some((k, r)) = header else {
        return Err(ParseError::new(1, 1, "missing 'k=<int> r=<int>' header").into());
    };
    ReesBettiData::new(k, r, entries)
}

fn parse_header(line: usize, fields: &[(usize, &str)]) -> Result<(usize, u32)> {
    let value = |at: usize, key: &str| -> std::result::Result<u64, ParseError> {
        let Some(&(col, tok)) = fields.get(at) else {
            return Err(ParseError::new(line, 1, format!("header is missing '{key}=<int>'")));
        };
        tok.strip_prefix(key)
            .and_then(|t| t.strip_prefix('='))
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| ParseError::new(line, col, format!("expected '{key}=<int>', found '{tok}'")))
    };
    let k = value(0, "k")?;
    let r = value(1, "r")?;
    if fields.len() > 2 {
        return Err(ParseError::new(line, fields[2].0, "unexpected text after header").into());
    }
    let r = u32::try_from(r).map_err(|_| ParseError::new(line, fields[1].0, "r out of range"))?;
    Ok((k as usize, r))
}

/// Whitespace-separated fields with their 1-based starting columns.
fn fields_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((s[..st].chars().count() + 1, &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

pub fn write_rees(data: &ReesBettiData) -> String {
    let mut s = format!("k={} r={}\n", data.k(), data.r());
    for ((i, j, m), beta) in data.iter() {
        s.push_str(&format!("{i} {j} {m} {beta}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parses_and_writes() {
        let doc = "# two variables\n\nk=1 r=1\n0 0 0 1\n1 1 1 1   # the syzygy\n";
        let data = parse_rees(doc).unwrap();
        assert_eq!((data.k(), data.r()), (1, 1));
        assert_eq!(data.get(1, 1, 1), 1);
        assert_eq!(parse_rees(&write_rees(&data)).unwrap(), data);
    }

    #[test]
    fn rejects_bad_documents() {
        let pos = |doc: &str| match parse_rees(doc) {
            Err(Error::Parse(e)) => (e.line, e.column),
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(pos("k=1 r=1\n0 0 0 1\n0 0 0 1\n"), (3, 1));
        assert_eq!(pos("k=1 r=1\n1 1  1 0\n"), (2, 8));
        assert_eq!(pos("k=1 r=1\n1 1 1\n"), (2, 1));
        assert_eq!(pos("k=1 r=1\n1 x 1 1\n"), (2, 3));
        assert_eq!(pos("r=1 k=1\n"), (1, 1));
        assert_eq!(pos("k=1\n"), (1, 1));
        assert_eq!(pos("# nothing\n"), (1, 1));
        assert!(matches!(parse_rees("k=1 r=1\n0 0 0 2\n"), Err(Error::Malformed(_))));
    }
}
