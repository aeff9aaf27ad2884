//! Macaulay2-style text rendering of graded Betti tables.
//!
//! Tables are stored for the ideal `I`. The quotient layouts print the
//! resolution of `R/I` instead: column `c` and row `ρ` hold `β_{c, c+ρ}(R/I)`,
//! which is `β_{c-1, c+ρ}(I)` for `c >= 1`, plus the unit entry at (0, 0).
//! The module layout prints `β_{i, i+ρ}(I)` directly.

use std::collections::BTreeMap;

use crate::betti::GradedBettiTable;
use crate::error::{Error, Result};
use crate::field::FieldConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Columns from 0 and rows from 0, as Macaulay2 prints `betti res`.
    Quotient,
    /// Columns from 1 and only the rows between the first and last nonzero one.
    QuotientCompact,
    /// Ideal indexing: column `i`, row `j - i`.
    Module,
}

impl Layout {
    fn quotient(self) -> bool {
        self != Layout::Module
    }
}

/// Grid position (column, row) of the ideal entry `β_{i,j}`.
fn cell(layout: Layout, i: usize, j: u32) -> Result<(usize, i64)> {
    let c = if layout.quotient() { i + 1 } else { i };
    let row = i64::from(j) - c as i64;
    if row < 0 {
        return Err(Error::Malformed(format!("entry β_({i},{j}) lies below row 0")));
    }
    Ok((c, row))
}

pub fn render_table(table: &GradedBettiTable, layout: Layout) -> Result<String> {
    let max_i = table.max_index().ok_or(Error::EmptyTable)?;
    let mut grid: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    for (i, j, v) in table.iter() {
        grid.insert(cell(layout, i, j)?, v);
    }
    let (first_col, last_col) = match layout {
        Layout::Quotient => (0, max_i + 1),
        Layout::QuotientCompact => (1, max_i + 1),
        Layout::Module => (0, max_i),
    };
    if layout == Layout::Quotient {
        grid.insert((0, 0), 1);
    }
    let rows: Vec<i64> = grid.keys().map(|k| k.1).collect();
    let max_row = *rows.iter().max().unwrap_or(&0);
    let min_row = match layout {
        Layout::Quotient => 0,
        _ => *rows.iter().min().unwrap_or(&0),
    };

    let mut lines: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend((first_col..=last_col).map(|c| c.to_string()));
    lines.push(header);
    let mut totals = vec!["total:".to_string()];
    totals.extend((first_col..=last_col).map(|c| {
        grid.iter()
            .filter(|(k, _)| k.0 == c)
            .map(|(_, &v)| v)
            .sum::<u64>()
            .to_string()
    }));
    lines.push(totals);
    for row in min_row..=max_row {
        let mut line = vec![format!("{row}:")];
        line.extend((first_col..=last_col).map(|c| match grid.get(&(c, row)) {
            Some(v) => v.to_string(),
            None => ".".to_string(),
        }));
        lines.push(line);
    }

    let ncols = lines[0].len();
    let widths: Vec<usize> = (0..ncols)
        .map(|k| lines.iter().map(|l| l[k].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for line in &lines {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// Reads a table printed by [`render_table`] back into ideal indexing.
/// The text carries neither the ring nor the field, so both are supplied.
pub fn parse_rendered_table(
    text: &str,
    layout: Layout,
    ring_dim: usize,
    field: FieldConfig,
) -> Result<GradedBettiTable> {
    let bad = |n: usize, msg: String| Error::Malformed(format!("table line {n}: {msg}"));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hn, header) = lines
        .next()
        .ok_or_else(|| Error::Malformed("empty table text".into()))?;
    let cols: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(hn, format!("bad column index '{t}'"))))
        .collect::<Result<_>>()?;
    let first = match layout {
        Layout::QuotientCompact => 1,
        _ => 0,
    };
    if cols.is_empty() || cols.iter().enumerate().any(|(k, &c)| c != first + k) {
        return Err(bad(hn, format!("columns must run consecutively from {first}")));
    }

    let mut totals: Option<(usize, Vec<u64>)> = None;
    let mut sums = vec![0u64; cols.len()];
    let mut entries = Vec::new();
    for (n, line) in lines {
        let mut toks = line.split_whitespace();
        let label = toks.next().unwrap_or_default();
        let values: Vec<u64> = toks
            .map(|t| match t {
                "." => Ok(0),
                _ => t.parse().map_err(|_| bad(n, format!("bad entry '{t}'"))),
            })
            .collect::<Result<_>>()?;
        if values.len() != cols.len() {
            return Err(bad(n, format!("expected {} entries, found {}", cols.len(), values.len())));
        }
        if label == "total:" {
            totals = Some((n, values));
            continue;
        }
        let row: i64 = label
            .strip_suffix(':')
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| bad(n, format!("bad row label '{label}'")))?;
        for (k, (&c, &v)) in cols.iter().zip(&values).enumerate() {
            sums[k] += v;
            if v == 0 {
                continue;
            }
            let j = c as i64 + row;
            if layout.quotient() && c == 0 {
                if (row, v) != (0, 1) {
                    return Err(bad(n, "column 0 of a quotient table holds only the unit entry".into()));
                }
                continue;
            }
            let i = if layout.quotient() { c - 1 } else { c };
            let j = u32::try_from(j).map_err(|_| bad(n, "degree out of range".into()))?;
            entries.push(((i, j), v));
        }
    }
    if let Some((n, totals)) = totals {
        if totals != sums {
            return Err(bad(n, "totals do not match the column sums".into()));
        }
    }
    Ok(GradedBettiTable::from_entries(ring_dim, field, entries))
}
