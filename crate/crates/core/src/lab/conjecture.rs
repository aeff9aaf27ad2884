//! Compares the square-cover index with the empirically observed
//! stabilization index of a squarefree monomial ideal.

use serde::Serialize;

use super::cover::{check_hypotheses, square_cover_index_with, CoverIndex};
use super::scan::{stabilization_scan_with, ScanOptions, StabilizationReport};
use crate::error::Result;
use crate::ideal::MonomialIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The empirical index equals the square-cover index.
    ConsistentSoFar,
    /// A shape change occurs at some scanned `d` greater than the square-cover index.
    InconsistentAtHorizon,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureComparison {
    pub square_cover_index: CoverIndex,
    pub empirical_stab: Option<u32>,
    pub horizon: u32,
    pub completed: u32,
    pub verdict: Verdict,
    /// With `n` the square-cover index and `2 <= n <= completed`: whether
    /// `shape(n-1) = shape(n)`. If so, `n` is not the least index from which
    /// shapes are constant, whatever happens beyond the horizon. Reported
    /// separately; it does not feed the verdict.
    pub predecessor_shape_equal: Option<bool>,
}

/// Runs the square-cover search and a stabilization scan to `d_max`.
pub fn conjecture_stab_compare(
    ideal: &MonomialIdeal,
    opts: &ScanOptions,
    n_max: Option<u32>,
) -> Result<(ConjectureComparison, StabilizationReport)> {
    check_hypotheses(ideal)?;
    let n_max = n_max.unwrap_or(2 * ideal.ring_dim() as u32);
    let cover = square_cover_index_with(ideal, n_max)?;
    let report = stabilization_scan_with(ideal, opts)?;
    Ok((compare(cover, &report), report))
}

/// Applies the verdict rule to an existing report.
pub fn compare(cover: CoverIndex, report: &StabilizationReport) -> ConjectureComparison {
    let empirical = report.empirical_stab;
    let verdict = match (cover.value(), empirical) {
        (Some(n), Some(e)) if e == n => Verdict::ConsistentSoFar,
        (Some(n), Some(_)) if report.shape_changes().iter().any(|&d| d > n) => {
            Verdict::InconsistentAtHorizon
        }
        _ => Verdict::Inconclusive,
    };
    let predecessor_shape_equal = cover.value().and_then(|n| {
        let prev = report.shape(n.checked_sub(1)?)?;
        Some(prev.same_shape(report.shape(n)?))
    });
    ConjectureComparison {
        empirical_stab: empirical,
        horizon: report.horizon,
        completed: report.completed(),
        square_cover_index: cover,
        verdict,
        predecessor_shape_equal,
    }
}
