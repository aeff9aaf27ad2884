use serde::Serialize;

use super::shape::{shape_of, ShapeSet};
use super::unimodal::{unimodality_from_shapes, UnimodalityFinding};
use crate::betti::{graded_betti_with, GradedBettiTable, Limits};
use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::ideal::MonomialIdeal;

/// A finite horizon can only certify shape equality up to that horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    EmpiricalUpToHorizon,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerResult {
    pub d: u32,
    pub generator_count: usize,
    pub table: GradedBettiTable,
    pub shape: ShapeSet,
    pub regularity: i64,
}

/// `reg(I^d) = slope·d + intercept` for all scanned `d >= onset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearForm {
    pub slope: i64,
    pub intercept: i64,
    pub onset: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationReport {
    pub ideal_id: String,
    pub r: u32,
    /// Requested maximum power.
    pub horizon: u32,
    pub field: FieldConfig,
    /// Results for `d = 1..`, in order; shorter than `horizon` when partial.
    pub powers: Vec<PowerResult>,
    /// Why the scan stopped early, if it did.
    pub partial: Option<String>,
    /// Smallest `D` with `shape(d) = shape(D)` for every scanned `d >= D`.
    pub empirical_stab: Option<u32>,
    pub certainty: Certainty,
    pub linear_form: Option<LinearForm>,
    pub unimodality: Vec<UnimodalityFinding>,
}

impl StabilizationReport {
    pub fn is_partial(&self) -> bool {
        self.partial.is_some()
    }

    /// Largest power actually computed.
    pub fn completed(&self) -> u32 {
        self.powers.last().map_or(0, |p| p.d)
    }

    pub fn regularity(&self) -> Vec<i64> {
        self.powers.iter().map(|p| p.regularity).collect()
    }

    pub fn shapes(&self) -> Vec<ShapeSet> {
        self.powers.iter().map(|p| p.shape.clone()).collect()
    }

    pub fn shape(&self, d: u32) -> Option<&ShapeSet> {
        self.powers.iter().find(|p| p.d == d).map(|p| &p.shape)
    }

    /// Powers `d >= 2` whose shape differs from that of `d - 1`.
    pub fn shape_changes(&self) -> Vec<u32> {
        self.powers
            .windows(2)
            .filter(|w| !w[0].shape.same_shape(&w[1].shape))
            .map(|w| w[1].d)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub d_max: u32,
    pub field: FieldConfig,
    pub limits: Limits,
    pub ideal_id: String,
}

impl ScanOptions {
    pub fn new(d_max: u32) -> Self {
        ScanOptions {
            d_max,
            field: FieldConfig::default(),
            limits: Limits::default(),
            ideal_id: "ideal".into(),
        }
    }
}

pub fn stabilization_scan(
    ideal: &MonomialIdeal,
    d_max: u32,
    field: &FieldConfig,
) -> Result<StabilizationReport> {
    stabilization_scan_with(
        ideal,
        &ScanOptions {
            field: *field,
            ..ScanOptions::new(d_max)
        },
    )
}

/// Computes the tables of `I, I^2, ..., I^d_max` and derives the empirical
/// stabilization index, the regularity fit and the unimodality findings.
///
/// Powers are computed in increasing order (the engine parallelizes within a
/// power). If some power exceeds the resource limits, the report covers the
/// powers completed before it and is marked partial.
pub fn stabilization_scan_with(ideal: &MonomialIdeal, opts: &ScanOptions) -> Result<StabilizationReport> {
    let r = ideal.equigenerated_degree()?;
    if opts.d_max < 2 {
        return Err(Error::Precondition(format!(
            "scan horizon must be at least 2, got {}",
            opts.d_max
        )));
    }
    let mut powers = Vec::new();
    let mut partial = None;
    for d in 1..=opts.d_max {
        match power_result(ideal, r, d, opts) {
            Ok(p) => powers.push(p),
            Err(e @ (Error::ResourceLimit { .. } | Error::Overflow)) => {
                partial = Some(format!("stopped at d={d}: {e}"));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let shapes: Vec<ShapeSet> = powers.iter().map(|p| p.shape.clone()).collect();
    let regularity: Vec<(u32, i64)> = powers.iter().map(|p| (p.d, p.regularity)).collect();
    Ok(StabilizationReport {
        ideal_id: opts.ideal_id.clone(),
        r,
        horizon: opts.d_max,
        field: opts.field,
        empirical_stab: empirical_stab(&shapes),
        certainty: Certainty::EmpiricalUpToHorizon,
        linear_form: trailing_linear_form(&regularity),
        unimodality: unimodality_from_shapes(&shapes),
        powers,
        partial,
    })
}

fn power_result(ideal: &MonomialIdeal, r: u32, d: u32, opts: &ScanOptions) -> Result<PowerResult> {
    let power = ideal.power(d)?;
    let table = graded_betti_with(&power, &opts.field, &opts.limits)?;
    let shape = shape_of(&table, r, d)?;
    let regularity = table.regularity()?;
    Ok(PowerResult {
        d,
        generator_count: power.generator_count(),
        table,
        shape,
        regularity,
    })
}

/// Smallest `d` from which every later shape in the sequence equals shape(`d`).
pub fn empirical_stab(shapes: &[ShapeSet]) -> Option<u32> {
    let last = shapes.last()?;
    let tail = shapes
        .iter()
        .rev()
        .take_while(|s| s.same_shape(last))
        .count();
    Some(shapes[shapes.len() - tail].d())
}

/// Longest trailing window of at least three points with constant first
/// differences, reported as a linear form.
pub fn trailing_linear_form(points: &[(u32, i64)]) -> Option<LinearForm> {
    if points.len() < 3 {
        return None;
    }
    let diffs: Vec<i64> = points.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let slope = *diffs.last()?;
    let run = diffs.iter().rev().take_while(|&&x| x == slope).count();
    if run + 1 < 3 {
        return None;
    }
    let (onset, value) = points[points.len() - run - 1];
    Some(LinearForm {
        slope,
        intercept: value - slope * i64::from(onset),
        onset,
    })
}
