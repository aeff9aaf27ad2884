//! Experiments on powers of equigenerated ideals.

pub mod conjecture;
pub mod cover;
pub mod random;
pub mod rees;
pub mod scan;
pub mod shape;
pub mod unimodal;

pub use conjecture::{compare, conjecture_stab_compare, ConjectureComparison, Verdict};
pub use cover::{square_cover_index, square_cover_index_with, CoverIndex};
pub use random::{random_edge_ideal, random_monomial_ideal};
pub use rees::{binomial, rees_bound_check, rees_bound_check_table, BoundCheckResult, BoundEntry, ReesBettiData};
pub use scan::{
    empirical_stab, stabilization_scan, stabilization_scan_with, trailing_linear_form, Certainty,
    LinearForm, PowerResult, ScanOptions, StabilizationReport,
};
pub use shape::{shape_of, ShapeSet};
pub use unimodal::{unimodality_from_shapes, UnimodalityFinding};

/// Findings of the unimodality scan carried by a report.
pub fn unimodality_check(report: &StabilizationReport) -> Vec<UnimodalityFinding> {
    unimodality_from_shapes(&report.shapes())
}
