//! Multigraded and graded Betti tables of monomial ideals.
//!
//! All tables here index the ideal `I` as a module (`β_0` counts the minimal
//! generators). The quotient display used by the renderers shifts the
//! homological index by one.

mod koszul;
mod lattice;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::monomial::Monomial;

pub use koszul::{lcm_closure, multigraded_betti, multigraded_betti_with, upper_koszul_complex};
pub use lattice::{lcm_lattice_betti, LcmLattice};

/// Caps on intermediate sizes; exceeding one yields [`Error::ResourceLimit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum size of the lcm closure of the generators.
    pub max_lcm_candidates: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_lcm_candidates: 5_000_000,
        }
    }
}

/// `β_{i,b}(I)` for multidegrees `b`; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedBettiTable {
    ring_dim: usize,
    field: FieldConfig,
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl MultigradedBettiTable {
    pub(crate) fn new(
        ring_dim: usize,
        field: FieldConfig,
        entries: BTreeMap<(usize, Monomial), u64>,
    ) -> Self {
        debug_assert!(entries.values().all(|&v| v > 0));
        MultigradedBettiTable {
            ring_dim,
            field,
            entries,
        }
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn get(&self, i: usize, b: &Monomial) -> u64 {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> {
        self.entries.iter().map(|((i, b), &v)| (*i, b, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sums entries over multidegrees of equal total degree.
    pub fn to_graded(&self) -> GradedBettiTable {
        let mut entries = BTreeMap::new();
        for ((i, b), &v) in &self.entries {
            *entries.entry((*i, b.total_degree())).or_insert(0) += v;
        }
        GradedBettiTable {
            ring_dim: self.ring_dim,
            field: self.field,
            entries,
        }
    }
}

/// `β_{i,j}(I)`: homological index `i`, total degree `j`; nonzero entries only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBettiTable {
    ring_dim: usize,
    field: FieldConfig,
    entries: BTreeMap<(usize, u32), u64>,
}

impl GradedBettiTable {
    /// Builds a table from explicit entries; zero values are dropped.
    pub fn from_entries(
        ring_dim: usize,
        field: FieldConfig,
        entries: impl IntoIterator<Item = ((usize, u32), u64)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if v > 0 {
                *map.entry(k).or_insert(0) += v;
            }
        }
        GradedBettiTable {
            ring_dim,
            field,
            entries: map,
        }
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(_, &v)| v)
            .sum()
    }

    /// Castelnuovo–Mumford regularity of the ideal: `max (j - i)`.
    pub fn regularity(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| i64::from(j) - i as i64)
            .max()
            .ok_or(Error::EmptyTable)
    }
}

pub fn graded_betti(
    ideal: &crate::ideal::MonomialIdeal,
    field: &FieldConfig,
) -> Result<GradedBettiTable> {
    Ok(multigraded_betti(ideal, field)?.to_graded())
}

pub fn graded_betti_with(
    ideal: &crate::ideal::MonomialIdeal,
    field: &FieldConfig,
    limits: &Limits,
) -> Result<GradedBettiTable> {
    Ok(multigraded_betti_with(ideal, field, limits)?.to_graded())
}
