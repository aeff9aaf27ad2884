use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::shape::ShapeSet;

/// Per-position outcome of the unimodality scan over powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnimodalityFinding {
    /// The position is nonzero exactly for `first <= d <= last` among the
    /// scanned powers. `open_ended` means `last` is the horizon.
    Interval {
        position: (usize, u32),
        first: u32,
        last: u32,
        open_ended: bool,
    },
    /// The set of powers is not contiguous; `gap` is the smallest scanned
    /// power between two occurrences at which the position vanishes.
    Violation {
        position: (usize, u32),
        present: Vec<u32>,
        gap: u32,
    },
}

impl UnimodalityFinding {
    pub fn position(&self) -> (usize, u32) {
        match self {
            UnimodalityFinding::Interval { position, .. }
            | UnimodalityFinding::Violation { position, .. } => *position,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, UnimodalityFinding::Violation { .. })
    }
}

/// Tests, for every normalized position seen in any shape, whether the powers
/// at which it occurs form an interval of the scanned powers.
pub fn unimodality_from_shapes(shapes: &[ShapeSet]) -> Vec<UnimodalityFinding> {
    let scanned: BTreeSet<u32> = shapes.iter().map(ShapeSet::d).collect();
    let Some(&horizon) = scanned.last() else {
        return Vec::new();
    };
    let mut occurrences: BTreeMap<(usize, u32), BTreeSet<u32>> = BTreeMap::new();
    for s in shapes {
        for &p in s.positions() {
            occurrences.entry(p).or_default().insert(s.d());
        }
    }
    occurrences
        .into_iter()
        .map(|(position, present)| {
            let first = *present.first().unwrap();
            let last = *present.last().unwrap();
            let gap = scanned
                .range(first..=last)
                .find(|d| !present.contains(d))
                .copied();
            match gap {
                Some(gap) => UnimodalityFinding::Violation {
                    position,
                    present: present.into_iter().collect(),
                    gap,
                },
                None => UnimodalityFinding::Interval {
                    position,
                    first,
                    last,
                    open_ended: last == horizon,
                },
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gapped_sequence_is_flagged() {
        let shapes = vec![
            ShapeSet::new(1, 1, [(0, 0), (1, 1)]).unwrap(),
            ShapeSet::new(1, 2, [(0, 0)]).unwrap(),
            ShapeSet::new(1, 3, [(0, 0), (1, 1)]).unwrap(),
        ];
        let findings = unimodality_from_shapes(&shapes);
        assert_eq!(
            findings,
            vec![
                UnimodalityFinding::Interval {
                    position: (0, 0),
                    first: 1,
                    last: 3,
                    open_ended: true
                },
                UnimodalityFinding::Violation {
                    position: (1, 1),
                    present: vec![1, 3],
                    gap: 2
                },
            ]
        );
    }

    #[test]
    fn late_and_early_positions() {
        let shapes = vec![
            ShapeSet::new(2, 1, [(0, 0), (1, 2)]).unwrap(),
            ShapeSet::new(2, 2, [(0, 0), (1, 3)]).unwrap(),
            ShapeSet::new(2, 3, [(0, 0), (1, 3)]).unwrap(),
        ];
        let f = unimodality_from_shapes(&shapes);
        assert!(f.iter().all(|x| !x.is_violation()));
        assert!(f.contains(&UnimodalityFinding::Interval {
            position: (1, 2),
            first: 1,
            last: 1,
            open_ended: false
        }));
        assert!(unimodality_from_shapes(&[]).is_empty());
    }
}
