use std::collections::BTreeSet;

use serde::Serialize;

use crate::betti::GradedBettiTable;
use crate::error::{Error, Result};

/// Support of the Betti table of `I^d` in degree-normalized coordinates:
/// `(i, j - r·d)` for every nonzero `β_{i,j}(I^d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeSet {
    r: u32,
    d: u32,
    positions: BTreeSet<(usize, u32)>,
}

impl ShapeSet {
    pub fn new(r: u32, d: u32, positions: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let positions: BTreeSet<(usize, u32)> = positions.into_iter().collect();
        if let Some(&(i, j)) = positions.iter().find(|&&(i, j)| (j as usize) < i) {
            return Err(Error::Malformed(format!(
                "shape position ({i}, {j}) has normalized degree below its homological index"
            )));
        }
        Ok(ShapeSet { r, d, positions })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn positions(&self) -> &BTreeSet<(usize, u32)> {
        &self.positions
    }

    pub fn contains(&self, i: usize, j: u32) -> bool {
        self.positions.contains(&(i, j))
    }

    /// Same support, regardless of the power it came from.
    pub fn same_shape(&self, other: &ShapeSet) -> bool {
        self.positions == other.positions
    }

    /// Un-normalized support `(i, j' + r·d)`.
    pub fn denormalized(&self) -> BTreeSet<(usize, u32)> {
        self.positions
            .iter()
            .map(|&(i, j)| (i, j + self.r * self.d))
            .collect()
    }
}

/// Shape of the table of `I^d` for an ideal equigenerated in degree `r`.
pub fn shape_of(table: &GradedBettiTable, r: u32, d: u32) -> Result<ShapeSet> {
    let shift = r
        .checked_mul(d)
        .ok_or(Error::Overflow)?;
    let positions = table
        .iter()
        .map(|(i, j, _)| {
            j.checked_sub(shift)
                .filter(|&jn| jn as usize >= i)
                .map(|jn| (i, jn))
                .ok_or_else(|| {
                    Error::Malformed(format!(
                        "entry ({i}, {j}) lies below degree r·d + i = {} + {i}",
                        shift
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    ShapeSet::new(r, d, positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::graded_betti;
    use crate::examples;
    use crate::field::FieldConfig;

    #[test]
    fn maximal_ideal_shape_is_constant() {
        let xy = examples::maximal(2);
        for d in 1..=6 {
            let t = graded_betti(&xy.power(d).unwrap(), &FieldConfig::default()).unwrap();
            let s = shape_of(&t, 1, d).unwrap();
            assert_eq!(s.positions(), &BTreeSet::from([(0, 0), (1, 1)]));
        }
    }

    #[test]
    fn five_cubics_shapes() {
        let i = examples::five_cubics();
        let f = FieldConfig::default();
        let shapes: Vec<ShapeSet> = (1..=3)
            .map(|d| shape_of(&graded_betti(&i.power(d).unwrap(), &f).unwrap(), 3, d).unwrap())
            .collect();
        assert!(!shapes[0].same_shape(&shapes[1]));
        let expected = BTreeSet::from([
            (0, 0),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 5),
            (4, 6),
        ]);
        assert_eq!(shapes[2].positions(), &expected);
    }

    #[test]
    fn denormalization_recovers_support() {
        let i = examples::sturmfels();
        let f = FieldConfig::default();
        for d in 1..=2 {
            let t = graded_betti(&i.power(d).unwrap(), &f).unwrap();
            let s = shape_of(&t, 3, d).unwrap();
            let support: BTreeSet<_> = t.iter().map(|(i, j, _)| (i, j)).collect();
            assert_eq!(s.denormalized(), support);
        }
    }

    #[test]
    fn wrong_normalization_is_rejected() {
        let t = graded_betti(&examples::five_cubics(), &FieldConfig::default()).unwrap();
        assert!(matches!(shape_of(&t, 3, 2), Err(Error::Malformed(_))));
        assert!(ShapeSet::new(1, 1, [(2, 1)]).is_err());
    }
}
