//! Prime-field arithmetic and exact sparse rank.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// The coefficient field `F_p` used for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldConfig {
    characteristic: u32,
}

impl FieldConfig {
    pub fn new(characteristic: u32) -> Result<Self> {
        if !is_prime(characteristic) {
            return Err(Error::NotPrime(u64::from(characteristic)));
        }
        Ok(FieldConfig { characteristic })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.characteristic)) as u32
    }

    #[inline]
    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.characteristic - (b - a)
        }
    }

    #[inline]
    pub(crate) fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.characteristic - a
        }
    }

    pub(crate) fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        // Fermat: a^(p-2)
        let p = u64::from(self.characteristic);
        let mut base = u64::from(a) % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    #[cfg(test)]
    /// Embeds a signed integer.
    pub(crate) fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(i64::from(self.characteristic)) as u32
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            characteristic: DEFAULT_CHARACTERISTIC,
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Sparse column: `(row, nonzero value)` pairs sorted by row.
pub type SparseColumn = Vec<(usize, u32)>;

/// Rank over `F_p` of the matrix with the given columns.
///
/// Columns are reduced left to right; each nonzero reduced column is keyed by
/// its largest row index, which becomes its pivot.
pub fn rank(columns: Vec<SparseColumn>, field: &FieldConfig) -> usize {
    let mut pivots: std::collections::HashMap<usize, SparseColumn> = Default::default();
    let mut scratch = Vec::new();
    for mut col in columns {
        col.retain(|&(_, v)| v != 0);
        while let Some(&(low, val)) = col.last() {
            let Some(pivot) = pivots.get(&low) else {
                break;
            };
            let pivot_val = pivot.last().unwrap().1;
            let factor = field.mul(val, field.inv(pivot_val));
            axpy(&mut col, pivot, factor, field, &mut scratch);
        }
        if let Some(&(low, _)) = col.last() {
            pivots.insert(low, col);
        }
    }
    pivots.len()
}

/// `col -= factor * pivot`, dropping zeros.
fn axpy(
    col: &mut SparseColumn,
    pivot: &SparseColumn,
    factor: u32,
    field: &FieldConfig,
    out: &mut SparseColumn,
) {
    out.clear();
    let (mut a, mut b) = (0, 0);
    while a < col.len() || b < pivot.len() {
        let ra = col.get(a).map(|e| e.0).unwrap_or(usize::MAX);
        let rb = pivot.get(b).map(|e| e.0).unwrap_or(usize::MAX);
        if ra < rb {
            out.push(col[a]);
            a += 1;
        } else if rb < ra {
            out.push((rb, field.neg(field.mul(factor, pivot[b].1))));
            b += 1;
        } else {
            let v = field.sub(col[a].1, field.mul(factor, pivot[b].1));
            if v != 0 {
                out.push((ra, v));
            }
            a += 1;
            b += 1;
        }
    }
    std::mem::swap(col, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(FieldConfig::new(2).is_ok());
        assert!(FieldConfig::new(32003).is_ok());
        assert_eq!(FieldConfig::new(0).unwrap_err(), Error::NotPrime(0));
        assert_eq!(FieldConfig::new(1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(FieldConfig::new(32001).unwrap_err(), Error::NotPrime(32001));
        assert_eq!(FieldConfig::default().characteristic(), 32003);
    }

    #[test]
    fn inverse() {
        let f = FieldConfig::new(32003).unwrap();
        for a in [1, 2, 17, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    fn dense_to_cols(rows: &[&[i64]], f: &FieldConfig) -> Vec<SparseColumn> {
        let ncols = rows[0].len();
        (0..ncols)
            .map(|c| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, r)| r[c] != 0)
                    .map(|(i, r)| (i, f.reduce(r[c])))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: singular only in characteristic 2
        let rows: &[&[i64]] = &[&[1, 1], &[1, -1]];
        let f2 = FieldConfig::new(2).unwrap();
        let f3 = FieldConfig::new(3).unwrap();
        assert_eq!(rank(dense_to_cols(rows, &f2), &f2), 1);
        assert_eq!(rank(dense_to_cols(rows, &f3), &f3), 2);
    }

    #[test]
    fn rank_of_dependent_columns() {
        let f = FieldConfig::default();
        let rows: &[&[i64]] = &[&[1, 2, 3], &[4, 5, 9], &[7, 8, 15]];
        assert_eq!(rank(dense_to_cols(rows, &f), &f), 2);
        assert_eq!(rank(vec![vec![], vec![]], &f), 0);
    }
}
