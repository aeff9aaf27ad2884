//! Upper bounds on Betti numbers of powers from bigraded Betti numbers of the
//! Rees algebra.
//!
//! With `I = (f_0, ..., f_k)` equigenerated in degree `r`, and `β_{i,(j,m)}` the
//! bigraded Betti numbers of the Rees algebra over `k[x_1..x_N, w_0..w_k]`
//! (`deg x = (1,0)`, `deg w = (0,1)`), every power satisfies
//!
//! ```text
//! β_{i, j+rd}(I^d) <= Σ_{m=0}^{d} C(d+k-m, d-m) · β_{i,(j,m)}
//! ```
//!
//! The Rees data is ingested, not computed.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use crate::betti::{graded_betti, GradedBettiTable};
use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::ideal::MonomialIdeal;

/// Bigraded Betti numbers `β_{i,(j,m)}` of the Rees algebra, keyed by
/// `(i, j, m)` with `j` the x-degree and `m` the w-degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesBettiData {
    k: usize,
    r: u32,
    entries: BTreeMap<(usize, u32, u32), u64>,
}

impl ReesBettiData {
    /// `k + 1` is the number of generators of `I`; `r` their common degree.
    pub fn new(
        k: usize,
        r: u32,
        entries: impl IntoIterator<Item = ((usize, u32, u32), u64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (key, beta) in entries {
            if beta == 0 {
                return Err(Error::Malformed(format!("zero Betti number at {key:?}")));
            }
            if map.insert(key, beta).is_some() {
                return Err(Error::Malformed(format!("duplicate key {key:?}")));
            }
        }
        if let Some(&v) = map.get(&(0, 0, 0)) {
            if v != 1 {
                return Err(Error::Malformed(format!(
                    "β_(0,(0,0)) must be 1 (the algebra generator), got {v}"
                )));
            }
        }
        Ok(ReesBettiData { k, r, entries: map })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn get(&self, i: usize, j: u32, m: u32) -> u64 {
        self.entries.get(&(i, j, m)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }
}

/// `C(n, k)` exactly.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub i: usize,
    /// Normalized degree: the entry is `β_{i, j + r·d}(I^d)`.
    pub j: u32,
    pub actual: u64,
    #[serde(serialize_with = "as_decimal")]
    pub bound: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub slack: BigInt,
}

fn as_decimal<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheckResult {
    pub d: u32,
    pub entries: Vec<BoundEntry>,
    /// Positions `(i, j)` where the actual Betti number exceeds the bound.
    pub violations: Vec<(usize, u32)>,
}

impl BoundCheckResult {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn entry(&self, i: usize, j: u32) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.i == i && e.j == j)
    }
}

/// Checks the Rees bound for `I^d`, computing the Betti table of the power.
pub fn rees_bound_check(
    ideal: &MonomialIdeal,
    d: u32,
    data: &ReesBettiData,
    field: &FieldConfig,
) -> Result<BoundCheckResult> {
    check_contract(ideal, data)?;
    if d == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    let table = graded_betti(&ideal.power(d)?, field)?;
    rees_bound_check_table(&table, d, data)
}

fn check_contract(ideal: &MonomialIdeal, data: &ReesBettiData) -> Result<()> {
    let r = ideal.equigenerated_degree()?;
    if data.r != r {
        return Err(Error::Contract(format!(
            "Rees data has r={} but the ideal is generated in degree {r}",
            data.r
        )));
    }
    if data.k + 1 != ideal.generator_count() {
        return Err(Error::Contract(format!(
            "Rees data has k={} (k+1 generators) but the ideal has {} minimal generators",
            data.k,
            ideal.generator_count()
        )));
    }
    Ok(())
}

/// Checks the Rees bound against an already computed table of `I^d`.
pub fn rees_bound_check_table(
    table: &GradedBettiTable,
    d: u32,
    data: &ReesBettiData,
) -> Result<BoundCheckResult> {
    let shift = data.r.checked_mul(d).ok_or(Error::Overflow)?;
    let mut actual: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    for (i, j, v) in table.iter() {
        let jn = j.checked_sub(shift).ok_or_else(|| {
            Error::Contract(format!("table entry ({i}, {j}) lies below degree r·d = {shift}"))
        })?;
        actual.insert((i, jn), v);
    }
    let mut bound: BTreeMap<(usize, u32), BigUint> = BTreeMap::new();
    let k = data.k as u64;
    for ((i, j, m), beta) in data.iter() {
        if m > d {
            continue;
        }
        let coeff = binomial(u64::from(d - m) + k, u64::from(d - m));
        *bound.entry((i, j)).or_default() += coeff * beta;
    }
    let positions: BTreeSet<(usize, u32)> = actual.keys().chain(bound.keys()).copied().collect();
    let mut entries = Vec::with_capacity(positions.len());
    let mut violations = Vec::new();
    for (i, j) in positions {
        let a = actual.get(&(i, j)).copied().unwrap_or(0);
        let b = bound.remove(&(i, j)).unwrap_or_default();
        let slack = BigInt::from(b.clone()) - BigInt::from(a);
        if slack < BigInt::ZERO {
            violations.push((i, j));
        }
        if a == 0 && b == BigUint::ZERO {
            continue;
        }
        entries.push(BoundEntry {
            i,
            j,
            actual: a,
            bound: b,
            slack,
        });
    }
    Ok(BoundCheckResult {
        d,
        entries,
        violations,
    })
}
