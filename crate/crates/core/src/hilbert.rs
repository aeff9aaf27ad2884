//! Hilbert-series numerators of `R/I`, used as a conservation check on Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use crate::betti::{graded_betti, GradedBettiTable};
use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const DEFAULT_INCLUSION_EXCLUSION_CUTOFF: usize = 25;

/// A univariate polynomial in `t` with integer coefficients; zero terms are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: BTreeMap<u32, i64>,
}

impl IntPoly {
    pub fn add_term(&mut self, exp: u32, c: i64) {
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut p = IntPoly::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn coeff(&self, exp: u32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (&e, &c)) in self.coeffs.iter().enumerate() {
            let abs = c.unsigned_abs();
            match (n, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (e, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}")?,
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^N` of `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertNumerator {
    pub poly: IntPoly,
    /// False when derived from a Betti table instead of inclusion–exclusion;
    /// such a numerator cannot serve as an oracle for that same table.
    pub independent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertOptions {
    pub cutoff: usize,
    pub allow_fallback: bool,
    /// Field for the fallback Betti computation.
    pub field: FieldConfig,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions {
            cutoff: DEFAULT_INCLUSION_EXCLUSION_CUTOFF,
            allow_fallback: true,
            field: FieldConfig::default(),
        }
    }
}

/// `Σ_{S ⊆ gens} (-1)^|S| t^{deg lcm(S)}` by inclusion–exclusion.
///
/// Above `options.cutoff` generators, either falls back to the graded Betti
/// table or refuses.
pub fn hilbert_numerator(ideal: &MonomialIdeal, options: &HilbertOptions) -> Result<HilbertNumerator> {
    let gens = ideal.generators();
    if gens.len() > options.cutoff {
        if !options.allow_fallback {
            return Err(Error::CutoffExceeded {
                generators: gens.len(),
                cutoff: options.cutoff,
            });
        }
        return Ok(HilbertNumerator {
            poly: numerator_from_betti(&graded_betti(ideal, &options.field)?),
            independent: false,
        });
    }
    let mut poly = IntPoly::default();
    poly.add_term(0, 1);
    inclusion_exclusion(gens, 0, &Monomial::one(ideal.ring_dim()), false, &mut poly);
    Ok(HilbertNumerator {
        poly,
        independent: true,
    })
}

fn inclusion_exclusion(gens: &[Monomial], from: usize, acc: &Monomial, odd: bool, out: &mut IntPoly) {
    for k in from..gens.len() {
        let l = acc.lcm_unchecked(&gens[k]);
        let sign = if odd { 1 } else { -1 };
        out.add_term(l.total_degree(), sign);
        inclusion_exclusion(gens, k + 1, &l, !odd, out);
    }
}

/// `1 - Σ_{i,j} (-1)^i β_{i,j}(I) t^j`.
pub fn numerator_from_betti(table: &GradedBettiTable) -> IntPoly {
    let mut poly = IntPoly::default();
    poly.add_term(0, 1);
    for (i, j, v) in table.iter() {
        let v = v as i64;
        poly.add_term(j, if i % 2 == 0 { -v } else { v });
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn small_numerators() {
        let n = hilbert_numerator(&examples::maximal(2), &HilbertOptions::default()).unwrap();
        assert_eq!(n.poly, IntPoly::from_terms([(0, 1), (1, -2), (2, 1)]));
        assert!(n.independent);
        assert_eq!(n.poly.to_string(), "1 - 2t + t^2");

        let xy_yz = MonomialIdeal::minimalize(
            vec![Monomial::new(vec![1, 1, 0]), Monomial::new(vec![0, 1, 1])],
            3,
        )
        .unwrap();
        let n = hilbert_numerator(&xy_yz, &HilbertOptions::default()).unwrap();
        assert_eq!(n.poly, IntPoly::from_terms([(0, 1), (2, -2), (3, 1)]));
    }

    #[test]
    fn five_cubics_matches_published_alternating_sum() {
        let n = hilbert_numerator(&examples::five_cubics(), &HilbertOptions::default()).unwrap();
        let expected = IntPoly::from_terms([(0, 1), (3, -5), (5, 6), (6, 4), (7, -9), (8, 3)]);
        assert_eq!(n.poly, expected);
    }

    #[test]
    fn cutoff_and_fallback() {
        let i = examples::five_cubics();
        let refuse = HilbertOptions { cutoff: 3, allow_fallback: false, ..Default::default() };
        assert_eq!(
            hilbert_numerator(&i, &refuse).unwrap_err(),
            Error::CutoffExceeded { generators: 5, cutoff: 3 }
        );
        let fallback = HilbertOptions { cutoff: 3, ..Default::default() };
        let n = hilbert_numerator(&i, &fallback).unwrap();
        assert!(!n.independent);
        let direct = hilbert_numerator(&i, &HilbertOptions::default()).unwrap();
        assert_eq!(n.poly, direct.poly);
    }
}
