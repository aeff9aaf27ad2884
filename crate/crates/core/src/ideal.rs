use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A proper, nonzero monomial ideal given by its minimal generators.
///
/// Generators are pairwise non-divisible and sorted in the canonical
/// [`Monomial`] order. The zero and unit ideals cannot be constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    var_names: Vec<String>,
    gens: Vec<Monomial>,
}

/// Default variable names `x1, ..., xN`.
pub fn default_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the divisibility-minimal ones.
    pub fn minimalize(gens: Vec<Monomial>, ring_dim: usize) -> Result<Self> {
        Self::with_names(gens, default_var_names(ring_dim))
    }

    pub fn with_names(gens: Vec<Monomial>, var_names: Vec<String>) -> Result<Self> {
        let ring_dim = var_names.len();
        if ring_dim == 0 {
            return Err(Error::Precondition("ring must have at least one variable".into()));
        }
        let distinct: BTreeSet<&String> = var_names.iter().collect();
        if distinct.len() != ring_dim {
            return Err(Error::Precondition("variable names must be distinct".into()));
        }
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            if g.ring_dim() != ring_dim {
                return Err(Error::DimensionMismatch {
                    expected: ring_dim,
                    found: g.ring_dim(),
                });
            }
            if g.is_one() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal {
            var_names,
            gens: minimal_subset(gens),
        })
    }

    pub fn ring_dim(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    /// Whether some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Bitmask of variables dividing some generator.
    pub fn support_mask(&self) -> u64 {
        self.gens.iter().fold(0, |m, g| m | g.support_mask())
    }

    pub fn has_full_support(&self) -> bool {
        (0..self.ring_dim()).all(|v| self.gens.iter().any(|g| g.exponents()[v] > 0))
    }

    /// The same ideal in the polynomial ring on only the variables it uses.
    pub fn restrict_to_support(&self) -> MonomialIdeal {
        let used: Vec<usize> = (0..self.ring_dim())
            .filter(|&v| self.gens.iter().any(|g| g.exponents()[v] > 0))
            .collect();
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(used.iter().map(|&v| g.exponents()[v]).collect::<Vec<_>>()))
            .collect();
        let names = used.iter().map(|&v| self.var_names[v].clone()).collect();
        MonomialIdeal::with_names(gens, names).expect("restriction of a valid ideal is valid")
    }

    /// The degree `r` shared by all minimal generators.
    pub fn equigenerated_degree(&self) -> Result<u32> {
        let degrees: BTreeSet<u32> = self.gens.iter().map(Monomial::total_degree).collect();
        if degrees.len() == 1 {
            Ok(*degrees.iter().next().unwrap())
        } else {
            Err(Error::NotEquigenerated {
                degrees: degrees.into_iter().collect(),
            })
        }
    }

    pub fn min_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::total_degree).min().unwrap_or(0)
    }

    /// `I^d`, minimalized. Computed as `I^(d-1) * I`, which has the same
    /// minimal generators as the set of all `d`-fold products.
    pub fn power(&self, d: u32) -> Result<MonomialIdeal> {
        if d == 0 {
            return Err(Error::Precondition("power exponent must be at least 1".into()));
        }
        let mut current = self.gens.clone();
        for _ in 1..d {
            let mut products = Vec::with_capacity(current.len() * self.gens.len());
            for a in &current {
                for b in &self.gens {
                    products.push(a.times(b)?);
                }
            }
            current = minimal_subset(products);
        }
        Ok(MonomialIdeal {
            var_names: self.var_names.clone(),
            gens: current,
        })
    }

    /// Product of two ideals in the same ring.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring_dim() != other.ring_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ring_dim(),
                found: other.ring_dim(),
            });
        }
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.times(b)?);
            }
        }
        MonomialIdeal::with_names(products, self.var_names.clone())
    }
}

/// Divisibility-minimal elements of `gens`, deduplicated, in canonical order.
fn minimal_subset(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    // Sorted by degree, so a divisor of `g` always precedes it.
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = MonomialIdeal::minimalize(vec![m(&[2, 0]), m(&[3, 0]), m(&[1, 1])], 2).unwrap();
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[1, 1])]);
    }

    #[test]
    fn zero_and_unit_rejected() {
        assert_eq!(MonomialIdeal::minimalize(vec![], 2).unwrap_err(), Error::ZeroIdeal);
        assert_eq!(
            MonomialIdeal::minimalize(vec![m(&[1, 0]), m(&[0, 0])], 2).unwrap_err(),
            Error::UnitIdeal
        );
        assert!(matches!(
            MonomialIdeal::minimalize(vec![m(&[1, 0, 0])], 2).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
    }

    #[test]
    fn five_cubics_generators_and_square() {
        let i = examples::five_cubics();
        assert_eq!(i.generator_count(), 5);
        assert_eq!(i.equigenerated_degree().unwrap(), 3);
        let mut products = Vec::new();
        for (a, ga) in i.generators().iter().enumerate() {
            for gb in &i.generators()[a..] {
                products.push(ga.times(gb).unwrap());
            }
        }
        assert_eq!(products.len(), 15);
        let sq = MonomialIdeal::minimalize(products, 9).unwrap();
        assert_eq!(sq.generator_count(), 15);
        assert_eq!(sq, i.power(2).unwrap());
    }

    #[test]
    fn power_counts() {
        let xy = MonomialIdeal::minimalize(vec![m(&[1, 0]), m(&[0, 1])], 2).unwrap();
        assert_eq!(
            xy.power(2).unwrap().generators(),
            &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        for d in 1..=30 {
            assert_eq!(xy.power(d).unwrap().generator_count(), d as usize + 1);
        }
        assert_eq!(examples::five_cubics().power(3).unwrap().generator_count(), 35);
        assert_eq!(examples::sturmfels().power(2).unwrap().generator_count(), 36);
        assert!(xy.power(0).is_err());
    }

    #[test]
    fn power_overflow() {
        let big = MonomialIdeal::minimalize(vec![m(&[40000])], 1).unwrap();
        assert_eq!(big.power(2).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn equigeneration() {
        let a = MonomialIdeal::minimalize(vec![m(&[2, 0]), m(&[1, 1])], 2).unwrap();
        assert_eq!(a.equigenerated_degree().unwrap(), 2);
        let b = MonomialIdeal::minimalize(vec![m(&[1, 0]), m(&[0, 2])], 2).unwrap();
        assert_eq!(
            b.equigenerated_degree().unwrap_err(),
            Error::NotEquigenerated { degrees: vec![1, 2] }
        );
    }

    #[test]
    fn restrict_drops_unused_variables() {
        let i = MonomialIdeal::minimalize(vec![m(&[1, 0, 1])], 3).unwrap();
        let r = i.restrict_to_support();
        assert_eq!(r.ring_dim(), 2);
        assert_eq!(r.var_names(), &["x1".to_string(), "x3".to_string()]);
        assert!(r.has_full_support());
        assert!(!i.has_full_support());
    }
}
