use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{lcm_closure, Limits, MultigradedBettiTable};
use crate::complex::{Face, SimplicialComplex};
use crate::error::Result;
use crate::field::FieldConfig;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The lcm lattice of a monomial ideal: lcms of nonempty subsets of the
/// minimal generators, plus an implicit bottom element `1̂`.
#[derive(Debug, Clone)]
pub struct LcmLattice {
    elements: Vec<Monomial>,
}

impl LcmLattice {
    pub fn new(ideal: &MonomialIdeal, limits: &Limits) -> Result<Self> {
        Ok(LcmLattice {
            elements: lcm_closure(ideal.generators(), limits)?,
        })
    }

    /// Non-bottom elements in canonical order (a linear extension of divisibility).
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    /// The open interval `(1̂, b)`: lattice elements strictly dividing `b`.
    pub fn open_interval_below(&self, b: &Monomial) -> Vec<&Monomial> {
        self.elements
            .iter()
            .filter(|c| *c != b && c.divides_unchecked(b))
            .collect()
    }

    /// Order complex of `(1̂, b)`: vertices are the interval's elements, faces
    /// its chains. The empty chain is always a face, so an empty interval
    /// gives the irrelevant complex.
    pub fn order_complex_below(&self, b: &Monomial) -> SimplicialComplex {
        let interval = self.open_interval_below(b);
        let n = interval.len();
        // interval is sorted by degree, so `above[a]` only lists later indices
        let above: Vec<Vec<u32>> = (0..n)
            .map(|a| {
                (a + 1..n)
                    .filter(|&c| interval[a].divides_unchecked(interval[c]))
                    .map(|c| c as u32)
                    .collect()
            })
            .collect();
        let mut faces = vec![Face::empty()];
        let mut chain = Vec::new();
        for start in 0..n as u32 {
            extend_chains(start, &above, &mut chain, &mut faces);
        }
        SimplicialComplex::from_faces(n, faces).expect("chains of a poset are subset-closed")
    }
}

fn extend_chains(top: u32, above: &[Vec<u32>], chain: &mut Vec<u32>, faces: &mut Vec<Face>) {
    chain.push(top);
    faces.push(Face::new(chain.clone()));
    for &next in &above[top as usize] {
        extend_chains(next, above, chain, faces);
    }
    chain.pop();
}

/// Multigraded Betti numbers from the lcm lattice:
/// `β_{i,b}(I) = dim H̃_{i-1}(Δ(1̂, b))` for every non-bottom `b`.
///
/// Independent of the Koszul-complex route; chain enumeration makes it
/// exponential in the lattice height, so it is meant for small ideals.
pub fn lcm_lattice_betti(
    ideal: &MonomialIdeal,
    field: &FieldConfig,
    limits: &Limits,
) -> Result<MultigradedBettiTable> {
    let lattice = LcmLattice::new(ideal, limits)?;
    let entries: BTreeMap<(usize, Monomial), u64> = lattice
        .elements()
        .par_iter()
        .map(|b| {
            lattice
                .order_complex_below(b)
                .reduced_homology_ranks(field)
                .into_iter()
                .map(|(q, r)| (((q + 1) as usize, b.clone()), r as u64))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(MultigradedBettiTable::new(ideal.ring_dim(), *field, entries))
}
