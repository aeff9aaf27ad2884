use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{Limits, MultigradedBettiTable};
use crate::complex::{mask_reduced_homology, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

const MAX_MASK_VARS: usize = 64;

/// Join-closure of `gens` under lcm, in canonical order.
///
/// Fixpoint iteration: every new element is joined with every generator,
/// which reaches the lcm of every nonempty subset.
pub fn lcm_closure(gens: &[Monomial], limits: &Limits) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let c = a.lcm(g)?;
                if !seen.contains(&c) {
                    seen.insert(c.clone());
                    next.push(c);
                }
            }
        }
        if seen.len() > limits.max_lcm_candidates {
            return Err(Error::ResourceLimit {
                what: "lcm closure size",
                limit: limits.max_lcm_candidates,
                found: seen.len(),
            });
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The upper Koszul simplicial complex `K^b(I)`: squarefree `σ ≤ b` with
/// `x^b / x^σ ∈ I`, on the ring's variables as vertices.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    let n = ideal.ring_dim();
    if b.ring_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.ring_dim(),
        });
    }
    if n > 30 {
        return Err(Error::Precondition(format!(
            "upper Koszul complex enumeration supports at most 30 variables, got {n}"
        )));
    }
    let support = b.support_mask();
    let mut faces = Vec::new();
    // all submasks of the support, including the empty one
    let mut sigma = support;
    loop {
        let sigma_mono = Monomial::from_mask(n, sigma);
        if let Some(q) = b.quotient(&sigma_mono)? {
            if ideal.contains(&q) {
                faces.push(Face::new(
                    (0..n as u32).filter(|&v| sigma >> v & 1 == 1).collect(),
                ));
            }
        }
        if sigma == 0 {
            break;
        }
        sigma = (sigma - 1) & support;
    }
    SimplicialComplex::from_faces(n, faces)
}

/// Multigraded Betti numbers `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))` over `field`.
pub fn multigraded_betti(ideal: &MonomialIdeal, field: &FieldConfig) -> Result<MultigradedBettiTable> {
    multigraded_betti_with(ideal, field, &Limits::default())
}

pub fn multigraded_betti_with(
    ideal: &MonomialIdeal,
    field: &FieldConfig,
    limits: &Limits,
) -> Result<MultigradedBettiTable> {
    let n = ideal.ring_dim();
    if n > MAX_MASK_VARS {
        return Err(Error::Precondition(format!(
            "at most {MAX_MASK_VARS} variables are supported, got {n}"
        )));
    }
    let gens = ideal.generators();
    let candidates = lcm_closure(gens, limits)?;
    let per_degree: Vec<Vec<(usize, Monomial, u64)>> = candidates
        .into_par_iter()
        .map(|b| {
            koszul_betti_at(gens, &b, field)
                .into_iter()
                .map(|(i, v)| (i, b.clone(), v))
                .collect()
        })
        .collect();
    let entries: BTreeMap<(usize, Monomial), u64> = per_degree
        .into_iter()
        .flatten()
        .map(|(i, b, v)| ((i, b), v))
        .collect();
    Ok(MultigradedBettiTable::new(n, *field, entries))
}

/// Nonzero `(i, β_{i,b})` at a single multidegree.
///
/// For a generator `m | b` let `T_m` be the variables where `m` and `b`
/// agree; then `x^b/x^σ` is divisible by `m` exactly when `σ` avoids `T_m`.
/// So `K^b` is generated by the facets `complement(T_m)`.
fn koszul_betti_at(gens: &[Monomial], b: &Monomial, field: &FieldConfig) -> Vec<(usize, u64)> {
    let n = b.ring_dim();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut facets: Vec<u64> = gens
        .iter()
        .filter(|g| g.divides_unchecked(b))
        .map(|g| {
            let tight = g
                .exponents()
                .iter()
                .zip(b.exponents())
                .enumerate()
                .filter(|(_, (x, y))| x == y)
                .fold(0u64, |m, (v, _)| m | (1 << v));
            full & !tight
        })
        .collect();
    if facets.is_empty() {
        return Vec::new();
    }
    facets.sort_unstable();
    facets.dedup();
    let union = facets.iter().fold(0, |u, f| u | f);
    if facets.contains(&union) {
        // a single simplex: acyclic unless it is just the empty face
        return if union == 0 { vec![(0, 1)] } else { Vec::new() };
    }
    let mut faces: Vec<u64> = Vec::new();
    for &f in &facets {
        let mut s = f;
        loop {
            faces.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    faces.sort_unstable();
    faces.dedup();
    mask_reduced_homology(&faces, field)
        .into_iter()
        .map(|(q, r)| ((q + 1) as usize, r as u64))
        .collect()
}
