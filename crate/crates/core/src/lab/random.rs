//! Seeded generators for test corpora.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Edge ideal of a uniformly sampled graph with `edge_count` distinct edges on
/// `n` vertices. The same seed always yields the same ideal.
pub fn random_edge_ideal(n: usize, edge_count: usize, seed: u64) -> Result<MonomialIdeal> {
    let all_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    if edge_count == 0 || edge_count > all_edges.len() {
        return Err(Error::Precondition(format!(
            "edge count {edge_count} is infeasible on {n} vertices (1..={})",
            all_edges.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = sample(&mut rng, all_edges.len(), edge_count);
    let gens = picked
        .into_iter()
        .map(|e| {
            let (a, b) = all_edges[e];
            Monomial::from_mask(n, (1 << a) | (1 << b))
        })
        .collect();
    MonomialIdeal::minimalize(gens, n)
}

/// A random monomial ideal in `n` variables: between 1 and `max_gens` sampled
/// monomials of degree 1..=`max_degree`, minimalized.
pub fn random_monomial_ideal(
    n: usize,
    max_gens: usize,
    max_degree: u32,
    seed: u64,
) -> Result<MonomialIdeal> {
    if n == 0 || max_gens == 0 || max_degree == 0 {
        return Err(Error::Precondition(
            "random ideal needs at least one variable, generator and degree".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.random_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let degree = rng.random_range(1..=max_degree);
            let mut exps = vec![0u16; n];
            for _ in 0..degree {
                exps[rng.random_range(0..n)] += 1;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::minimalize(gens, n)
}
