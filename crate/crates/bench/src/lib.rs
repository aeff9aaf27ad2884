//! Inputs shared by the benchmarks.

use betti_stab::lab::random_monomial_ideal;
use betti_stab::MonomialIdeal;

/// Seeded random ideals with exactly `gens` minimal generators in `n` variables.
pub fn ideals_with_generators(n: usize, gens: usize, max_degree: u32, count: usize) -> Vec<MonomialIdeal> {
    (0u64..)
        .filter_map(|seed| random_monomial_ideal(n, gens, max_degree, seed).ok())
        .filter(|i| i.generator_count() == gens)
        .take(count)
        .collect()
}
