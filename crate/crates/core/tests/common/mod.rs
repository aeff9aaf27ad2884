#![allow(dead_code)]

use std::path::PathBuf;

use betti_stab::lab::{random_edge_ideal, random_monomial_ideal};
use betti_stab::MonomialIdeal;
use itertools::Itertools;

pub fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Seeded random ideals: 2..=7 variables, at most 10 generators of degree at most 4.
pub fn random_corpus(count: u64) -> Vec<MonomialIdeal> {
    (0..count)
        .map(|seed| random_monomial_ideal(2 + (seed % 6) as usize, 10, 4, 1000 + seed).unwrap())
        .collect()
}

/// Seeded random edge ideals on 3..=`max_n` vertices, restricted to the
/// variables their edges touch.
pub fn random_edges(count: u64, max_n: usize, max_edges: usize, salt: u64) -> Vec<MonomialIdeal> {
    (0..count)
        .map(|seed| {
            let n = 3 + (seed as usize % (max_n - 2));
            let all = n * (n - 1) / 2;
            let edges = 2 + (seed as usize * 7) % (all.min(max_edges) - 1);
            random_edge_ideal(n, edges, salt + seed).unwrap().restrict_to_support()
        })
        .collect()
}

/// Least `n <= n_max` such that some multiset of `n` generators has every
/// variable with total exponent at least 2, by plain enumeration.
pub fn cover_oracle(ideal: &MonomialIdeal, n_max: u32) -> Option<u32> {
    let gens = ideal.generators();
    (1..=n_max).find(|&n| {
        (0..gens.len()).combinations_with_replacement(n as usize).any(|pick| {
            let mut exps = vec![0u32; ideal.ring_dim()];
            for g in pick {
                for (e, &x) in exps.iter_mut().zip(gens[g].exponents()) {
                    *e += u32::from(x);
                }
            }
            exps.iter().all(|&e| e >= 2)
        })
    })
}
