//! Square-cover index of a squarefree monomial ideal: the least `n` such that
//! some product of `n` minimal generators is divisible by `x_i^2` for every `i`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverIndex {
    /// `witness` lists generator indices (with repetition) whose product
    /// covers every variable squared.
    Found { n: u32, witness: Vec<usize> },
    NoneUpTo { n_max: u32 },
}

impl CoverIndex {
    pub fn value(&self) -> Option<u32> {
        match self {
            CoverIndex::Found { n, .. } => Some(*n),
            CoverIndex::NoneUpTo { .. } => None,
        }
    }
}

/// Square-cover index with the default search bound `2N`.
pub fn square_cover_index(ideal: &MonomialIdeal) -> Result<CoverIndex> {
    square_cover_index_with(ideal, 2 * ideal.ring_dim() as u32)
}

pub fn square_cover_index_with(ideal: &MonomialIdeal, n_max: u32) -> Result<CoverIndex> {
    check_hypotheses(ideal)?;
    let gens: Vec<u64> = ideal.generators().iter().map(|g| g.support_mask()).collect();
    let mut search = Search::new(&gens, ideal.ring_dim(), n_max);
    search.run();
    Ok(match search.best {
        Some(counts) => {
            let witness: Vec<usize> = counts
                .iter()
                .enumerate()
                .flat_map(|(g, &c)| std::iter::repeat_n(g, c as usize))
                .collect();
            CoverIndex::Found {
                n: witness.len() as u32,
                witness,
            }
        }
        None => CoverIndex::NoneUpTo { n_max },
    })
}

/// Squarefree with every variable in some generator's support.
pub fn check_hypotheses(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.ring_dim() > 64 {
        return Err(Error::Precondition("at most 64 variables are supported".into()));
    }
    if !ideal.is_squarefree() {
        return Err(Error::Precondition("ideal is not squarefree".into()));
    }
    if !ideal.has_full_support() {
        let missing: Vec<&str> = (0..ideal.ring_dim())
            .filter(|&v| ideal.support_mask() >> v & 1 == 0)
            .map(|v| ideal.var_names()[v].as_str())
            .collect();
        return Err(Error::Precondition(format!(
            "generators do not involve every variable (missing {})",
            missing.join(", ")
        )));
    }
    Ok(())
}

/// Depth-first search over per-generator multiplicities in {0, 1, 2}.
/// A third copy of a squarefree generator never helps: two copies already
/// give each of its variables exponent 2.
struct Search<'a> {
    gens: &'a [u64],
    order: Vec<usize>,
    coverage: Vec<u8>,
    counts: Vec<u8>,
    best: Option<Vec<u8>>,
    best_size: u32,
}

impl<'a> Search<'a> {
    fn new(gens: &'a [u64], n: usize, n_max: u32) -> Self {
        // rare variables first: generators touching a rarely covered variable lead
        let occurrences: Vec<usize> = (0..n)
            .map(|v| gens.iter().filter(|&&g| g >> v & 1 == 1).count())
            .collect();
        let rarity = |g: u64| {
            (0..n)
                .filter(|v| g >> v & 1 == 1)
                .map(|v| occurrences[v])
                .min()
                .unwrap_or(usize::MAX)
        };
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by_key(|&g| (rarity(gens[g]), std::cmp::Reverse(gens[g].count_ones()), g));
        Search {
            gens,
            order,
            coverage: vec![0; n],
            counts: vec![0; gens.len()],
            best: None,
            best_size: n_max + 1,
        }
    }

    fn run(&mut self) {
        self.descend(0, 0);
    }

    fn deficit_mask(&self) -> u64 {
        self.coverage
            .iter()
            .enumerate()
            .filter(|(_, &c)| c < 2)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    fn total_deficit(&self) -> u32 {
        self.coverage.iter().map(|&c| u32::from(2u8.saturating_sub(c))).sum()
    }

    /// Componentwise coverage bound: each further copy removes at most
    /// `max |g ∩ deficient|` units of deficit, and every deficient variable
    /// must still be coverable by the undecided generators.
    fn lower_bound(&self, pos: usize) -> Option<u32> {
        let deficient = self.deficit_mask();
        if deficient == 0 {
            return Some(0);
        }
        let remaining = &self.order[pos..];
        for (v, &c) in self.coverage.iter().enumerate() {
            if c < 2 {
                let capacity: u32 = remaining
                    .iter()
                    .filter(|&&g| self.gens[g] >> v & 1 == 1)
                    .map(|_| 2)
                    .sum();
                if capacity < u32::from(2 - c) {
                    return None;
                }
            }
        }
        let best_gain = remaining
            .iter()
            .map(|&g| (self.gens[g] & deficient).count_ones())
            .max()
            .unwrap_or(0);
        if best_gain == 0 {
            return None;
        }
        Some(self.total_deficit().div_ceil(best_gain))
    }

    fn apply(&mut self, g: usize, times: u8, sign: i8) {
        let mask = self.gens[g];
        for (v, c) in self.coverage.iter_mut().enumerate() {
            if mask >> v & 1 == 1 {
                *c = (*c as i8 + sign * times as i8) as u8;
            }
        }
    }

    fn descend(&mut self, pos: usize, used: u32) {
        let Some(lb) = self.lower_bound(pos) else {
            return;
        };
        if used + lb >= self.best_size {
            return;
        }
        if lb == 0 {
            self.best_size = used;
            self.best = Some(self.counts.clone());
            return;
        }
        if pos == self.order.len() {
            return;
        }
        let g = self.order[pos];
        for times in [2u8, 1, 0] {
            self.counts[g] = times;
            self.apply(g, times, 1);
            self.descend(pos + 1, used + u32::from(times));
            self.apply(g, times, -1);
        }
        self.counts[g] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::monomial::Monomial;

    #[test]
    fn small_cases() {
        let edge = MonomialIdeal::minimalize(vec![Monomial::new(vec![1, 1])], 2).unwrap();
        assert_eq!(square_cover_index(&edge).unwrap().value(), Some(2));
        assert_eq!(square_cover_index(&examples::triangle()).unwrap().value(), Some(3));
        let c = square_cover_index(&examples::five_cubics()).unwrap();
        assert_eq!(c.value(), Some(6));
    }

    #[test]
    fn witness_covers_every_square() {
        let i = examples::five_cubics();
        let CoverIndex::Found { witness, .. } = square_cover_index(&i).unwrap() else {
            panic!("expected a cover");
        };
        let mut exps = vec![0u16; i.ring_dim()];
        for g in witness {
            for (e, x) in exps.iter_mut().zip(i.generators()[g].exponents()) {
                *e += x;
            }
        }
        assert!(exps.iter().all(|&e| e >= 2));
    }

    #[test]
    fn search_bound_and_hypotheses() {
        assert_eq!(
            square_cover_index_with(&examples::five_cubics(), 5).unwrap(),
            CoverIndex::NoneUpTo { n_max: 5 }
        );
        let not_sqfree = MonomialIdeal::minimalize(vec![Monomial::new(vec![2, 1])], 2).unwrap();
        assert!(matches!(square_cover_index(&not_sqfree), Err(Error::Precondition(_))));
        let partial = MonomialIdeal::minimalize(vec![Monomial::new(vec![1, 1, 0])], 3).unwrap();
        assert!(matches!(square_cover_index(&partial), Err(Error::Precondition(_))));
    }
}
