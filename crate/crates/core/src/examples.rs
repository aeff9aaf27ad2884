//! Named ideals used throughout the tests, benches and documentation.

use crate::ideal::{default_var_names, MonomialIdeal};
use crate::monomial::Monomial;

fn squarefree(n: usize, supports: &[&[usize]]) -> Vec<Monomial> {
    supports
        .iter()
        .map(|s| {
            let mut e = vec![0u16; n];
            for &v in s.iter() {
                e[v] = 1;
            }
            Monomial::new(e)
        })
        .collect()
}

/// `(x3x4x5, x1x6x7, x3x6x8, x1x5x9, x2x8x9)` in nine variables; its powers
/// stabilize in shape from the third power on.
pub fn five_cubics() -> MonomialIdeal {
    let gens = squarefree(
        9,
        &[&[2, 3, 4], &[0, 5, 6], &[2, 5, 7], &[0, 4, 8], &[1, 7, 8]],
    );
    MonomialIdeal::with_names(gens, default_var_names(9)).unwrap()
}

/// Sturmfels' ideal `(def, cef, cdf, cde, bef, bcd, acf, ade)` in `k[a..f]`:
/// linear resolution, but its square is not linear.
pub fn sturmfels() -> MonomialIdeal {
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    let gens = squarefree(
        6,
        &[
            &[d, e, f],
            &[c, e, f],
            &[c, d, f],
            &[c, d, e],
            &[b, e, f],
            &[b, c, d],
            &[a, c, f],
            &[a, d, e],
        ],
    );
    let names = ["a", "b", "c", "d", "e", "f"].map(String::from).to_vec();
    MonomialIdeal::with_names(gens, names).unwrap()
}

/// The maximal ideal `(x1, ..., xn)`.
pub fn maximal(n: usize) -> MonomialIdeal {
    let gens = (0..n).map(|v| Monomial::variable(n, v)).collect();
    MonomialIdeal::minimalize(gens, n).unwrap()
}

/// The triangle edge ideal `(x1x2, x2x3, x1x3)`.
pub fn triangle() -> MonomialIdeal {
    MonomialIdeal::minimalize(squarefree(3, &[&[0, 1], &[1, 2], &[0, 2]]), 3).unwrap()
}
