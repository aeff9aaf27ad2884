//! Exact Betti tables of monomial ideals and their powers.
//!
//! Multigraded Betti numbers are computed over a prime field by two
//! independent routes (upper Koszul complexes and the lcm lattice). On top of
//! the engine sit tools for powers `I^d`: shape extraction, empirical
//! stabilization scans, Rees-algebra Betti bounds, square-cover indices and
//! unimodality checks. The `io` module holds the text formats.

pub mod betti;
pub mod complex;
pub mod error;
pub mod examples;
pub mod field;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod lab;
pub mod monomial;

pub use betti::{
    graded_betti, lcm_lattice_betti, multigraded_betti, GradedBettiTable, Limits,
    MultigradedBettiTable,
};
pub use complex::{Face, SimplicialComplex};
pub use error::{Error, ParseError, Result};
pub use field::FieldConfig;
pub use hilbert::{hilbert_numerator, HilbertNumerator, HilbertOptions, IntPoly};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
