//! Exact-arithmetic structures pairing a feasible set family with a
//! rational rank function, generalizing polymatroids, greedoids, and rooted
//! graph connectivity systems.
//!
//! The crate provides:
//!
//! * the data model and its two defining axioms ([`megagreedoid`]);
//! * builders from rooted multigraphs, posets, greedoid rank tables, and
//!   polymatroid rank tables ([`constructions`]);
//! * quasisymmetric functions in the monomial and fundamental bases with
//!   exact rational coefficients ([`qsym`]);
//! * the coloring-style invariant: descents of feasible permutations, the
//!   fundamental expansion, counting polynomials, reciprocity, and
//!   brute-force counting oracles ([`invariants`]);
//! * the relative order complex, its greedy facet order, and shelling
//!   certificates ([`complex`]);
//! * product, coproduct, and recursive antipode for formal sums of
//!   structures ([`hopf`]);
//! * seeded random instance generation ([`corpus`]) and a batch CLI
//!   ([`cli`]).
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! floating-point values anywhere. Ground sets are capped at 16 elements so
//! subsets fit in a 16-bit mask; the algorithms are exponential by nature
//! and intended for desk-scale structures.
//!
//! Start with the runnable examples (`cargo run --example rooted_graph`)
//! or the [`samples`] module.

pub mod cli;
pub mod complex;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod ground;
pub mod hopf;
pub mod invariants;
pub mod megagreedoid;
pub mod qsym;
pub mod rational;
pub mod samples;

pub use error::Error;
pub use ground::{GroundSet, Subset};
pub use megagreedoid::{check_axioms, AxiomReport, AxiomViolation, Megagreedoid};
pub use qsym::{Basis, CountingPolynomial, QsymElement};
pub use rational::Rational;
