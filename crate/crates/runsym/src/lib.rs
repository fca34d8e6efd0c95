//! Exact enumeration of permutations and words whose increasing-run lengths
//! lie in prescribed congruence classes.
//!
//! The pipeline: a polynomial `a(x)` with constant term 1 whose reciprocal
//! power series has every coefficient 0 or 1 determines a period `m` and a
//! residue set `T` ([`cyclotomic::classify_reciprocal`]); the reciprocal of
//! `Σ a_n h_n` in the algebra of noncommutative symmetric functions then has
//! ribbon support exactly on compositions with all parts allowed
//! ([`nsym::run_theorem_check`]); specializing to exponential generating
//! functions or to a finite alphabet counts permutations and words with the
//! corresponding run-length restriction. Every identity is checked against
//! brute-force enumeration in [`oracle`].
//!
//! All arithmetic is exact over arbitrary-precision integers; exponential
//! generating functions are kept as integer sequences under binomial
//! convolution.

pub mod cyclotomic;
pub mod nsym;
pub mod oracle;
pub mod parse;
pub mod series;
pub mod verify;

pub use cyclotomic::{classify_reciprocal, RunClassSpec};
pub use nsym::{Composition, NSymElement};
pub use series::{Convention, IntPolynomial, TruncatedSeries};
