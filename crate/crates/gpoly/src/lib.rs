//! Exact matroid invariants centered on the g-polynomial, the covaluative
//! invariant that vanishes on loops and coloops, equals `t` on connected
//! series-parallel matroids, and multiplies over direct sums.
//!
//! The g-polynomial is computed three independent ways and the backends are
//! cross-checked against each other in the test and `verify` suites:
//!
//! * counting admissible Delannoy paths of a Schubert matroid ([`schubert`]),
//! * summing `t * (t+1)^alpha(B)` over bases with internal activity 0 and
//!   external activity 1 ([`schubert`] + [`matroid`]),
//! * decomposing an arbitrary matroid over its lattice of cyclic-flat chains
//!   into Schubert pieces ([`decomp`]).
//!
//! Ground sets are `{1, ..., n}` with `n <= 64`; every enumerative routine is
//! exact and deterministic. Coefficients are arbitrary-precision integers.

pub mod catalog;
pub mod decomp;
pub mod error;
pub mod matroid;
pub mod poly;
pub mod schubert;
pub mod verify;

pub use error::{Error, Result};
pub use matroid::{ElementOrder, ElementSet, Matroid};
pub use poly::{BivariatePolynomial, IntPolynomial};
pub use schubert::{DelannoyPath, SchubertMatroid, Step};
