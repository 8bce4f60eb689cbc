//! Exact enumerative, geometric and symmetric-function machinery for
//! Eulerian, derangement and binomial Eulerian polynomials of the colored
//! permutation groups `Z_r wr S_n`.
//!
//! The crate is organised in four layers:
//!
//! - [`polyring`]: dense integer polynomials in `t` with palindromicity,
//!   gamma-expansions, palindromic decompositions and a Sturm-sequence
//!   real-rootedness test.
//! - [`colored_perms`]: enumeration of colored and signed permutations and
//!   the polynomials assembled from their statistics.
//! - [`simplicial`]: abstract simplicial complexes, barycentric and edgewise
//!   subdivisions, the sphere construction `Delta(Gamma)`, h- and local
//!   h-polynomials, and symmetric-group actions.
//! - [`symfunc`]: symmetric functions in the power-sum basis, truncated
//!   generating series, Schur expansions and the equivariant h-polynomial
//!   formulas of Stembridge and Stapledon.
//!
//! [`verify`] bundles the cross-checks between these layers into suites
//! that the command-line front end runs.

pub mod colored_perms;
pub mod error;
pub mod polyring;
pub mod simplicial;
pub mod symfunc;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
