//! Symmetric functions in the power-sum basis with exact rational coefficients.
//!
//! [`SymF`] is a homogeneous symmetric function, [`TPoly`] a polynomial in `t`
//! over one degree, and [`ZSeries`] a truncated series in `z` whose `z^m`
//! coefficient has degree `m`. Schur expansions are computed on demand with
//! the Murnaghan–Nakayama rule.

mod equivariant;
mod gamma;
mod named;
mod partition;
mod series;
mod symf;

pub use equivariant::{lattice_fixed_points, power_sum_identity_check, stapledon_phi, stembridge_h, StapledonMethod};
pub use gamma::{is_schur_gamma_positive, sym_gamma, sym_palindromic_split, SymGamma};
pub use named::{named_series, SeriesName};
pub use partition::Partition;
pub use series::{TPoly, ZSeries};
pub use symf::{character, standard_tableaux, SymF};
