//! Exact finite-N observables of the Gaussian Unitary Ensemble.
//!
//! The crate computes the Wilson loop expectation `I(t, N) = <Tr e^{itH} / N>`,
//! the spectral density, the resolvent and the even moments of an `N x N`
//! GUE matrix in closed form, and checks every closed form against an
//! independent route:
//!
//! * [`maps`] counts Wick pairings (rosettes) by genus, Eulerian cycles of
//!   doubled multigraphs and (map, spanning tree) pairs by brute force;
//! * [`montecarlo`] samples GUE matrices and compares empirical estimates with
//!   the exact values through z-scores;
//! * [`observables`] carries quadrature routes (Fourier, Laplace, a
//!   two-variable Gaussian integral) next to the closed forms.
//!
//! Exact quantities are [`Rational`]s; floating point only appears at the
//! evaluation boundary.

// `!(x > 0.0)` style guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod exact;
pub mod maps;
pub mod montecarlo;
pub mod observables;

#[cfg(feature = "cli")]
pub mod cli;

pub use error::{Error, Result};
pub use exact::Rational;
