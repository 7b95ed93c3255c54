//! Numerical laboratory for zeta-zero sums, Dirichlet characters, and
//! twisted prime sums.
//!
//! The crate provides:
//!
//! * the functional-equation factor 𝒳(s) and its large-t main terms
//!   ([`special`]),
//! * ordinates of nontrivial zeta zeros through a Riemann–Siegel /
//!   Euler–Maclaurin hybrid, plus zero-table import, validation and
//!   caching ([`zeros`]),
//! * integer kernels: the von Mangoldt sieve, Möbius/Euler functions, full
//!   Dirichlet character groups, and Gauss sums ([`arith`]),
//! * smooth compactly supported test functions ([`bump`]),
//! * the central oscillatory sums — sharp and smoothed zero sums, twisted
//!   Chebyshev sums, character-twisted prime sums, and a vertical-segment
//!   oscillatory integral ([`sums`]),
//! * residual-series experiments with growth-exponent fitting
//!   ([`experiments`]).
//!
//! All heavy sums use compensated accumulation in fixed chunked order, so
//! results are bit-identical for any worker-thread count.

pub mod arith;
pub mod bump;
pub mod error;
pub mod experiments;
pub mod kahan;
pub mod phase;
pub mod quad;
mod rs_correction;
pub mod special;
pub mod sums;
pub mod zeros;

pub use error::{Error, Result};
pub use num_complex::Complex64;
