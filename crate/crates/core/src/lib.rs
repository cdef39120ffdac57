//! Numerical evaluation and verification of inverse binomial sums,
//! generalized polylogarithms, and the closed-form identities relating them.
//!
//! The crate is organized as a small stack:
//!
//! * [`numkit`] — adaptive Gauss–Kronrod quadrature with log-endpoint
//!   handling, series summation with tail control, Levin-u acceleration,
//!   bracketed root finding.
//! * [`specfun`] — scalar special functions: harmonic numbers, the constant
//!   `c`, the piecewise inverse-tangent function `q(x)`, the pole locations
//!   `τ±(x)` and `ξ_{ℓ,m}(x)`, classical polylogarithms `Li_n`, and the
//!   parameter maps between series arguments and `x`.
//! * [`gpl`] — generalized polylogarithms `G(a₁,…,aₙ; z)` evaluated along the
//!   straight path by per-level adaptive Chebyshev interpolation, shuffle
//!   products, and multiple polylogarithms with a nested-series oracle.
//! * [`binom`] — term generators and direct summation for every inverse
//!   binomial series family, plus the per-term integral representations used
//!   as independent oracles.
//! * [`closedform`] — every closed-form right-hand side, directly evaluable.
//! * [`harness`] — verification suites over parameter grids, single-shot
//!   expression evaluation, and machine-readable reports.

pub mod binom;
pub mod closedform;
pub mod error;
pub mod gpl;
pub mod harness;
pub mod numkit;
pub mod specfun;

pub use error::Error;
pub use numkit::{EvalResult, Method, TailModel};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Complex scalar used throughout; all evaluations are double precision.
pub type C64 = num_complex::Complex64;
