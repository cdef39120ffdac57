//! Foundation numerics: adaptive quadrature with endpoint log-singularity
//! handling, series summation with tail control, Levin-u sequence
//! acceleration, and bracketed root finding.
//!
//! All operations are pure functions of their inputs and safe to call
//! concurrently; there is no shared mutable state.

mod levin;
mod quad;
mod roots;
mod series;

pub use levin::levin_accelerate;
pub use quad::{adaptive_quad, adaptive_quad_log, Endpoints};
pub use roots::solve_bracketed;
pub use series::{sum_series, sum_series_complex};

use crate::C64;

/// Evaluation outcome: value, error estimate, and how much work it took.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: C64,
    /// Estimated absolute error; always finite and non-negative.
    pub abs_err: f64,
    /// Terms summed or quadrature nodes used (>= 1 for any nontrivial call).
    pub work: u64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: C64, abs_err: f64, work: u64, method: Method) -> Self {
        debug_assert!(abs_err >= 0.0 && abs_err.is_finite());
        EvalResult {
            value,
            abs_err,
            work: work.max(1),
            method,
        }
    }

    /// Result of evaluating an exact closed form; error at rounding level.
    pub fn closed(value: C64) -> Self {
        EvalResult::new(value, 1e-15 * (1.0 + value.norm()), 1, Method::Closed)
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Levin,
    Quad,
    Closed,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Direct => "DIRECT",
            Method::Levin => "LEVIN",
            Method::Quad => "QUAD",
            Method::Closed => "CLOSED",
        };
        f.write_str(s)
    }
}

/// Tail decay model for series remainder bounds.
///
/// `Geometric { ratio }` requires `ratio` in (0,1); `Power { exponent }`
/// requires `exponent < -1` for summability. The geometric ratios in use are
/// `|z|·4/27` and `|z|/16`, encoding the convergence domains of the two
/// binomial families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailModel {
    Geometric { ratio: f64 },
    Power { exponent: f64 },
    None,
}

/// Default series-term budget; override with `INVBINOM_MAX_TERMS`.
pub const DEFAULT_MAX_TERMS: u64 = 2_000_000;

/// Quadrature node budget per call.
pub const MAX_QUAD_NODES: u64 = 100_000;

/// Effective series-term budget (reads `INVBINOM_MAX_TERMS` once).
pub fn max_terms() -> u64 {
    static CACHE: std::sync::OnceLock<u64> = std::sync::OnceLock::new();
    *CACHE.get_or_init(|| {
        std::env::var("INVBINOM_MAX_TERMS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_TERMS)
    })
}
