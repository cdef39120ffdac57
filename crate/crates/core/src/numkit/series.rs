//! Direct series summation with explicit tail bounds.

use super::{max_terms, EvalResult, Method, TailModel};
use crate::{C64, Error, Result};

/// Sum `Σ_{k≥start_k} term(k)` until the tail bound drops below `tol`.
///
/// Terms must be eventually monotone-decreasing in modulus under the declared
/// tail model. For `Geometric { ratio: r }` the remainder after the last
/// computed term `t_N` is bounded by `|t_N|·r/(1-r)`; for `Power` by the
/// integral comparison `|t_N|·N/(-p-1)`. `TailModel::None` stops after three
/// consecutive terms below tolerance.
pub fn sum_series_complex<F: FnMut(i64) -> C64>(
    mut term: F,
    start_k: i64,
    tail: TailModel,
    tol: f64,
) -> Result<EvalResult> {
    match tail {
        TailModel::Geometric { ratio } => {
            if !(ratio > 0.0 && ratio < 1.0) {
                return Err(Error::Domain(format!(
                    "geometric ratio {ratio} outside (0,1)"
                )));
            }
        }
        TailModel::Power { exponent } => {
            if exponent >= -1.0 {
                return Err(Error::TailUnbounded { exponent });
            }
        }
        TailModel::None => {}
    }
    let budget = max_terms();
    let mut sum = C64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut work: u64 = 0;
    let mut small_streak = 0u32;
    let mut k = start_k;
    loop {
        let t = term(k);
        work += 1;
        sum += t;
        abs_sum += t.norm();
        let bound = match tail {
            TailModel::Geometric { ratio } => t.norm() * ratio / (1.0 - ratio),
            TailModel::Power { exponent } => t.norm() * (k.max(1) as f64) / (-exponent - 1.0),
            TailModel::None => t.norm(),
        };
        if bound <= tol {
            if matches!(tail, TailModel::None) {
                small_streak += 1;
                if small_streak >= 3 {
                    let err = bound + f64::EPSILON * abs_sum;
                    return Ok(EvalResult::new(sum, err, work, Method::Direct));
                }
            } else {
                let err = bound + f64::EPSILON * abs_sum;
                return Ok(EvalResult::new(sum, err, work, Method::Direct));
            }
        } else {
            small_streak = 0;
        }
        if work >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        k += 1;
    }
}

/// Real-friendly wrapper over [`sum_series_complex`].
pub fn sum_series<F: FnMut(i64) -> f64>(
    mut term: F,
    start_k: i64,
    tail: TailModel,
    tol: f64,
) -> Result<EvalResult> {
    sum_series_complex(|k| C64::new(term(k), 0.0), start_k, tail, tol)
}
