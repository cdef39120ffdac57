//! Levin u-transform for accelerating slowly convergent partial sums.

use super::{EvalResult, Method};
use crate::{C64, Error, Result};

/// Number of leading partial sums fed to the transform. Higher orders on
/// longer windows are numerically degenerate in double precision; the
/// transform extracts its information from the early asymptotics.
const WINDOW: usize = 64;

/// Extrapolate the limit of a convergent sequence of partial sums with the
/// Levin u-transform (β = 1).
///
/// Designed for power-law convergence such as the `k^{-3/2}` term decay on
/// the boundary `|z| = 27/4`. The error estimate is the difference between
/// the two best successive extrapolation orders.
pub fn levin_accelerate(partial_sums: &[C64]) -> Result<EvalResult> {
    let m = partial_sums.len();
    if m < 8 {
        return Err(Error::Domain(format!(
            "levin_accelerate needs >= 8 partial sums, got {m}"
        )));
    }
    let sums = &partial_sums[..m.min(WINDOW)];
    let n = sums.len();
    let scale = sums.iter().map(|s| s.norm()).fold(0.0, f64::max);

    // constant sequence short-circuit: all increments negligible
    let mut incs = Vec::with_capacity(n);
    incs.push(sums[0]);
    for i in 1..n {
        incs.push(sums[i] - sums[i - 1]);
    }
    if incs[1..].iter().all(|a| a.norm() <= f64::EPSILON * scale) {
        return Ok(EvalResult::new(sums[n - 1], 0.0, n as u64, Method::Levin));
    }

    const BETA: f64 = 1.0;
    let mut num: Vec<C64> = Vec::with_capacity(n);
    let mut den: Vec<C64> = Vec::with_capacity(n);
    for (i, s) in sums.iter().enumerate() {
        let mut w = (BETA + i as f64) * incs[i];
        if w.norm() == 0.0 {
            w = C64::new(f64::MIN_POSITIVE, 0.0);
        }
        num.push(s / w);
        den.push(C64::new(1.0, 0.0) / w);
    }

    let mut best = sums[n - 1];
    let mut best_diff = f64::INFINITY;
    let mut prev: Option<C64> = None;
    let mut diverge_streak = 0u32;
    let mut last_diff = f64::INFINITY;

    for k in 1..n {
        for i in 0..n - k {
            let bn = BETA + i as f64;
            // Weniger (7.2-8): the k-1 -> k update factor
            let factor = bn * (bn + k as f64 - 1.0).powi(k as i32 - 2)
                / (bn + k as f64).powi(k as i32 - 1);
            num[i] = num[i + 1] - factor * num[i];
            den[i] = den[i + 1] - factor * den[i];
        }
        if den[0].norm() > 0.0 {
            let est = num[0] / den[0];
            if let Some(p) = prev {
                let d = (est - p).norm();
                if d < best_diff && est.is_finite() {
                    best_diff = d;
                    best = est;
                }
                if d > 4.0 * last_diff && d > best_diff * 1e3 {
                    diverge_streak += 1;
                    if diverge_streak >= 6 && best_diff > 0.05 * scale {
                        return Err(Error::Unstable);
                    }
                } else {
                    diverge_streak = 0;
                }
                last_diff = d;
            }
            prev = Some(est);
        }
    }
    if !best.is_finite() || best_diff > 0.5 * scale.max(1e-300) {
        return Err(Error::Unstable);
    }
    let err = best_diff + f64::EPSILON * scale;
    Ok(EvalResult::new(best, err, n as u64, Method::Levin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cums(terms: impl Iterator<Item = f64>) -> Vec<C64> {
        let mut s = 0.0;
        terms
            .map(|t| {
                s += t;
                C64::new(s, 0.0)
            })
            .collect()
    }

    #[test]
    fn basel_from_twenty() {
        let sums = cums((1..=20).map(|k| 1.0 / (k as f64 * k as f64)));
        let r = levin_accelerate(&sums).unwrap();
        assert!((r.value.re - PI * PI / 6.0).abs() < 1e-8, "{}", r.value.re);
    }

    #[test]
    fn constant_sequence_exact() {
        let sums = vec![C64::new(3.25, 0.0); 12];
        let r = levin_accelerate(&sums).unwrap();
        assert_eq!(r.value.re, 3.25);
        assert_eq!(r.abs_err, 0.0);
    }

    #[test]
    fn matches_direct_sum_on_geometric() {
        let sums = cums((1..=24).map(|k| 0.5f64.powi(k)));
        let r = levin_accelerate(&sums).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-8);
    }

    #[test]
    fn too_few_sums_rejected() {
        let sums = vec![C64::new(1.0, 0.0); 5];
        assert!(levin_accelerate(&sums).is_err());
    }

    #[test]
    fn power_three_halves() {
        // partial sums of zeta(3/2): the boundary decay profile
        let sums = cums((1..=300).map(|k| (k as f64).powf(-1.5)));
        let r = levin_accelerate(&sums).unwrap();
        let zeta32 = 2.612375348685488343348567567924;
        assert!((r.value.re - zeta32).abs() < 1e-7, "{}", (r.value.re - zeta32).abs());
    }
}
