//! Bracketed root finding: secant/Newton steps safeguarded by bisection.

use crate::{Error, Result};

/// Find the root of a continuous `f` on [lo, hi] with `f(lo)·f(hi) < 0`.
///
/// Secant steps (numerical Newton) are taken when they stay inside the
/// bracket and shrink it; otherwise the step falls back to bisection. Returns
/// the root within `tol`.
pub fn solve_bracketed<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let mut x = 0.5 * (a + b);
    let mut fx = f(x);
    for _ in 0..200 {
        if fx == 0.0 {
            return Ok(x);
        }
        // shrink the bracket
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if b - a <= tol {
            return Ok(if fa.abs() < fb.abs() { a } else { b });
        }
        // secant through the bracket endpoints
        let denom = fb - fa;
        let mut next = if denom != 0.0 { a - fa * (b - a) / denom } else { 0.5 * (a + b) };
        let margin = 0.01 * (b - a);
        if !(next > a + margin && next < b - margin) {
            next = 0.5 * (a + b);
        }
        x = next;
        fx = f(x);
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let r = solve_bracketed(|x| x * x - 2.0, 1.0, 2.0, 1e-14).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn cubic_root_minus_one() {
        // 2x³ - x + 1 = (x+1)(2x² - 2x + 1); only real root is -1
        let r = solve_bracketed(|x| 2.0 * x * x * x - x + 1.0, -3.0, 0.89, 1e-13).unwrap();
        assert!((r + 1.0).abs() < 1e-11, "{r}");
    }

    #[test]
    fn boundary_cubic_root_minus_three() {
        let r = solve_bracketed(|x| x * x * x - 6.75 * (x - 1.0), -3.0001, 0.89, 1e-13).unwrap();
        assert!((r + 3.0).abs() < 1e-10, "{r}");
    }

    #[test]
    fn invalid_bracket() {
        assert!(matches!(
            solve_bracketed(|x| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn residual_scaled_by_derivative() {
        // |f(root)| <= |f'(root)|·tol·10 on a smooth function
        let tol = 1e-12;
        let f = |x: f64| x.exp() - 2.0;
        let r = solve_bracketed(f, 0.0, 1.0, tol).unwrap();
        let deriv = r.exp();
        assert!(f(r).abs() <= deriv * tol * 10.0);
    }
}
