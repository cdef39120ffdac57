//! Chebyshev interpolation primitives on [-1, 1] for complex-valued data.
//!
//! Degree is fixed at [`NFIT`]; fits happen on many small subintervals, so a
//! precomputed cosine table and O(n²) transforms beat an FFT here.

use crate::C64;
use std::sync::OnceLock;

/// Interpolation degree per piece.
pub const NFIT: usize = 24;

/// Chebyshev–Lobatto nodes `cos(πk/n)`, k = 0..=n (descending from 1 to -1).
pub fn nodes() -> &'static [f64; NFIT + 1] {
    static NODES: OnceLock<[f64; NFIT + 1]> = OnceLock::new();
    NODES.get_or_init(|| {
        let mut x = [0.0; NFIT + 1];
        for (k, xk) in x.iter_mut().enumerate() {
            *xk = (std::f64::consts::PI * k as f64 / NFIT as f64).cos();
        }
        x
    })
}

fn cos_table() -> &'static Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = NFIT;
        let mut t = vec![0.0; (n + 1) * (n + 1)];
        for j in 0..=n {
            for k in 0..=n {
                t[j * (n + 1) + k] = (std::f64::consts::PI * (j * k) as f64 / n as f64).cos();
            }
        }
        t
    })
}

/// Coefficients of the interpolant through values at the Lobatto nodes
/// (vals[k] at x_k = cos(πk/n)), as a plain Chebyshev series Σ c_k T_k.
pub fn fit(vals: &[C64; NFIT + 1]) -> Vec<C64> {
    let n = NFIT;
    let tab = cos_table();
    let mut c = vec![C64::new(0.0, 0.0); n + 1];
    for (j, cj) in c.iter_mut().enumerate() {
        let mut s = 0.5 * (vals[0] + vals[n] * tab[j * (n + 1) + n]);
        for k in 1..n {
            s += vals[k] * tab[j * (n + 1) + k];
        }
        *cj = 2.0 * s / n as f64;
    }
    c[0] *= 0.5;
    c[n] *= 0.5;
    c
}

/// Clenshaw evaluation of Σ c_k T_k(x).
pub fn eval(c: &[C64], x: f64) -> C64 {
    let mut b1 = C64::new(0.0, 0.0);
    let mut b2 = C64::new(0.0, 0.0);
    for &ck in c.iter().skip(1).rev() {
        let t = 2.0 * x * b1 - b2 + ck;
        b2 = b1;
        b1 = t;
    }
    x * b1 - b2 + c[0]
}

/// Derivative of the series at x (coefficient recurrence, then Clenshaw).
pub fn deriv_at(c: &[C64], x: f64) -> C64 {
    let n = c.len() - 1;
    if n == 0 {
        return C64::new(0.0, 0.0);
    }
    let mut d = vec![C64::new(0.0, 0.0); n + 1];
    for k in (0..n).rev() {
        let dk2 = if k + 2 <= n { d[k + 2] } else { C64::new(0.0, 0.0) };
        d[k] = dk2 + 2.0 * (k as f64 + 1.0) * c[k + 1];
    }
    d[0] *= 0.5;
    eval(&d[..n], x)
}

/// Antiderivative series A with A(-1) = 0 (unit half-width; callers scale).
pub fn antiderivative(c: &[C64]) -> Vec<C64> {
    let n = c.len() - 1;
    let mut a = vec![C64::new(0.0, 0.0); n + 2];
    a[1] = c[0] - if n >= 2 { c[2] / 2.0 } else { C64::new(0.0, 0.0) };
    for k in 2..=n + 1 {
        let ckm1 = c[k - 1];
        let ckp1 = if k + 1 <= n { c[k + 1] } else { C64::new(0.0, 0.0) };
        a[k] = (ckm1 - ckp1) / (2.0 * k as f64);
    }
    let mut at_left = C64::new(0.0, 0.0);
    for (k, ak) in a.iter().enumerate() {
        at_left += if k % 2 == 0 { *ak } else { -*ak };
    }
    a[0] -= at_left;
    a
}
