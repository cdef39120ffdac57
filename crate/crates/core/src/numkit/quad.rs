//! Adaptive Gauss–Kronrod (7-15) quadrature for complex-valued integrands,
//! with an exponential substitution for integrable log singularities at the
//! interval endpoints.

use super::{EvalResult, Method, MAX_QUAD_NODES};
use crate::{C64, Error, Result};
use std::collections::BinaryHeap;

// QUADPACK 15-point Kronrod abscissae and weights, 7-point Gauss weights.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// One G7-K15 application on [a,b]: (kronrod, err_estimate, resabs).
fn qk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);

    let mut res_g = C64::new(0.0, 0.0);
    let mut res_k = fc * WGK[7];
    let mut res_abs = fc.norm() * WGK[7];
    let mut fv = [C64::new(0.0, 0.0); 15];
    fv[7] = fc;

    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        let fsum = f1 + f2;
        res_k += WGK[j] * fsum;
        res_abs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            // odd Kronrod indices are the embedded Gauss points
            res_g += WG[j / 2] * fsum;
        }
    }
    res_g += WG[3] * fc;

    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).norm() + (fv[14 - j] - mean).norm());
    }

    let err_raw = ((res_k - res_g) * half).norm();
    res_asc *= half.abs();
    res_abs *= half.abs();
    // QUADPACK error rescaling
    let mut err = err_raw;
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    if floor > err {
        err = floor;
    }
    (res_k * half, err, res_abs)
}

struct Segment {
    a: f64,
    b: f64,
    value: C64,
    err: f64,
    resabs: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Integrate `f` over [a,b] to absolute tolerance `tol` by adaptive
/// interval bisection, worst segment first.
///
/// The integrand may have at worst integrable endpoint singularities; for a
/// known logarithmic endpoint singularity prefer [`adaptive_quad_log`],
/// which substitutes it away. Returns `NonConverged` when the requested
/// tolerance is unreachable within the node budget.
pub fn adaptive_quad<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, tol: f64) -> Result<EvalResult> {
    if !(a < b) {
        return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
    }
    let mut heap = BinaryHeap::new();
    let (v, e, resabs) = qk15(&f, a, b);
    let mut nodes: u64 = 15;
    let mut total = v;
    let mut total_err = e;
    let mut total_abs = resabs;
    heap.push(Segment { a, b, value: v, err: e, resabs });

    loop {
        let floor = 100.0 * f64::EPSILON * total_abs;
        if total_err <= tol.max(floor) {
            break;
        }
        if nodes + 30 > MAX_QUAD_NODES {
            return Err(Error::NonConverged {
                requested: tol,
                achieved: total_err,
            });
        }
        let worst = heap.pop().expect("heap nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval at rounding resolution; keep its estimate
            total_err = total_err.max(floor);
            heap.push(worst);
            break;
        }
        let (v1, e1, ra1) = qk15(&f, worst.a, mid);
        let (v2, e2, ra2) = qk15(&f, mid, worst.b);
        nodes += 30;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        total_abs += ra1 + ra2 - worst.resabs;
        heap.push(Segment { a: worst.a, b: mid, value: v1, err: e1, resabs: ra1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, err: e2, resabs: ra2 });
    }
    Ok(EvalResult::new(total, total_err, nodes, Method::Quad))
}

/// Endpoint singularity flags for [`adaptive_quad_log`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Endpoints {
    pub log_at_a: bool,
    pub log_at_b: bool,
}

impl Endpoints {
    pub fn none() -> Self {
        Endpoints::default()
    }
    pub fn at_a() -> Self {
        Endpoints { log_at_a: true, log_at_b: false }
    }
    pub fn at_b() -> Self {
        Endpoints { log_at_a: false, log_at_b: true }
    }
    pub fn both() -> Self {
        Endpoints { log_at_a: true, log_at_b: true }
    }
}

// Truncation depth of the exponential substitution: e^{-U} ~ 1e-20 leaves
// a tail below 1e-18 for log-type integrands.
const U_MAX: f64 = 46.0;

/// Integrate `f` over [a,b] where the integrand has (at worst) logarithmic
/// singularities at the flagged endpoints.
///
/// Each flagged side is mapped by `t = e^{-u}` (one level of substitution),
/// turning `log` endpoint behavior into a smooth exponentially decaying
/// integrand; the remainder of the interval goes through [`adaptive_quad`].
pub fn adaptive_quad_log<F: Fn(f64) -> C64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    sing: Endpoints,
) -> Result<EvalResult> {
    if !(a < b) {
        return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
    }
    if !sing.log_at_a && !sing.log_at_b {
        return adaptive_quad(f, a, b, tol);
    }
    let len = b - a;
    let parts = 1 + sing.log_at_a as u32 + sing.log_at_b as u32;
    let part_tol = tol / parts as f64;
    let w = len / (parts + 1) as f64; // width claimed by each singular side

    let mut value = C64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut work = 0;

    // cap u so the mapped point never collapses onto the endpoint in f64;
    // the dropped exponential tail is charged to the error estimate
    let u_cap = |endpoint: f64| -> f64 {
        let scale = endpoint.abs().max(f64::MIN_POSITIVE);
        (w / (4.0 * f64::EPSILON * scale)).ln().clamp(5.0, U_MAX)
    };

    let mut lo = a;
    let mut hi = b;
    if sing.log_at_a {
        // t = a + w e^{-u}
        let cap = u_cap(a);
        let r = adaptive_quad(
            |u| f(a + w * (-u).exp()) * w * (-u).exp(),
            0.0,
            cap,
            part_tol,
        )?;
        value += r.value;
        err += r.abs_err + w * (-cap).exp() * (cap + 5.0);
        work += r.work;
        lo = a + w;
    }
    if sing.log_at_b {
        let cap = u_cap(b);
        let r = adaptive_quad(
            |u| f(b - w * (-u).exp()) * w * (-u).exp(),
            0.0,
            cap,
            part_tol,
        )?;
        value += r.value;
        err += r.abs_err + w * (-cap).exp() * (cap + 5.0);
        work += r.work;
        hi = b - w;
    }
    let mid = adaptive_quad(&f, lo, hi, part_tol)?;
    Ok(EvalResult::new(
        value + mid.value,
        err + mid.abs_err,
        work + mid.work,
        Method::Quad,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn polynomial_exact() {
        let r = adaptive_quad(|t| re(t * t * (1.0 - t)), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value.re - 1.0 / 12.0).abs() < 1e-14, "{}", r.value.re);
        assert!(r.abs_err < 1e-12 + 1e-13);
    }

    #[test]
    fn log_endpoint_at_zero() {
        // ∫_0^1 log t dt = -1, flagged singular
        let r = adaptive_quad_log(|t| re(t.ln()), 0.0, 1.0, 1e-12, Endpoints::at_a()).unwrap();
        assert!((r.value.re + 1.0).abs() < 1e-12, "{}", r.value.re);
    }

    #[test]
    fn log_endpoint_unflagged_still_converges() {
        let r = adaptive_quad(|t| re(t.ln()), 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value.re + 1.0).abs() < 1e-9, "{}", r.value.re);
    }

    #[test]
    fn loglog_over_t_plus_two() {
        // ∫_0^1 log((1-t)/t)/(t+2) dt = log²3/2 + log²2/2 - log2·log3
        let want = {
            let l3 = 3f64.ln();
            l3 * l3 / 2.0 + LN_2 * LN_2 / 2.0 - LN_2 * l3
        };
        let r = adaptive_quad_log(
            |t| re(((1.0 - t) / t).ln() / (t + 2.0)),
            0.0,
            1.0,
            1e-10,
            Endpoints::both(),
        )
        .unwrap();
        assert!((r.value.re - want).abs() < 1e-10, "got {} want {}", r.value.re, want);
        // decimal value of the closed form, for the record
        assert!((want - 0.082200976946582715).abs() < 1e-15);
    }

    #[test]
    fn complex_integrand() {
        // ∫_0^1 e^{it} dt = sin 1 + i(1 - cos 1)
        let r = adaptive_quad(|t| C64::new(t.cos(), t.sin()), 0.0, 1.0, 1e-13).unwrap();
        let want = C64::new(1f64.sin(), 1.0 - 1f64.cos());
        assert!((r.value - want).norm() < 1e-13);
    }

    #[test]
    fn empty_interval_rejected() {
        assert!(matches!(
            adaptive_quad(|_| re(0.0), 1.0, 1.0, 1e-10),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn budget_exhaustion_reported() {
        // genuinely nasty integrand at an interior point, tolerance far too tight
        let r = adaptive_quad(|t| re((t - std::f64::consts::FRAC_1_SQRT_2).abs().powf(-0.98)), 0.0, 1.0, 1e-14);
        assert!(matches!(r, Err(Error::NonConverged { .. })));
    }

    #[test]
    fn linearity_on_polynomials() {
        // quad(αf + βg) = α quad(f) + β quad(g) within 2 tol
        let f = |t: f64| re(t * t + 0.5 * t);
        let g = |t: f64| re(1.0 - t * t * t);
        let (alpha, beta) = (2.25, -1.5);
        let tol = 1e-12;
        let lhs = adaptive_quad(|t| alpha * f(t) + beta * g(t), 0.0, 1.0, tol).unwrap();
        let rf = adaptive_quad(f, 0.0, 1.0, tol).unwrap();
        let rg = adaptive_quad(g, 0.0, 1.0, tol).unwrap();
        let rhs = alpha * rf.value + beta * rg.value;
        assert!((lhs.value - rhs).norm() < 2.0 * tol);
    }
}
