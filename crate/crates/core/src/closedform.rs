//! Closed-form right-hand sides of every identity under verification, as
//! directly evaluable functions of the parameter.

use crate::binom::{sum_family, SumSpec};
use crate::gpl::{gpl_eval, GplWord};
use crate::specfun::{c_const, li2, q_of, sqrt_principal, tau_pm, xi, z3_of_x};
use crate::{C64, Error, Result};
use std::f64::consts::{LN_2, PI, SQRT_2};

/// Identity catalog. Parameters are real except where noted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// Σ zᵏ/((k+1)C(3k,k)) at z = x³/(x−1), x ∈ (−3,c)∖{0}
    Thm11,
    /// Σ zᵏ/(k²C(3k,k)) = (2/3)q(x)² − log²(1−x)/2, x ∈ (−3,c)
    Thm12,
    /// Σ 1/((k+1)X^{2k}C(4k,2k)), X > 1/4
    Thm13a,
    /// Σ 4ᵏ/((k+1)[x(1−x)]ᵏC(4k,2k)), x > (1+√2)/2 or x < (1−√2)/2
    Thm13b,
    /// Σ 4ᵏ/(k²[x(1−x)]ᵏC(4k,2k)) = −2artanh²(1/√x) − 2artanh²(1/√(1−x))
    Thm14,
    /// Σ (H_k−H_{2k})zᵏ/((3k+1)C(3k,k))
    T15HkH2k3k1,
    /// Σ (H_k−H_{3k+1})zᵏ/((3k+1)C(3k,k))
    T15HkH3k3k1,
    /// Σ (H_k−H_{2k})zᵏ/((3k+2)C(3k,k))
    T15HkH2k3k2,
    /// Σ (H_k−H_{2k−2})zᵏ/((2k−1)C(3k,k))
    T15HkH2k2k1,
    /// Σ (H_k−H_{3k−1})zᵏ/((2k−1)C(3k,k))
    T15HkH3k2k1,
    /// Σ H_k zᵏ/((4k+1)C(4k,2k)) over ξ-letter GPLs, |4x(1−x)| > 1
    T16Hk4k1,
    /// Σ H_k zᵏ/((4k+3)C(4k,2k)) over ξ-letter GPLs
    T16Hk4k3,
    /// Σ zᵏ/(k C(3k,k)) weight-1 remark form
    R1k,
    /// Σ (H_{2k}−H_{3k})zᵏ/(k C(3k,k))
    RH2kH3k,
    /// Σ (H_{k−1}−H_{2k})zᵏ/(k C(3k,k))
    RHk1H2k,
    /// Σ 1/((k+1)2ᵏC(3k,k)) = 3log²2 − π²/4 + (8π−21log2)/5
    EqKp1Half,
    /// Σ 8ᵏ/((k+1)3ᵏC(3k,k)) = (9log²3−3π²)/16 + 11√3π/14 − 9log3/7
    EqKp183,
    /// Σ 4ᵏ/((k+1)C(4k,2k)) closed constant
    Eq4kKp1,
    /// Σ 1/((k+2)XᵏC(2k,k)), X > 1/4
    Ck2kKp2,
    /// Σ z^{2k}/(k²C(2k,k)) = 2 arcsin²(z/2)
    ArcsinSq,
    /// Σ 1/(k²X^{2k}C(4k,2k)) = 4arccot²√(4X−1) − 4artanh²(1/√(4X+1))
    X2kK2C4,
    /// ∫₀¹ log((1−t)/t)/(t+τ)dt = log²(1+τ)/2 + log²τ/2 − logτ·log(1+τ)
    LoglogTau,
    /// Li₂(x)+Li₂(−1/τ⁺)+Li₂(−1/τ⁻) reduced by Newman's functional equation
    NewmanSum,
    /// Li₂(z) + Li₂(1/(1−1/z)) = −log²(1−z)/2
    Landen,
}

impl IdentityId {
    pub const ALL: [IdentityId; 24] = [
        IdentityId::Thm11,
        IdentityId::Thm12,
        IdentityId::Thm13a,
        IdentityId::Thm13b,
        IdentityId::Thm14,
        IdentityId::T15HkH2k3k1,
        IdentityId::T15HkH3k3k1,
        IdentityId::T15HkH2k3k2,
        IdentityId::T15HkH2k2k1,
        IdentityId::T15HkH3k2k1,
        IdentityId::T16Hk4k1,
        IdentityId::T16Hk4k3,
        IdentityId::R1k,
        IdentityId::RH2kH3k,
        IdentityId::RHk1H2k,
        IdentityId::EqKp1Half,
        IdentityId::EqKp183,
        IdentityId::Eq4kKp1,
        IdentityId::Ck2kKp2,
        IdentityId::ArcsinSq,
        IdentityId::X2kK2C4,
        IdentityId::LoglogTau,
        IdentityId::NewmanSum,
        IdentityId::Landen,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::Thm11 => "THM11",
            IdentityId::Thm12 => "THM12",
            IdentityId::Thm13a => "THM13A",
            IdentityId::Thm13b => "THM13B",
            IdentityId::Thm14 => "THM14",
            IdentityId::T15HkH2k3k1 => "T15_HK_H2K_3K1",
            IdentityId::T15HkH3k3k1 => "T15_HK_H3K_3K1",
            IdentityId::T15HkH2k3k2 => "T15_HK_H2K_3K2",
            IdentityId::T15HkH2k2k1 => "T15_HK_H2K_2K1",
            IdentityId::T15HkH3k2k1 => "T15_HK_H3K_2K1",
            IdentityId::T16Hk4k1 => "T16_HK_4K1",
            IdentityId::T16Hk4k3 => "T16_HK_4K3",
            IdentityId::R1k => "R_1K",
            IdentityId::RH2kH3k => "R_H2K_H3K",
            IdentityId::RHk1H2k => "R_HK1_H2K",
            IdentityId::EqKp1Half => "EQ_KP1_HALF",
            IdentityId::EqKp183 => "EQ_KP1_83",
            IdentityId::Eq4kKp1 => "EQ_4K_KP1",
            IdentityId::Ck2kKp2 => "CK2K_KP2",
            IdentityId::ArcsinSq => "ARCSIN_SQ",
            IdentityId::X2kK2C4 => "X2K_K2_C4",
            IdentityId::LoglogTau => "LOGLOG_TAU",
            IdentityId::NewmanSum => "NEWMAN_SUM",
            IdentityId::Landen => "LANDEN",
        }
    }

    pub fn from_tag(tag: &str) -> Option<IdentityId> {
        IdentityId::ALL.iter().copied().find(|i| i.tag() == tag)
    }
}

fn artanh(w: C64) -> C64 {
    let one = C64::new(1.0, 0.0);
    ((one + w).ln() - (one - w).ln()) / 2.0
}

fn check_c3_domain(id: IdentityId, x: f64, exclude_zero: bool) -> Result<()> {
    if !(x > -3.0 && x < c_const()) || (exclude_zero && x == 0.0) {
        return Err(Error::Domain(format!(
            "{} needs x in (-3, c){}got {x}",
            id.tag(),
            if exclude_zero { " minus {0}, " } else { ", " }
        )));
    }
    Ok(())
}

fn check_c4_domain(id: IdentityId, x: f64) -> Result<()> {
    if !(x > (1.0 + SQRT_2) / 2.0 || x < (1.0 - SQRT_2) / 2.0) {
        return Err(Error::Domain(format!(
            "{} needs x > (1+√2)/2 or x < (1−√2)/2, got {x}",
            id.tag()
        )));
    }
    Ok(())
}

// i(Li₂(−1/τ⁺) − Li₂(−1/τ⁻)): real for real x since the pair is conjugate.
fn i_dilog_diff(x: f64) -> Result<C64> {
    let (tp, tm) = tau_pm(x)?;
    let one = C64::new(1.0, 0.0);
    let d = li2(-one / tp)? - li2(-one / tm)?;
    Ok(C64::new(0.0, 1.0) * d)
}

fn sqrt_ratio(x: f64) -> f64 {
    ((1.0 - x) / (3.0 + x)).sqrt()
}

/// Evaluate the closed-form right-hand side of `id` at `param`.
///
/// The constant identities (`EQ_*`) ignore the parameter. `LOGLOG_TAU` takes
/// τ, `LANDEN`/`ARCSIN_SQ` take z (complex allowed), `THM13A`/`CK2K_KP2`/
/// `X2K_K2_C4` take X, everything else takes the real x parameter.
pub fn closed_eval(id: IdentityId, param: C64) -> Result<C64> {
    let x = param.re;
    let one = C64::new(1.0, 0.0);
    match id {
        IdentityId::Thm11 => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let v = 2.0 * (1.0 - x) * q * q / x.powi(3)
                - (x * x + 15.0 * x - 18.0) / (x * x * (2.0 * x - 3.0)) * sqrt_ratio(x) * q
                - 3.0 * (1.0 - x) * ll * ll / (2.0 * x.powi(3))
                + 3.0 * (x - 6.0) * (x - 1.0) * ll / (2.0 * x * x * (2.0 * x - 3.0));
            Ok(C64::new(v, 0.0))
        }
        IdentityId::Thm12 => {
            check_c3_domain(id, x, false)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            Ok(C64::new(2.0 / 3.0 * q * q - ll * ll / 2.0, 0.0))
        }
        IdentityId::Thm13a => {
            if !(x > 0.25) {
                return Err(Error::Domain(format!("THM13A needs X > 1/4, got {x}")));
            }
            let y = (1.0 / (4.0 * x - 1.0).sqrt()).atan(); // arccot √(4X−1)
            let w = (1.0 / (4.0 * x + 1.0).sqrt()).atanh();
            let v = 4.0 * x * (12.0 * x - 1.0) * y / (4.0 * x - 1.0).sqrt()
                - 24.0 * x * x * y * y
                - 4.0 * x * (12.0 * x + 1.0) * w / (4.0 * x + 1.0).sqrt()
                + 24.0 * x * x * w * w;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::Thm13b => {
            check_c4_domain(id, x)?;
            let xc = C64::new(x, 0.0);
            let sx = sqrt_principal(xc);
            let s1x = sqrt_principal(one - xc);
            let ax = artanh(one / sx);
            let ay = artanh(one / s1x);
            let v = 2.0 * (one - xc) * (6.0 * xc - one) / (one - 2.0 * xc) * sx * ax
                + 2.0 * xc * (6.0 * xc - 5.0 * one) / (one - 2.0 * xc) * s1x * ay
                + 3.0 * xc * (one - xc) * (ax * ax + ay * ay);
            Ok(v)
        }
        IdentityId::Thm14 => {
            check_c4_domain(id, x)?;
            let xc = C64::new(x, 0.0);
            let ax = artanh(one / sqrt_principal(xc));
            let ay = artanh(one / sqrt_principal(one - xc));
            Ok(-2.0 * ax * ax - 2.0 * ay * ay)
        }
        IdentityId::T15HkH2k3k1 => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let v = -(1.0 - x) / (2.0 * x * (3.0 - 2.0 * x)) * (q * q + 3.0 * ll * ll / 4.0)
                - (3.0 - x) / (2.0 * x * (3.0 - 2.0 * x)) * sqrt_ratio(x) * q * ll;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::T15HkH3k3k1 => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let pre = (3.0 - x) / (2.0 * x * (3.0 - 2.0 * x)) * sqrt_ratio(x);
            let li2x = li2(C64::new(x, 0.0))?;
            let v = C64::new(-(1.0 - x) / (2.0 * x * (3.0 - 2.0 * x)), 0.0)
                * (3.0 * li2x + C64::new(2.0 * q * q / 3.0 + ll * ll, 0.0))
                + pre * i_dilog_diff(x)?
                - C64::new(pre * q * ll, 0.0);
            Ok(v)
        }
        IdentityId::T15HkH2k3k2 => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let sr = sqrt_ratio(x);
            let x2 = x * x;
            let v = -(3.0 - x) * (1.0 - x) / (2.0 * x2 * (3.0 - 2.0 * x)) * q * q
                + 3.0 * (3.0 + x) / x2 * sr * q
                + (9.0 - 6.0 * x - x2) / (2.0 * x2 * (3.0 - 2.0 * x)) * sr * q * ll
                + 9.0 * (1.0 - x) / (2.0 * x2) * ll
                - 3.0 * (3.0 - x) * (1.0 - x) / (8.0 * x2 * (3.0 - 2.0 * x)) * ll * ll;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::T15HkH2k2k1 => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let v = -(1.0 - x) * x / (3.0 * (3.0 - 2.0 * x)) * (q * q + 3.0 * ll * ll / 4.0)
                + x * (3.0 - x * x)
                    / (3.0 * ((1.0 - x) * (3.0 + x)).sqrt() * (3.0 - 2.0 * x))
                    * q
                    * ll;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::T15HkH3k2k1 => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let pre = x * (3.0 - x * x) / (3.0 * ((1.0 - x) * (3.0 + x)).sqrt() * (3.0 - 2.0 * x));
            let li2x = li2(C64::new(x, 0.0))?;
            let v = C64::new(-(1.0 - x) * x / (3.0 * (3.0 - 2.0 * x)), 0.0)
                * (3.0 * li2x + C64::new(2.0 * q * q / 3.0 + ll * ll, 0.0))
                - pre * i_dilog_diff(x)?
                + C64::new(pre * q * ll, 0.0);
            Ok(v)
        }
        IdentityId::T16Hk4k1 => t16_eval(id, x),
        IdentityId::T16Hk4k3 => t16_eval(id, x),
        IdentityId::R1k => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let v = 2.0 * x / (3.0 - 2.0 * x) * sqrt_ratio(x) * q
                + x * (1.0 - x).ln() / (3.0 - 2.0 * x);
            Ok(C64::new(v, 0.0))
        }
        IdentityId::RH2kH3k => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let v = C64::new(x / (3.0 - 2.0 * x), 0.0) * li2(C64::new(x, 0.0))?
                + C64::new(x / (3.0 - 2.0 * x) * sqrt_ratio(x), 0.0) * i_dilog_diff(x)?
                + C64::new(
                    (1.0 - x) / (3.0 - 2.0 * x) * (q * q / 3.0 - ll * ll / 4.0),
                    0.0,
                );
            Ok(v)
        }
        IdentityId::RHk1H2k => {
            check_c3_domain(id, x, true)?;
            let q = q_of(x)?;
            let ll = (1.0 - x).ln();
            let v = -(1.0 - x) * q * q / (3.0 - 2.0 * x)
                - x / (3.0 - 2.0 * x) * sqrt_ratio(x) * q * ll
                + (3.0 - x) * ll * ll / (4.0 * (3.0 - 2.0 * x));
            Ok(C64::new(v, 0.0))
        }
        IdentityId::EqKp1Half => {
            let v = 3.0 * LN_2 * LN_2 - PI * PI / 4.0 + (8.0 * PI - 21.0 * LN_2) / 5.0;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::EqKp183 => {
            let l3 = 3f64.ln();
            let v = (9.0 * l3 * l3 - 3.0 * PI * PI) / 16.0 + 11.0 * 3f64.sqrt() * PI / 14.0
                - 9.0 * l3 / 7.0;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::Eq4kKp1 => {
            let s3 = 3f64.sqrt();
            let l = ((s3 + 1.0) / (s3 - 1.0)).ln();
            let v = (20.0 * PI - 3.0 * PI * PI) / 8.0 - 7.0 / s3 * l + 1.5 * l * l;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::Ck2kKp2 => {
            if !(x > 0.25) {
                return Err(Error::Domain(format!("CK2K_KP2 needs X > 1/4, got {x}")));
            }
            let y = (1.0 / (4.0 * x - 1.0).sqrt()).atan();
            let v = 4.0 * x * (12.0 * x - 1.0) * y / (4.0 * x - 1.0).sqrt()
                - 24.0 * x * x * y * y
                - 6.0 * x;
            Ok(C64::new(v, 0.0))
        }
        IdentityId::ArcsinSq => {
            let a = (param / 2.0).asin();
            Ok(2.0 * a * a)
        }
        IdentityId::X2kK2C4 => {
            if !(x > 0.25) {
                return Err(Error::Domain(format!("X2K_K2_C4 needs X > 1/4, got {x}")));
            }
            let y = (1.0 / (4.0 * x - 1.0).sqrt()).atan();
            let w = (1.0 / (4.0 * x + 1.0).sqrt()).atanh();
            Ok(C64::new(4.0 * y * y - 4.0 * w * w, 0.0))
        }
        IdentityId::LoglogTau => {
            let tau = param;
            if tau.im == 0.0 && (-1.0..=0.0).contains(&tau.re) {
                return Err(Error::Domain("LOGLOG_TAU needs τ off [-1, 0]".into()));
            }
            let lt = tau.ln();
            let l1t = (one + tau).ln();
            Ok(l1t * l1t / 2.0 + lt * lt / 2.0 - lt * l1t)
        }
        IdentityId::NewmanSum => {
            check_c3_domain(id, x, true)?;
            let (tp, tm) = tau_pm(x)?;
            let a = (one - C64::new(x, 0.0)).ln();
            let b = (one + tp.inv()).ln();
            let c = (one + tm.inv()).ln();
            Ok(-(a * a + b * b + c * c) / 6.0)
        }
        IdentityId::Landen => {
            if param.im == 0.0 && param.re >= 1.0 {
                return Err(Error::BranchCut(param));
            }
            let l = (one - param).ln();
            Ok(-l * l / 2.0)
        }
    }
}

/// Assemble a Theorem-1.6(b) right-hand side from GPLs over the four ξ
/// letters at argument 1: 16 `gpl_eval` calls for the (4k+1) display, 32 for
/// the (4k+3) display.
fn t16_eval(id: IdentityId, x: f64) -> Result<C64> {
    if (4.0 * x * (1.0 - x)).abs() <= 1.0 {
        return Err(Error::Domain(format!(
            "{} needs |4x(1-x)| > 1, got x = {x}",
            id.tag()
        )));
    }
    let xc = C64::new(x, 0.0);
    let one = C64::new(1.0, 0.0);
    let mut letters = Vec::with_capacity(4);
    for l in 0..2u8 {
        for m in 0..2u8 {
            let v = xi(l, m, xc)?;
            // letters must sit clear of the integration path [0, 1]
            let s = v.re.clamp(0.0, 1.0);
            let dist = (v - C64::new(s, 0.0)).norm();
            if dist < 1e-6 {
                return Err(Error::LetterOnPath(v));
            }
            letters.push(((l, m), v));
        }
    }
    let sx = sqrt_principal(xc);
    let s1x = sqrt_principal(one - xc);
    let sqxx = sqrt_principal((one - xc) * xc);
    let sign = |b: u8| if b == 0 { 1.0 } else { -1.0 };

    let g_at = |a: C64, b: C64| -> Result<C64> {
        Ok(gpl_eval(&GplWord::new(vec![a, b], one), 1e-11)?.value)
    };

    // Σ coefficient(ℓ,m) · G(ξ_{ℓ,m}, ξ_{ℓ',m'}; 1) with the (4k+1) weights
    let sum_with = |coef: &dyn Fn(u8, u8, C64) -> C64| -> Result<C64> {
        let mut acc = C64::new(0.0, 0.0);
        for &((l, m), v) in &letters {
            let c = coef(l, m, v);
            for &(_, w) in &letters {
                acc += c * g_at(v, w)?;
            }
        }
        Ok(acc)
    };

    let coef_4k1 = move |l: u8, m: u8, _v: C64| -> C64 {
        -sqxx * (sign(l) * s1x - sign(m) * sx) / (4.0 * (2.0 * x - 1.0))
    };
    match id {
        IdentityId::T16Hk4k1 => sum_with(&coef_4k1),
        IdentityId::T16Hk4k3 => {
            let first = sum_with(&|l, m, _v| {
                let den = sign(l) * s1x + sign(m) * sx
                    - 2.0 * sqxx
                    - C64::new(sign(l) * sign(m), 0.0);
                2.0 * ((one - xc) * xc) * sqxx / den
            })?;
            let second = sum_with(&|l, m, v| -coef_4k1(l, m, v))?;
            Ok(first + second)
        }
        _ => unreachable!(),
    }
}

/// Finite-difference check of the derivative relation: applying
/// `x(1−x)/(3−2x)·d/dx` to the k²-power sum reproduces the k¹-power sum.
/// Returns the discrepancy.
pub fn deriv_relation_check(x: f64, step: f64) -> Result<f64> {
    if !(x > -3.0 + step && x < c_const() - step) || x == 0.0 {
        return Err(Error::Domain(format!(
            "deriv_relation_check needs x in (-3, c) minus 0, got {x}"
        )));
    }
    let weight2 = |xx: f64| -> Result<f64> {
        let spec = SumSpec::c3_plain(1, C64::new(z3_of_x(xx), 0.0));
        Ok(sum_family(&spec, 1e-13)?.value.re)
    };
    let fd = (weight2(x + step)? - weight2(x - step)?) / (2.0 * step);
    let scaled = x * (1.0 - x) / (3.0 - 2.0 * x) * fd;
    let direct = sum_family(&SumSpec::c3_plain(0, C64::new(z3_of_x(x), 0.0)), 1e-13)?
        .value
        .re;
    Ok((scaled - direct).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn thm12_special_points() {
        let v = closed_eval(IdentityId::Thm12, re(-1.0)).unwrap();
        let want = PI * PI / 24.0 - LN_2 * LN_2 / 2.0;
        assert!((v.re - want).abs() < 1e-15);
        // x = -2: q = -π/2, 1-x = 3
        let v = closed_eval(IdentityId::Thm12, re(-2.0)).unwrap();
        let want = PI * PI / 6.0 - 3f64.ln().powi(2) / 2.0;
        assert!((v.re - want).abs() < 1e-15);
        assert!((v.re - 1.04145958644193544755052560472).abs() < 1e-14);
    }

    #[test]
    fn thm11_finite_on_grid() {
        let mut x: f64 = -2.9;
        while x <= 0.85 {
            if x.abs() > 1e-9 {
                let v = closed_eval(IdentityId::Thm11, re(x)).unwrap();
                assert!(v.re.is_finite() && v.im.abs() < 1e-12, "x = {x}");
            }
            x += 0.05;
        }
    }

    #[test]
    fn constants_against_reference() {
        let v = closed_eval(IdentityId::EqKp1Half, re(0.0)).unwrap();
        assert!((v.re - 1.08928802887416350128053933213).abs() < 1e-14);
        let v = closed_eval(IdentityId::EqKp183, re(0.0)).unwrap();
        assert!((v.re - 1.6912406669459093803978135688).abs() < 1e-14);
        let v = closed_eval(IdentityId::Eq4kKp1, re(0.0)).unwrap();
        assert!((v.re - 1.43202516286830340698840173727).abs() < 1e-14);
        // the §1 display equals THM13A at X = 1/2
        let t = closed_eval(IdentityId::Thm13a, re(0.5)).unwrap();
        assert!((v.re - t.re).abs() < 1e-13);
    }

    #[test]
    fn thm13b_thm14_symmetry() {
        for x in [1.3, 1.5, 2.0, 3.0] {
            for id in [IdentityId::Thm13b, IdentityId::Thm14] {
                let a = closed_eval(id, re(x)).unwrap();
                let b = closed_eval(id, re(1.0 - x)).unwrap();
                assert!((a - b).norm() < 1e-12, "{:?} at {x}", id);
                assert!(a.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn x2k_value_at_one() {
        let v = closed_eval(IdentityId::X2kK2C4, re(1.0)).unwrap();
        // = π²/9 − 4 log²φ
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let want = PI * PI / 9.0 - 4.0 * phi.ln().powi(2);
        assert!((v.re - want).abs() < 1e-14);
        assert!((v.re - 0.170363428923373387660560492838).abs() < 1e-14);
    }

    #[test]
    fn loglog_at_two() {
        let v = closed_eval(IdentityId::LoglogTau, re(2.0)).unwrap();
        assert!((v.re - 0.0822009769465827148263181082516).abs() < 1e-15);
    }

    #[test]
    fn landen_plugin() {
        let v = closed_eval(IdentityId::Landen, re(0.3)).unwrap();
        assert!((v.re + 0.7f64.ln().powi(2) / 2.0).abs() < 1e-15);
        assert!(closed_eval(IdentityId::Landen, re(1.2)).is_err());
    }

    #[test]
    fn domains_enforced() {
        assert!(closed_eval(IdentityId::Thm12, re(0.95)).is_err());
        assert!(closed_eval(IdentityId::Thm11, re(0.0)).is_err());
        assert!(closed_eval(IdentityId::Thm13a, re(0.2)).is_err());
        assert!(closed_eval(IdentityId::Thm13b, re(0.7)).is_err());
        assert!(closed_eval(IdentityId::T16Hk4k1, re(0.5)).is_err());
    }

    #[test]
    fn t16_at_two_real_and_matches_series() {
        // frozen direct-sum values of the two series at z = -2
        let r1 = closed_eval(IdentityId::T16Hk4k1, re(2.0)).unwrap();
        assert!(r1.im.abs() < 1e-9, "im {}", r1.im);
        assert!((r1.re + 0.05822827213557763).abs() < 1e-9, "{}", r1.re);
        let r3 = closed_eval(IdentityId::T16Hk4k3, re(2.0)).unwrap();
        assert!(r3.im.abs() < 1e-9);
        assert!((r3.re + 0.04076400944769996).abs() < 1e-9, "{}", r3.re);
    }

    #[test]
    fn deriv_relation_two_points() {
        assert!(deriv_relation_check(-1.0, 1e-5).unwrap() < 1e-7);
        assert!(deriv_relation_check(0.5, 1e-5).unwrap() < 1e-7);
    }
}
