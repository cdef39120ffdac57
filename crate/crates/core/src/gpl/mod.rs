//! Generalized polylogarithms `G(a₁,…,aₙ; z)`, shuffle products, and
//! multiple polylogarithms via the MPL–GPL correspondence.
//!
//! Evaluation follows the defining recursion along the straight path from 0
//! to z: each level builds an adaptive piecewise-Chebyshev interpolant of the
//! next-inner GPL restricted to the path and integrates it against the letter
//! kernel `z/(z·s − a)`. Cost is linear in the weight rather than exponential.
//! Letters equal to the argument (allowed past the first position) produce
//! integrable `log^m(1−t)` endpoint behavior; the partition is graded
//! dyadically toward t = 1 in that case.
//!
//! An evaluation builds interpolant state local to the call; everything here
//! is thread-safe with no global caches.

mod cheb;

use crate::numkit::{max_terms, EvalResult, Method};
use crate::{C64, Error, Result};
use cheb::NFIT;

/// A GPL word: letters (length = weight) and evaluation argument.
#[derive(Debug, Clone, PartialEq)]
pub struct GplWord {
    pub letters: Vec<C64>,
    pub z: C64,
}

impl GplWord {
    pub fn new(letters: Vec<C64>, z: C64) -> Self {
        GplWord { letters, z }
    }

    /// Weight-n word of zeros: G(0,…,0; z) = logⁿ(z)/n!.
    pub fn zeros(n: usize, z: C64) -> Self {
        GplWord { letters: vec![C64::new(0.0, 0.0); n], z }
    }
}

/// A multiple polylogarithm specification `Li_{a₁,…,aₙ}(z₁,…,zₙ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MplSpec {
    pub depths: Vec<u32>,
    pub args: Vec<C64>,
}

impl MplSpec {
    pub fn new(depths: Vec<u32>, args: Vec<C64>) -> Self {
        MplSpec { depths, args }
    }

    fn validate(&self) -> Result<()> {
        if self.depths.is_empty() || self.depths.len() != self.args.len() {
            return Err(Error::Domain(
                "MPL spec needs matching nonempty depth/argument lists".into(),
            ));
        }
        if self.depths.iter().any(|&a| a == 0) {
            return Err(Error::Domain("MPL depths must be positive".into()));
        }
        if self.args.iter().any(|z| z.norm() == 0.0) {
            return Err(Error::Domain("MPL arguments must be nonzero".into()));
        }
        if self.depths[0] == 1 && (self.args[0] - C64::new(1.0, 0.0)).norm() < 1e-14 {
            return Err(Error::Domain("(a1, z1) = (1, 1) diverges".into()));
        }
        Ok(())
    }
}

// equality threshold for "letter coincides with the argument"
fn close_to(a: C64, b: C64, scale: f64) -> bool {
    (a - b).norm() <= 1e-12 * scale.max(1.0)
}

/// Distance from w to the open segment (0, z), with a small exclusion zone
/// around the endpoint z (endpoint letters are legal and handled separately).
fn segment_distance(w: C64, z: C64) -> f64 {
    let zz = z.norm_sqr();
    if zz == 0.0 {
        return w.norm();
    }
    let s = (w * z.conj()).re / zz;
    let s = s.clamp(0.0, 1.0);
    (w - s * z).norm()
}

const ON_PATH_TOL: f64 = 1e-9;

enum WordShape {
    Empty,
    PureZeros(usize),
    General,
}

fn classify(word: &GplWord) -> Result<WordShape> {
    let n = word.letters.len();
    if n == 0 {
        return Ok(WordShape::Empty);
    }
    let zero = C64::new(0.0, 0.0);
    if word.letters.iter().all(|&a| a == zero) {
        return Ok(WordShape::PureZeros(n));
    }
    if *word.letters.last().unwrap() == zero {
        return Err(Error::DivergentWord(
            "trailing zero letter in a mixed word".into(),
        ));
    }
    let scale = word.z.norm();
    if close_to(word.letters[0], word.z, scale) {
        return Err(Error::DivergentWord("first letter equals the argument".into()));
    }
    for &a in &word.letters {
        if a == zero || close_to(a, word.z, scale) {
            continue;
        }
        if segment_distance(a, word.z) < ON_PATH_TOL {
            return Err(Error::LetterOnPath(a));
        }
    }
    Ok(WordShape::General)
}

// ---------------------------------------------------------------------------
// piecewise-Chebyshev path functions
// ---------------------------------------------------------------------------

struct Piece {
    a: f64,
    b: f64,
    coef: Vec<C64>,
}

struct PathFn {
    pieces: Vec<Piece>,
}

impl PathFn {
    fn locate(&self, t: f64) -> &Piece {
        let mut lo = 0usize;
        let mut hi = self.pieces.len() - 1;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if t > self.pieces[mid].b {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        &self.pieces[lo]
    }

    fn eval(&self, t: f64) -> C64 {
        let p = self.locate(t);
        let x = (2.0 * (t - p.a) / (p.b - p.a) - 1.0).clamp(-1.0, 1.0);
        cheb::eval(&p.coef, x)
    }

    /// d/dt at t, for the letter-0 integrand limit at the origin.
    fn deriv(&self, t: f64) -> C64 {
        let p = self.locate(t);
        let x = (2.0 * (t - p.a) / (p.b - p.a) - 1.0).clamp(-1.0, 1.0);
        cheb::deriv_at(&p.coef, x) * 2.0 / (p.b - p.a)
    }

    fn cuts(&self) -> Vec<f64> {
        let mut c: Vec<f64> = self.pieces.iter().map(|p| p.a).collect();
        c.push(self.pieces.last().unwrap().b);
        c
    }
}

const MAX_PIECES: usize = 6000;
const TAIL_COEFFS: usize = 3;

/// Adaptively fit `g` on the partition `cuts`, splitting until the Chebyshev
/// tail is resolved. Returns (a, b, coeffs, tail) tuples sorted by a, plus
/// the evaluation count.
fn adaptive_fit<F: FnMut(f64) -> C64>(
    mut g: F,
    cuts: &[f64],
    rel_tol: f64,
) -> Result<(Vec<(f64, f64, Vec<C64>, f64)>, u64)> {
    let nodes = cheb::nodes();
    let mut work: Vec<(f64, f64)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    let mut done = Vec::new();
    let mut evals: u64 = 0;
    let mut scale = 1e-300f64;
    while let Some((a, b)) = work.pop() {
        let mut vals = [C64::new(0.0, 0.0); NFIT + 1];
        for (k, &u) in nodes.iter().enumerate() {
            vals[k] = g(a + (u + 1.0) * 0.5 * (b - a));
        }
        evals += (NFIT + 1) as u64;
        let c = cheb::fit(&vals);
        let pscale = c.iter().map(|x| x.norm()).fold(0.0, f64::max);
        scale = scale.max(pscale);
        let tail = c[c.len() - TAIL_COEFFS..]
            .iter()
            .map(|x| x.norm())
            .fold(0.0, f64::max);
        // Accept on resolved coefficients, or when the piece's possible
        // integral-error contribution is negligible (rescues near-0 pieces
        // whose point values sit at the eval-noise floor), or at width floor.
        let thresh = (rel_tol * scale).max(30.0 * f64::EPSILON * pscale);
        if tail <= thresh
            || tail * (b - a) <= 0.03 * rel_tol * scale
            || (b - a) < 4e-15 * b.abs().max(1.0)
        {
            done.push((a, b, c, tail));
        } else {
            let mid = 0.5 * (a + b);
            work.push((a, mid));
            work.push((mid, b));
        }
        if done.len() + work.len() > MAX_PIECES {
            return Err(Error::NonConverged {
                requested: rel_tol,
                achieved: tail,
            });
        }
    }
    done.sort_by(|p, q| p.0.total_cmp(&q.0));
    Ok((done, evals))
}

/// Build F_j from F_{j+1}: F_j(t) = ∫₀ᵗ z·F_{j+1}(s)/(z·s − a_j) ds.
/// Returns the new level, its value at the partition end, evaluations, and
/// an accumulated interpolation-error estimate.
fn integrate_level(
    inner: &PathFn,
    letter: C64,
    z: C64,
    rel_tol: f64,
) -> Result<(PathFn, C64, u64, f64)> {
    let zero_letter = letter == C64::new(0.0, 0.0);
    let g = |s: f64| -> C64 {
        if zero_letter {
            if s == 0.0 {
                inner.deriv(0.0)
            } else {
                inner.eval(s) / s
            }
        } else {
            z * inner.eval(s) / (z * s - letter)
        }
    };
    let (fitted, evals) = adaptive_fit(g, &inner.cuts(), rel_tol)?;
    let mut pieces = Vec::with_capacity(fitted.len());
    let mut acc = C64::new(0.0, 0.0);
    let mut err = 0.0;
    for (a, b, c, tail) in fitted {
        let half = (b - a) * 0.5;
        let mut anti = cheb::antiderivative(&c);
        for coef in anti.iter_mut() {
            *coef *= half;
        }
        anti[0] += acc;
        // value at the right edge: T_k(1) = 1
        acc = anti.iter().sum();
        err += tail * (b - a);
        pieces.push(Piece { a, b, coef: anti });
    }
    Ok((PathFn { pieces }, acc, evals, err))
}

const END_DELTA: f64 = 3.552713678800501e-15; // 2^-48

/// Evaluate a GPL word to absolute tolerance `tol` (best effort; the returned
/// `abs_err` reflects the achieved interpolation and truncation estimates).
pub fn gpl_eval(word: &GplWord, tol: f64) -> Result<EvalResult> {
    match classify(word)? {
        WordShape::Empty => return Ok(EvalResult::closed(C64::new(1.0, 0.0))),
        WordShape::PureZeros(n) => {
            if word.z.norm() == 0.0 {
                return Err(Error::Domain("log of zero argument".into()));
            }
            let mut v = word.z.ln().powu(n as u32);
            for k in 2..=n as u32 {
                v /= k as f64;
            }
            return Ok(EvalResult::closed(v));
        }
        WordShape::General => {}
    }
    let z = word.z;
    if z.norm() == 0.0 {
        // ∫ from 0 to 0 of a convergent word
        return Ok(EvalResult::closed(C64::new(0.0, 0.0)));
    }
    let n = word.letters.len();
    let scale = z.norm();
    let a_last = *word.letters.last().unwrap();
    if n == 1 {
        let v = (C64::new(1.0, 0.0) - z / a_last).ln();
        return Ok(EvalResult::closed(v));
    }

    let sing = word.letters[1..].iter().any(|&a| close_to(a, z, scale));
    let mut cuts = vec![0.0, 0.25, 0.5, 0.75];
    if sing {
        let mut h = 0.25f64;
        while h > END_DELTA {
            cuts.push(1.0 - h);
            h *= 0.5;
        }
        cuts.push(1.0 - END_DELTA);
    } else {
        cuts.push(1.0);
    }

    let rel_tol = (tol * 1e-2).clamp(1e-15, 1e-8);
    let mut total_evals: u64 = 0;
    let mut total_err = 0.0;

    // innermost level from the closed form
    let (fitted, evals) = adaptive_fit(
        |t| (C64::new(1.0, 0.0) - z * t / a_last).ln(),
        &cuts,
        rel_tol,
    )?;
    total_evals += evals;
    let mut level = PathFn {
        pieces: fitted
            .into_iter()
            .map(|(a, b, coef, _)| Piece { a, b, coef })
            .collect(),
    };

    let mut value = C64::new(0.0, 0.0);
    for j in (0..n - 1).rev() {
        let (next, val, evals, err) = integrate_level(&level, word.letters[j], z, rel_tol)?;
        total_evals += evals;
        total_err += err;
        level = next;
        value = val;
    }

    if sing {
        // integral over the dropped sliver [1-δ, 1): extrapolate with the
        // increment over the preceding dyadic cell of equal width
        let inc = level.eval(1.0 - END_DELTA) - level.eval(1.0 - 2.0 * END_DELTA);
        value += inc;
        total_err += 2.0 * inc.norm();
    }
    Ok(EvalResult::new(
        value,
        total_err + 1e-15 * (1.0 + value.norm()),
        total_evals,
        Method::Quad,
    ))
}

/// The r+1 interleavings of a single letter α into a word β₁…β_r, i.e. the
/// right-hand side of `G(α;t)·G(β₁,…,β_r;t) = Σ G(shuffle;t)`.
pub fn shuffle_expand(alpha: C64, word: &[C64]) -> Vec<Vec<C64>> {
    let r = word.len();
    let mut out = Vec::with_capacity(r + 1);
    for pos in 0..=r {
        let mut w = Vec::with_capacity(r + 1);
        w.extend_from_slice(&word[..pos]);
        w.push(alpha);
        w.extend_from_slice(&word[pos..]);
        out.push(w);
    }
    out
}

/// GPL word of an MPL per the correspondence
/// `Li_{a₁..aₙ}(z₁..zₙ) = (−1)ⁿ G(0^{a₁−1}, 1/z₁, …, 0^{aₙ−1}, 1/(z₁⋯zₙ); 1)`.
pub fn mpl_word(spec: &MplSpec) -> Result<GplWord> {
    spec.validate()?;
    let mut letters = Vec::new();
    let mut prod = C64::new(1.0, 0.0);
    for (j, (&a, &zj)) in spec.depths.iter().zip(&spec.args).enumerate() {
        let _ = j;
        for _ in 1..a {
            letters.push(C64::new(0.0, 0.0));
        }
        prod *= zj;
        letters.push(prod.inv());
    }
    Ok(GplWord::new(letters, C64::new(1.0, 0.0)))
}

/// Evaluate an MPL through its GPL word.
pub fn mpl_eval(spec: &MplSpec, tol: f64) -> Result<EvalResult> {
    let word = mpl_word(spec)?;
    let sign = if spec.depths.len() % 2 == 0 { 1.0 } else { -1.0 };
    let r = gpl_eval(&word, tol)?;
    Ok(EvalResult::new(sign * r.value, r.abs_err, r.work, r.method))
}

/// Truncated nested-series oracle for MPLs inside the absolute-convergence
/// region (all partial argument products < 1 in modulus). Independent of the
/// GPL quadrature path.
pub fn mpl_series_oracle(spec: &MplSpec, max_steps: u64) -> Result<EvalResult> {
    spec.validate()?;
    let n = spec.depths.len();
    let mut gamma = 0.0f64;
    let mut prod = 1.0f64;
    for zj in &spec.args {
        prod *= zj.norm();
        gamma = gamma.max(prod);
    }
    if gamma >= 1.0 - 1e-12 {
        return Err(Error::NotAbsConvergent);
    }
    let cap = max_steps.min(max_terms());
    // inner prefix sums I_j(l) = Σ_{m<l} z_j^m/m^{a_j} · I_{j+1}(m); update
    // outermost first so each step uses the previous inner values.
    let mut prefix = vec![C64::new(0.0, 0.0); n];
    let mut powers = vec![C64::new(1.0, 0.0); n];
    let ratio = (1.0 + gamma) / 2.0;
    let mut bound = f64::INFINITY;
    let mut work = 0u64;
    for l in 1..=cap {
        let lf = l as f64;
        work = l;
        let mut incs = vec![C64::new(0.0, 0.0); n];
        for j in 0..n {
            powers[j] *= spec.args[j];
            let w = powers[j] / lf.powi(spec.depths[j] as i32);
            incs[j] = if j + 1 < n { w * prefix[j + 1] } else { w };
        }
        for j in 0..n {
            prefix[j] += incs[j];
        }
        bound = incs[0].norm() * ratio / (1.0 - ratio);
        if bound < 1e-16 * prefix[0].norm().max(1e-12) && l > 8 {
            break;
        }
    }
    Ok(EvalResult::new(
        prefix[0],
        bound + f64::EPSILON * prefix[0].norm(),
        work,
        Method::Direct,
    ))
}
