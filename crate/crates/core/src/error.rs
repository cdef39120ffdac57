//! Error type shared by all modules.

use crate::C64;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Requested quadrature tolerance unreachable within the node budget.
    /// Loosen the tolerance or split the integration path.
    #[error("quadrature did not converge: requested {requested:.3e}, achieved {achieved:.3e}")]
    NonConverged { requested: f64, achieved: f64 },

    /// Power-law tail with exponent ≥ −1 is not summable.
    #[error("tail model unbounded: power exponent {exponent} >= -1")]
    TailUnbounded { exponent: f64 },

    /// Series summation hit the term cap before the tail bound met tolerance.
    #[error("series budget of {budget} terms exceeded")]
    BudgetExceeded { budget: u64 },

    /// Successive Levin extrapolation orders diverge.
    #[error("sequence acceleration unstable")]
    Unstable,

    /// Root bracket does not change sign.
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Argument outside the declared domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// `Li_n` argument on the branch cut (1, ∞).
    #[error("argument {0} lies on the branch cut (1, inf)")]
    BranchCut(C64),

    /// GPL word diverges (first letter equals the argument, or trailing zero).
    #[error("divergent word: {0}")]
    DivergentWord(String),

    /// A letter lies within 1e-9 of the open integration segment (0, z).
    #[error("letter {0} lies on the integration path")]
    LetterOnPath(C64),

    /// MPL argument outside the absolute-convergence region.
    #[error("nested series not absolutely convergent")]
    NotAbsConvergent,

    /// Malformed CLI/spec input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Invalid suite configuration.
    #[error("invalid config: {0}")]
    ConfigInvalid(String),
}
