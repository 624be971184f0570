//! Numerical invariants of a 1-form relative to a pair of hypersurface germs,
//! and checkers for the identities relating them.
//!
//! The free functions compute one invariant each from scratch. [`CaseContext`]
//! evaluates many invariants of one case and shares the intermediate modules
//! between them; the verifiers in [`verify`] work on a context.

mod context;
pub mod verify;

pub use context::{CaseContext, CaseInput};
pub use verify::{
    verify_cor_5_4, verify_equality_conditions, verify_prop_5_1, verify_theorem_a, Cor54Report, EqualityReport,
    Prop51Report, Ratio, TheoremAReport,
};

use crate::algebra::{OneForm, Polynomial};
use crate::logder::{LogderError, Variety};
use crate::sb::{Dimension, ModuleError};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A hypothesis of an identity or invariant that the input fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    /// `V` must be invariant by `ω`; carries a 2x2 minor of `(ω; df)` outside `⟨f⟩`.
    VInvariant { minor: Polynomial },
    /// `X` must not be invariant by `ω`.
    XNotInvariant,
    /// `ω` must have an isolated singularity.
    FormIsolated,
    /// `V` must have an isolated singularity.
    VIsolated,
    /// `X` must have an isolated singularity.
    XIsolated,
    /// `μ_BR(ω, X)` must be finite.
    MuBrFinite,
    /// `τ_BR(ω, X, V)` must be finite and nonzero.
    TauBrPositive,
    /// The invariant is only defined in the plane.
    Plane { nvars: usize },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::VInvariant { minor } => {
                write!(f, "V is not invariant by omega: the minor {minor} is not in <f>")
            }
            Hypothesis::XNotInvariant => f.write_str("X is invariant by omega"),
            Hypothesis::FormIsolated => f.write_str("omega does not have an isolated singularity (mu_0 is infinite)"),
            Hypothesis::VIsolated => f.write_str("V does not have an isolated singularity (tau_0(V) is infinite)"),
            Hypothesis::XIsolated => f.write_str("X does not have an isolated singularity (tau_0(X) is infinite)"),
            Hypothesis::MuBrFinite => f.write_str("mu_BR(omega, X) is infinite"),
            Hypothesis::TauBrPositive => f.write_str("tau_BR(omega, X, V) is infinite or zero"),
            Hypothesis::Plane { nvars } => write!(f, "defined only in 2 variables, the case has {nvars}"),
        }
    }
}

fn list(failures: &[Hypothesis]) -> String {
    failures.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("hypotheses not satisfied: {}", list(.0))]
    Hypotheses(Vec<Hypothesis>),
    #[error("internal inconsistency in {what}: {left} vs {right}")]
    Inconsistent {
        what: &'static str,
        left: Dimension,
        right: Dimension,
    },
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("{0} must vanish at the origin")]
    NotVanishing(&'static str),
    #[error(transparent)]
    Logder(#[from] LogderError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

impl InvariantError {
    pub fn hypothesis(h: Hypothesis) -> Self {
        InvariantError::Hypotheses(vec![h])
    }

    pub fn is_hypothesis_failure(&self) -> bool {
        matches!(self, InvariantError::Hypotheses(_))
    }
}

/// Outcome of the search for the least `r` with `f^r ∈ ω(Θ_X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rf {
    Found(u32),
    /// No `r <= cap` works; the true value is at least `at_least = cap + 1`.
    NotFound { at_least: u32 },
}

impl Rf {
    pub fn not_found(cap: u32) -> Self {
        Rf::NotFound { at_least: cap + 1 }
    }

    pub fn found(self) -> Option<u32> {
        match self {
            Rf::Found(r) => Some(r),
            Rf::NotFound { .. } => None,
        }
    }
}

impl fmt::Display for Rf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rf::Found(r) => write!(f, "{r}"),
            Rf::NotFound { at_least } => write!(f, ">= {at_least}"),
        }
    }
}

/// An invariant computed along two independent routes that must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoRoutes {
    pub direct: Dimension,
    /// `None` when the second route is undefined, e.g. outside its hypotheses
    /// or because an intermediate term is infinite.
    pub indirect: Option<Dimension>,
}

impl TwoRoutes {
    pub fn agree(&self) -> bool {
        self.indirect.is_none_or(|d| d == self.direct)
    }

    fn checked(self, what: &'static str) -> Result<Self, InvariantError> {
        match self.indirect {
            Some(d) if d != self.direct => Err(InvariantError::Inconsistent {
                what,
                left: self.direct,
                right: d,
            }),
            _ => Ok(self),
        }
    }
}

/// `a - b` for finite dimensions with `a >= b`.
pub(crate) fn difference(a: Dimension, b: Dimension) -> Option<Dimension> {
    match (a, b) {
        (Dimension::Finite(a), Dimension::Finite(b)) if a >= b => Some(Dimension::Finite(a - b)),
        _ => None,
    }
}

pub(crate) fn signed(d: Dimension) -> Option<i64> {
    d.finite().and_then(|v| i64::try_from(v).ok())
}

fn context(omega: &OneForm, phi: &Polynomial, f: &Polynomial) -> Result<CaseContext, InvariantError> {
    Ok(CaseContext::new(CaseInput::new(omega.clone(), phi.clone(), f.clone())?))
}

fn pair_context(omega: &OneForm, phi: &Polynomial) -> Result<CaseContext, InvariantError> {
    CaseContext::pair(omega.clone(), phi.clone())
}

/// `μ_0(ω)`, the colength of the coefficient ideal `⟨A_1, ..., A_n⟩`.
pub fn milnor_number(omega: &OneForm) -> Dimension {
    context::coefficient_ideal(omega).colength()
}

/// `τ_0(V) = dim O / ⟨f, ∂f/∂x_1, ..., ∂f/∂x_n⟩`.
pub fn tjurina_hypersurface(f: &Polynomial) -> Dimension {
    context::tjurina_ideal(f).colength()
}

/// `τ_0(ω, V) = dim O / ⟨A_1, ..., A_n, f⟩`, for `V` invariant by `ω`.
pub fn tjurina_form(omega: &OneForm, f: &Polynomial) -> Result<Dimension, InvariantError> {
    context::check_ring(omega, f)?;
    context::require_invariant(omega, f)?;
    Ok(context::form_tjurina_ideal(omega, f).colength())
}

/// `μ_BR(ω, X) = dim O / ω(Θ_X)`.
pub fn mu_br(omega: &OneForm, x: &Variety) -> Result<Dimension, InvariantError> {
    let theta = crate::logder::theta_x(x)?;
    Ok(crate::logder::apply_form(omega, &theta)?.colength())
}

/// `τ_BR(ω, X, V) = dim O / (ω(Θ_X) + ⟨f⟩)`.
pub fn tau_br(omega: &OneForm, phi: &Polynomial, f: &Polynomial) -> Result<Dimension, InvariantError> {
    context(omega, phi, f)?.tau_br()
}

/// `Ind_GSV(ω; X, 0) = dim O / (I_X + I_{k+1}(ω; dφ))`, for `X` not invariant.
pub fn gsv_index(omega: &OneForm, x: &Variety) -> Result<Dimension, InvariantError> {
    context::gsv_ideal(omega, x, None).map(|i| i.colength())
}

/// `Ind_GSV(ω; X, V, 0) = dim O / (I_X + I_{k+1}(ω; dφ) + ⟨f⟩)`.
pub fn gsv_index_pair(omega: &OneForm, phi: &Polynomial, f: &Polynomial) -> Result<Dimension, InvariantError> {
    context(omega, phi, f)?.gsv_pair()
}

/// `τ_0(X)`: classically, and as `dim ω(Θ_X) / ω(Θ_X^T)` when `μ_BR` is finite.
pub fn tau0_x(omega: &OneForm, phi: &Polynomial) -> Result<TwoRoutes, InvariantError> {
    pair_context(omega, phi)?.tau0_x()
}

/// `dim (ω(Θ_X) ∩ I_V) / (ω(Θ_X^T) ∩ I_V)`, directly and through the exact
/// sequence relating it to `τ_0(X)` and the quotients by `I_V`.
pub fn intersection_quotient_dim(
    omega: &OneForm,
    phi: &Polynomial,
    f: &Polynomial,
) -> Result<TwoRoutes, InvariantError> {
    context(omega, phi, f)?.intersection_quotient()
}

/// `μ̄_X(ω) = dim Θ_n / (Θ_X + H_ω)`, directly and as `μ_BR - μ_0`.
pub fn mubar(omega: &OneForm, phi: &Polynomial) -> Result<TwoRoutes, InvariantError> {
    pair_context(omega, phi)?.mubar()
}

/// `τ̄_X(ω, V) = dim Θ_n / (Θ_X + Θ_V^ω)`, directly and as `τ_BR - τ_0(ω, V)`.
pub fn taubar(omega: &OneForm, phi: &Polynomial, f: &Polynomial) -> Result<TwoRoutes, InvariantError> {
    context(omega, phi, f)?.taubar()
}

/// The least `r <= cap` with `f^r ∈ ω(Θ_X)`.
pub fn rf(omega: &OneForm, phi: &Polynomial, f: &Polynomial, cap: u32) -> Result<Rf, InvariantError> {
    let mut ctx = context(omega, phi, f)?;
    ctx.set_rf_cap(cap);
    ctx.rf()
}

/// `GSV_0(F, V) = τ_0(ω, V) - τ_0(V)` for a foliation of the plane.
pub fn gsv_foliation(omega: &OneForm, f: &Polynomial) -> Result<i64, InvariantError> {
    if f.nvars() != 2 {
        return Err(InvariantError::hypothesis(Hypothesis::Plane { nvars: f.nvars() }));
    }
    let a = tjurina_form(omega, f)?;
    let b = tjurina_hypersurface(f);
    match (signed(a), signed(b)) {
        (Some(a), Some(b)) => Ok(a - b),
        (None, _) => Err(InvariantError::hypothesis(Hypothesis::FormIsolated)),
        (_, None) => Err(InvariantError::hypothesis(Hypothesis::VIsolated)),
    }
}

#[cfg(test)]
mod tests;
