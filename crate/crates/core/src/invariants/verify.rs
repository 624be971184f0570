//! Checkers for the identities between the invariants. Every term is
//! computed independently; a checker reports residuals rather than deciding
//! pass or fail itself, except that unmet hypotheses are returned as errors.

use super::{signed, CaseContext, Hypothesis, InvariantError, Rf};
use crate::sb::Dimension;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// The decomposition
/// `τ_BR(ω,X,V) = Ind_GSV(ω;X,V,0) + τ_0(ω,V) − τ_0(X) + dim (ω(Θ_X)∩I_V)/(ω(Θ_X^T)∩I_V)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAReport {
    pub tau_br: Dimension,
    pub gsv_pair: Dimension,
    pub tau0_form: Dimension,
    pub tau0_x: Dimension,
    pub intersection_quotient_dim: Dimension,
    /// `lhs - rhs`, or `None` when a term is infinite.
    pub residual: Option<i64>,
}

impl TheoremAReport {
    pub fn passed(&self) -> bool {
        self.residual == Some(0)
    }
}

/// `μ_BR = μ_0 + μ̄_X` and `τ_BR = τ_0(ω,V) + τ̄_X`, with `μ̄` and `τ̄`
/// computed directly from their modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop51Report {
    pub mu_br: Dimension,
    pub mu0: Dimension,
    pub mubar: Dimension,
    pub tau_br: Dimension,
    pub tau0_form: Dimension,
    pub taubar: Dimension,
    pub residual_mu: Option<i64>,
    pub residual_tau: Option<i64>,
}

impl Prop51Report {
    pub fn passed(&self) -> bool {
        self.residual_mu == Some(0) && self.residual_tau == Some(0)
    }
}

/// Both sides of the characterization of `μ_BR = τ_BR`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub mu_br: Dimension,
    pub tau_br: Dimension,
    /// `μ_BR = τ_BR`.
    pub condition_1: bool,
    pub mu0_equals_tau0: bool,
    /// `Θ_V^ω = H_ω + Θ_X ∩ Θ_V^ω`.
    pub module_condition: bool,
    /// `μ_0 = τ_0(ω,V)` and the module condition.
    pub condition_2: bool,
    pub agree: bool,
}

impl EqualityReport {
    pub fn passed(&self) -> bool {
        self.agree
    }
}

/// An exact nonnegative fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

impl Ratio {
    /// The reduced fraction `a / b`; `b` must be nonzero.
    pub fn new(a: u64, b: u64) -> Self {
        assert!(b != 0, "zero denominator");
        let g = a.gcd(&b).max(1);
        Ratio {
            numerator: a / g,
            denominator: b / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// `μ_BR / τ_BR <= r_f(ω(Θ_X))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cor54Report {
    pub mu_br: u64,
    pub tau_br: u64,
    pub ratio: Ratio,
    pub rf: Rf,
    /// `None` when no `r` up to the cap was found, so the inequality is
    /// unverified rather than false.
    pub holds: Option<bool>,
}

impl Cor54Report {
    pub fn passed(&self) -> bool {
        self.holds == Some(true)
    }
}

fn residual(lhs: &[Dimension], rhs_plus: &[Dimension], rhs_minus: &[Dimension]) -> Option<i64> {
    let sum = |ds: &[Dimension]| ds.iter().map(|d| signed(*d)).sum::<Option<i64>>();
    Some(sum(lhs)? - sum(rhs_plus)? + sum(rhs_minus)?)
}

/// Collects the unmet hypotheses shared by the decomposition identities.
fn theorem_hypotheses(ctx: &CaseContext) -> Result<Vec<Hypothesis>, InvariantError> {
    let mut failures = Vec::new();
    if let Some(minor) = ctx.v_invariance_witness()? {
        failures.push(Hypothesis::VInvariant { minor: minor.clone() });
    }
    if ctx.x_invariant()? {
        failures.push(Hypothesis::XNotInvariant);
    }
    if !ctx.mu0().is_finite() {
        failures.push(Hypothesis::FormIsolated);
    }
    if !ctx.tau0_v().is_finite() {
        failures.push(Hypothesis::VIsolated);
    }
    if !ctx.tau0_x_classical().is_finite() {
        failures.push(Hypothesis::XIsolated);
    }
    Ok(failures)
}

pub fn verify_theorem_a(ctx: &CaseContext) -> Result<TheoremAReport, InvariantError> {
    let failures = theorem_hypotheses(ctx)?;
    if !failures.is_empty() {
        return Err(InvariantError::Hypotheses(failures));
    }
    let tau_br = ctx.tau_br()?;
    let gsv_pair = ctx.gsv_pair()?;
    let tau0_form = ctx.tau0_form()?;
    let tau0_x = ctx.tau0_x_classical();
    let inter = ctx.intersection_quotient()?.direct;
    Ok(TheoremAReport {
        tau_br,
        gsv_pair,
        tau0_form,
        tau0_x,
        intersection_quotient_dim: inter,
        residual: residual(&[tau_br], &[gsv_pair, tau0_form, inter], &[tau0_x]),
    })
}

pub fn verify_prop_5_1(ctx: &CaseContext) -> Result<Prop51Report, InvariantError> {
    let mut failures = Vec::new();
    if let Some(minor) = ctx.v_invariance_witness()? {
        failures.push(Hypothesis::VInvariant { minor: minor.clone() });
    }
    if !ctx.mu_br()?.is_finite() {
        failures.push(Hypothesis::MuBrFinite);
    }
    if !failures.is_empty() {
        return Err(InvariantError::Hypotheses(failures));
    }
    let mu_br = ctx.mu_br()?;
    let mu0 = ctx.mu0();
    let mubar = ctx.mubar()?.direct;
    let tau_br = ctx.tau_br()?;
    let tau0_form = ctx.tau0_form()?;
    let taubar = ctx.taubar()?.direct;
    Ok(Prop51Report {
        mu_br,
        mu0,
        mubar,
        tau_br,
        tau0_form,
        taubar,
        residual_mu: residual(&[mu_br], &[mu0, mubar], &[]),
        residual_tau: residual(&[tau_br], &[tau0_form, taubar], &[]),
    })
}

pub fn verify_equality_conditions(ctx: &CaseContext) -> Result<EqualityReport, InvariantError> {
    let mut failures = Vec::new();
    if let Some(minor) = ctx.v_invariance_witness()? {
        failures.push(Hypothesis::VInvariant { minor: minor.clone() });
    }
    if !ctx.mu_br()?.is_finite() {
        failures.push(Hypothesis::MuBrFinite);
    }
    if !failures.is_empty() {
        return Err(InvariantError::Hypotheses(failures));
    }
    let mu_br = ctx.mu_br()?;
    let tau_br = ctx.tau_br()?;
    let condition_1 = mu_br == tau_br;
    let mu0_equals_tau0 = ctx.mu0() == ctx.tau0_form()?;
    let module_condition = ctx.tangency_decomposition_holds()?;
    let condition_2 = mu0_equals_tau0 && module_condition;
    Ok(EqualityReport {
        mu_br,
        tau_br,
        condition_1,
        mu0_equals_tau0,
        module_condition,
        condition_2,
        agree: condition_1 == condition_2,
    })
}

pub fn verify_cor_5_4(ctx: &CaseContext) -> Result<Cor54Report, InvariantError> {
    let mu_br = ctx
        .mu_br()?
        .finite()
        .ok_or_else(|| InvariantError::hypothesis(Hypothesis::MuBrFinite))?;
    let tau_br = match ctx.tau_br()?.finite() {
        Some(t) if t > 0 => t,
        _ => return Err(InvariantError::hypothesis(Hypothesis::TauBrPositive)),
    };
    let rf = ctx.rf()?;
    let holds = rf
        .found()
        .map(|r| u128::from(mu_br) <= u128::from(r) * u128::from(tau_br));
    Ok(Cor54Report {
        mu_br,
        tau_br,
        ratio: Ratio::new(mu_br, tau_br),
        rf,
        holds,
    })
}
