use super::{difference, Hypothesis, InvariantError, Rf, TwoRoutes};
use crate::algebra::{OneForm, Polynomial};
use crate::logder::{apply_form, invariance_witness, theta_x, theta_x_trivial, VectorFieldModule, Variety};
use crate::order::{ModuleOrder, MonomialOrder};
use crate::sb::{
    colength, module_intersection, module_sum, subquotient_dim, syzygies_of, Dimension, FreeModuleElement,
    StandardBasis, SubmoduleGens,
};
use std::cell::OnceCell;

pub const DEFAULT_RF_CAP: u32 = 8;

/// The data of one case: a 1-form `ω`, the hypersurface `X = {φ = 0}` and
/// the hypersurface `V = {f = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInput {
    omega: OneForm,
    x: Variety,
    f: Polynomial,
}

impl CaseInput {
    pub fn new(omega: OneForm, phi: Polynomial, f: Polynomial) -> Result<Self, InvariantError> {
        let n = omega.nvars();
        for p in [&phi, &f] {
            if p.nvars() != n {
                return Err(InvariantError::RingMismatch {
                    expected: n,
                    found: p.nvars(),
                });
            }
        }
        if f.is_zero() || !f.vanishes_at_origin() {
            return Err(InvariantError::NotVanishing("f"));
        }
        let x = Variety::hypersurface(phi)?;
        Ok(CaseInput { omega, x, f })
    }

    pub fn omega(&self) -> &OneForm {
        &self.omega
    }

    pub fn variety(&self) -> &Variety {
        &self.x
    }

    pub fn phi(&self) -> &Polynomial {
        &self.x.equations()[0]
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn nvars(&self) -> usize {
        self.omega.nvars()
    }
}

pub(crate) fn check_ring(omega: &OneForm, p: &Polynomial) -> Result<(), InvariantError> {
    if omega.nvars() != p.nvars() {
        return Err(InvariantError::RingMismatch {
            expected: omega.nvars(),
            found: p.nvars(),
        });
    }
    Ok(())
}

fn ideal(nvars: usize, gens: Vec<Polynomial>) -> SubmoduleGens {
    SubmoduleGens::ideal(nvars, gens).expect("generators share a ring")
}

pub(crate) fn coefficient_ideal(omega: &OneForm) -> SubmoduleGens {
    ideal(omega.nvars(), omega.coefficients().to_vec())
}

pub(crate) fn tjurina_ideal(f: &Polynomial) -> SubmoduleGens {
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    ideal(f.nvars(), gens)
}

pub(crate) fn form_tjurina_ideal(omega: &OneForm, f: &Polynomial) -> SubmoduleGens {
    let mut gens = omega.coefficients().to_vec();
    gens.push(f.clone());
    ideal(f.nvars(), gens)
}

fn v_witness(omega: &OneForm, f: &Polynomial) -> Result<Option<Polynomial>, InvariantError> {
    Ok(invariance_witness(omega, &Variety::hypersurface(f.clone())?)?)
}

pub(crate) fn require_invariant(omega: &OneForm, f: &Polynomial) -> Result<(), InvariantError> {
    match v_witness(omega, f)? {
        Some(minor) => Err(InvariantError::hypothesis(Hypothesis::VInvariant { minor })),
        None => Ok(()),
    }
}

/// `I_X + I_{k+1}(ω; dφ)`, plus `⟨f⟩` when given.
pub(crate) fn gsv_ideal(
    omega: &OneForm,
    x: &Variety,
    f: Option<&Polynomial>,
) -> Result<SubmoduleGens, InvariantError> {
    if omega.nvars() != x.nvars() {
        return Err(InvariantError::RingMismatch {
            expected: x.nvars(),
            found: omega.nvars(),
        });
    }
    if invariance_witness(omega, x)?.is_none() {
        return Err(InvariantError::hypothesis(Hypothesis::XNotInvariant));
    }
    let k = x.codim();
    let mut gens = x.equations().to_vec();
    gens.extend(
        omega
            .stacked_with_jacobian(x.equations())
            .minors(k + 1)
            .expect("X is not invariant, so k + 1 <= n"),
    );
    gens.extend(f.cloned());
    Ok(ideal(x.nvars(), gens))
}

fn cached<T>(cell: &OnceCell<T>, init: impl FnOnce() -> Result<T, InvariantError>) -> Result<&T, InvariantError> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = init()?;
    Ok(cell.get_or_init(|| v))
}

/// Lazily evaluated invariants of one case. Intermediate modules such as
/// `Θ_X` and `ω(Θ_X)` are computed once and shared.
pub struct CaseContext {
    omega: OneForm,
    x: Variety,
    f: Option<Polynomial>,
    order: MonomialOrder,
    rf_cap: u32,
    v_witness: OnceCell<Option<Polynomial>>,
    x_invariant: OnceCell<bool>,
    theta: OnceCell<VectorFieldModule>,
    theta_trivial: OnceCell<VectorFieldModule>,
    omega_theta: OnceCell<SubmoduleGens>,
    omega_theta_std: OnceCell<StandardBasis>,
    omega_theta_trivial: OnceCell<SubmoduleGens>,
    h_omega: OnceCell<SubmoduleGens>,
    theta_v_omega: OnceCell<SubmoduleGens>,
    mu0: OnceCell<Dimension>,
    tau0_v: OnceCell<Dimension>,
    tau0_x_classical: OnceCell<Dimension>,
    mu_br: OnceCell<Dimension>,
    tau_br: OnceCell<Dimension>,
}

impl CaseContext {
    pub fn new(input: CaseInput) -> Self {
        Self::build(input.omega, input.x, Some(input.f))
    }

    /// A context without `V`, for the invariants of the pair `(ω, X)` alone.
    pub fn pair(omega: OneForm, phi: Polynomial) -> Result<Self, InvariantError> {
        check_ring(&omega, &phi)?;
        let x = Variety::hypersurface(phi)?;
        Ok(Self::build(omega, x, None))
    }

    fn build(omega: OneForm, x: Variety, f: Option<Polynomial>) -> Self {
        CaseContext {
            omega,
            x,
            f,
            order: MonomialOrder::default(),
            rf_cap: DEFAULT_RF_CAP,
            v_witness: OnceCell::new(),
            x_invariant: OnceCell::new(),
            theta: OnceCell::new(),
            theta_trivial: OnceCell::new(),
            omega_theta: OnceCell::new(),
            omega_theta_std: OnceCell::new(),
            omega_theta_trivial: OnceCell::new(),
            h_omega: OnceCell::new(),
            theta_v_omega: OnceCell::new(),
            mu0: OnceCell::new(),
            tau0_v: OnceCell::new(),
            tau0_x_classical: OnceCell::new(),
            mu_br: OnceCell::new(),
            tau_br: OnceCell::new(),
        }
    }

    /// Sets the local order used for every colength. Dimensions do not
    /// depend on it; intermediate standard bases do.
    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn set_rf_cap(&mut self, cap: u32) {
        self.rf_cap = cap.max(1);
    }

    pub fn rf_cap(&self) -> u32 {
        self.rf_cap
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn omega(&self) -> &OneForm {
        &self.omega
    }

    pub fn variety(&self) -> &Variety {
        &self.x
    }

    pub fn phi(&self) -> &Polynomial {
        &self.x.equations()[0]
    }

    pub fn f(&self) -> &Polynomial {
        self.f.as_ref().expect("this context has no hypersurface V")
    }

    pub fn nvars(&self) -> usize {
        self.x.nvars()
    }

    fn colength(&self, m: &SubmoduleGens) -> Dimension {
        colength(m, &ModuleOrder::from(self.order))
    }

    /// A 2x2 minor of `(ω; df)` outside `⟨f⟩`, if `V` is not invariant.
    pub fn v_invariance_witness(&self) -> Result<Option<&Polynomial>, InvariantError> {
        Ok(cached(&self.v_witness, || v_witness(&self.omega, self.f()))?.as_ref())
    }

    pub fn v_invariant(&self) -> Result<bool, InvariantError> {
        Ok(self.v_invariance_witness()?.is_none())
    }

    pub fn x_invariant(&self) -> Result<bool, InvariantError> {
        cached(&self.x_invariant, || Ok(invariance_witness(&self.omega, &self.x)?.is_none())).copied()
    }

    fn require_v_invariant(&self) -> Result<(), InvariantError> {
        match self.v_invariance_witness()? {
            Some(minor) => Err(InvariantError::hypothesis(Hypothesis::VInvariant { minor: minor.clone() })),
            None => Ok(()),
        }
    }

    pub fn theta(&self) -> Result<&VectorFieldModule, InvariantError> {
        cached(&self.theta, || Ok(theta_x(&self.x)?))
    }

    pub fn theta_trivial(&self) -> &VectorFieldModule {
        self.theta_trivial.get_or_init(|| theta_x_trivial(&self.x))
    }

    /// `ω(Θ_X)`.
    pub fn omega_theta(&self) -> Result<&SubmoduleGens, InvariantError> {
        cached(&self.omega_theta, || Ok(apply_form(&self.omega, self.theta()?)?))
    }

    /// `ω(Θ_X^T)`.
    pub fn omega_theta_trivial(&self) -> Result<&SubmoduleGens, InvariantError> {
        cached(&self.omega_theta_trivial, || Ok(apply_form(&self.omega, self.theta_trivial())?))
    }

    /// `H_ω = { ζ : ω(ζ) = 0 }`.
    pub fn h_omega(&self) -> Result<&SubmoduleGens, InvariantError> {
        cached(&self.h_omega, || {
            let coeffs: Vec<FreeModuleElement> = self.omega.coefficients().iter().cloned().map(Into::into).collect();
            Ok(syzygies_of(1, self.nvars(), &coeffs)?)
        })
    }

    /// `Θ_V^ω = { δ : ω(δ) ∈ ⟨f⟩ }`.
    pub fn theta_v_omega(&self) -> Result<&SubmoduleGens, InvariantError> {
        cached(&self.theta_v_omega, || {
            let n = self.nvars();
            let mut gens: Vec<FreeModuleElement> = self.omega.coefficients().iter().cloned().map(Into::into).collect();
            gens.push(self.f().clone().into());
            Ok(syzygies_of(1, n, &gens)?.project(0..n))
        })
    }

    fn with_f(&self, m: &SubmoduleGens) -> SubmoduleGens {
        m.with_generator(self.f().clone().into()).expect("f lives in the same ring")
    }

    pub fn mu0(&self) -> Dimension {
        *self.mu0.get_or_init(|| self.colength(&coefficient_ideal(&self.omega)))
    }

    pub fn tau0_v(&self) -> Dimension {
        *self.tau0_v.get_or_init(|| self.colength(&tjurina_ideal(self.f())))
    }

    /// `τ_0(ω, V)`; requires `V` invariant.
    pub fn tau0_form(&self) -> Result<Dimension, InvariantError> {
        self.require_v_invariant()?;
        Ok(self.colength(&form_tjurina_ideal(&self.omega, self.f())))
    }

    /// The classical Tjurina number of `X`.
    pub fn tau0_x_classical(&self) -> Dimension {
        *self.tau0_x_classical.get_or_init(|| self.colength(&tjurina_ideal(self.phi())))
    }

    /// `τ_0(X)`, classically and as `dim ω(Θ_X)/ω(Θ_X^T)`; the second route
    /// is evaluated only when `μ_BR` is finite, where the two must agree.
    pub fn tau0_x(&self) -> Result<TwoRoutes, InvariantError> {
        let direct = self.tau0_x_classical();
        let indirect = if self.mu_br()?.is_finite() {
            Some(subquotient_dim(self.omega_theta()?, self.omega_theta_trivial()?)?)
        } else {
            None
        };
        TwoRoutes { direct, indirect }.checked("tau_0(X)")
    }

    pub fn mu_br(&self) -> Result<Dimension, InvariantError> {
        cached(&self.mu_br, || Ok(self.colength(self.omega_theta()?))).copied()
    }

    /// `τ_BR(ω, X, V)`; requires `V` invariant.
    pub fn tau_br(&self) -> Result<Dimension, InvariantError> {
        self.require_v_invariant()?;
        cached(&self.tau_br, || Ok(self.colength(&self.with_f(self.omega_theta()?)))).copied()
    }

    /// `Ind_GSV(ω; X, 0)`; requires `X` not invariant.
    pub fn gsv_x(&self) -> Result<Dimension, InvariantError> {
        Ok(self.colength(&gsv_ideal(&self.omega, &self.x, None)?))
    }

    /// `Ind_GSV(ω; X, V, 0)`; requires `V` invariant and `X` not invariant.
    pub fn gsv_pair(&self) -> Result<Dimension, InvariantError> {
        let mut failures = Vec::new();
        if let Some(minor) = self.v_invariance_witness()? {
            failures.push(Hypothesis::VInvariant { minor: minor.clone() });
        }
        if self.x_invariant()? {
            failures.push(Hypothesis::XNotInvariant);
        }
        if !failures.is_empty() {
            return Err(InvariantError::Hypotheses(failures));
        }
        Ok(self.colength(&gsv_ideal(&self.omega, &self.x, Some(self.f()))?))
    }

    /// `dim (ω(Θ_X) ∩ ⟨f⟩) / (ω(Θ_X^T) ∩ ⟨f⟩)`, directly and from the exact
    /// sequence `0 → (A∩I)/(B∩I) → A/B → (A+I)/(B+I) → 0` with `dim A/B = τ_0(X)`.
    pub fn intersection_quotient(&self) -> Result<TwoRoutes, InvariantError> {
        let (a, b) = (self.omega_theta()?, self.omega_theta_trivial()?);
        let i = ideal(self.nvars(), vec![self.f().clone()]);
        let direct = subquotient_dim(&module_intersection(a, &i)?, &module_intersection(b, &i)?)?;
        let upper = self.colength(&self.with_f(b));
        let lower = self.colength(&self.with_f(a));
        let indirect = difference(upper, lower).and_then(|q| difference(self.tau0_x_classical(), q));
        TwoRoutes { direct, indirect }.checked("intersection quotient")
    }

    fn require_mu_br_finite(&self) -> Result<(), InvariantError> {
        if self.mu_br()?.is_finite() {
            Ok(())
        } else {
            Err(InvariantError::hypothesis(Hypothesis::MuBrFinite))
        }
    }

    /// `μ̄_X(ω) = dim Θ_n/(Θ_X + H_ω)`, directly and as `μ_BR - μ_0`.
    pub fn mubar(&self) -> Result<TwoRoutes, InvariantError> {
        self.require_mu_br_finite()?;
        let direct = self.colength(&module_sum(self.theta()?.underlying(), self.h_omega()?)?);
        let indirect = difference(self.mu_br()?, self.mu0());
        TwoRoutes { direct, indirect }.checked("mubar")
    }

    /// `τ̄_X(ω, V) = dim Θ_n/(Θ_X + Θ_V^ω)`, directly and as `τ_BR - τ_0(ω, V)`.
    pub fn taubar(&self) -> Result<TwoRoutes, InvariantError> {
        self.require_mu_br_finite()?;
        let direct = self.colength(&module_sum(self.theta()?.underlying(), self.theta_v_omega()?)?);
        let indirect = difference(self.tau_br()?, self.tau0_form()?);
        TwoRoutes { direct, indirect }.checked("taubar")
    }

    /// The least `r <= cap` with `f^r ∈ ω(Θ_X)`.
    pub fn rf(&self) -> Result<Rf, InvariantError> {
        let sb = cached(&self.omega_theta_std, || {
            Ok(self.omega_theta()?.std(&ModuleOrder::from(self.order)))
        })?;
        let mut power = Polynomial::one(self.nvars());
        for r in 1..=self.rf_cap {
            power = &power * self.f();
            if sb.contains(&power.clone().into()) {
                return Ok(Rf::Found(r));
            }
        }
        Ok(Rf::not_found(self.rf_cap))
    }

    /// Whether `Θ_V^ω = H_ω + (Θ_X ∩ Θ_V^ω)`. Since `H_ω ⊆ Θ_V^ω`, this is
    /// the inclusion `Θ_V^ω ⊆ H_ω + Θ_X`: from `δ = h + t` with `h ∈ H_ω`
    /// and `t ∈ Θ_X`, the part `t = δ - h` lies in `Θ_V^ω` automatically.
    pub fn tangency_decomposition_holds(&self) -> Result<bool, InvariantError> {
        let tv = self.theta_v_omega()?;
        let rhs = module_sum(self.h_omega()?, self.theta()?.underlying())?;
        Ok(crate::sb::first_not_contained(tv, &rhs)?.is_none())
    }
}
