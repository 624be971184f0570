//! Logarithmic vector fields of a complete intersection germ, the trivial
//! ones among them, and the invariance test of a variety under a 1-form.

use crate::algebra::{OneForm, PolyMatrix, Polynomial};
use crate::sb::{
    first_not_contained, is_member, modules_equal, syzygies_of, FreeModuleElement, ModuleError, SubmoduleGens,
};
use crate::order::ModuleOrder;
use itertools::Itertools;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LogderError {
    #[error("a variety needs at least one equation")]
    NoEquations,
    #[error("equation {index} is zero")]
    ZeroEquation { index: usize },
    #[error("equation {index} does not vanish at the origin")]
    NotVanishing { index: usize },
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("generator {index} of the computed module is not logarithmic")]
    NotLogarithmic { index: usize },
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// The germ at the origin of `{φ_1 = ... = φ_k = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variety {
    nvars: usize,
    equations: Vec<Polynomial>,
}

impl Variety {
    pub fn new(equations: Vec<Polynomial>) -> Result<Self, LogderError> {
        let first = equations.first().ok_or(LogderError::NoEquations)?;
        let nvars = first.nvars();
        for (index, phi) in equations.iter().enumerate() {
            if phi.nvars() != nvars {
                return Err(LogderError::RingMismatch {
                    expected: nvars,
                    found: phi.nvars(),
                });
            }
            if phi.is_zero() {
                return Err(LogderError::ZeroEquation { index });
            }
            if !phi.vanishes_at_origin() {
                return Err(LogderError::NotVanishing { index });
            }
        }
        Ok(Variety { nvars, equations })
    }

    pub fn hypersurface(phi: Polynomial) -> Result<Self, LogderError> {
        Self::new(vec![phi])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    /// Number of equations.
    pub fn codim(&self) -> usize {
        self.equations.len()
    }

    pub fn is_hypersurface(&self) -> bool {
        self.equations.len() == 1
    }

    /// The defining ideal `I_X`.
    pub fn ideal(&self) -> SubmoduleGens {
        SubmoduleGens::ideal(self.nvars, self.equations.clone()).expect("equations share a ring")
    }

    /// The `k x n` Jacobian matrix.
    pub fn jacobian(&self) -> PolyMatrix {
        let rows = self.equations.iter().map(Polynomial::gradient).collect();
        PolyMatrix::from_rows(rows).expect("gradients have length n")
    }
}

/// A submodule of `Θ_n ≅ O^n`, with vector fields written in the basis
/// `∂/∂x_1, ..., ∂/∂x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFieldModule {
    module: SubmoduleGens,
}

impl VectorFieldModule {
    pub fn new(module: SubmoduleGens) -> Result<Self, LogderError> {
        if module.rank() != module.nvars() {
            return Err(ModuleError::RankMismatch {
                expected: module.nvars(),
                found: module.rank(),
            }
            .into());
        }
        Ok(VectorFieldModule { module })
    }

    pub fn from_fields(nvars: usize, fields: Vec<Vec<Polynomial>>) -> Result<Self, LogderError> {
        let gens = fields.into_iter().map(FreeModuleElement::new).collect();
        Self::new(SubmoduleGens::new(nvars, nvars, gens)?)
    }

    pub fn underlying(&self) -> &SubmoduleGens {
        &self.module
    }

    pub fn nvars(&self) -> usize {
        self.module.nvars()
    }

    pub fn gens(&self) -> &[FreeModuleElement] {
        self.module.gens()
    }

    pub fn contains_field(&self, xi: &FreeModuleElement) -> Result<bool, LogderError> {
        Ok(is_member(xi, &self.module)?)
    }

    /// Whether every generator of `other` lies in this module.
    pub fn contains(&self, other: &VectorFieldModule) -> Result<bool, LogderError> {
        Ok(first_not_contained(&other.module, &self.module)?.is_none())
    }

    pub fn same_module(&self, other: &VectorFieldModule) -> Result<bool, LogderError> {
        Ok(modules_equal(&self.module, &other.module)?)
    }

    /// Index of the first generator that does not map `I_X` into itself.
    pub fn first_non_logarithmic(&self, x: &Variety) -> Option<usize> {
        let sb = x.ideal().std(&ModuleOrder::default());
        self.gens().iter().position(|xi| {
            x.equations()
                .iter()
                .any(|phi| !sb.contains(&FreeModuleElement::from(derivation(xi, phi))))
        })
    }
}

/// `ξ(g) = Σ ξ_j ∂g/∂x_j`.
pub fn derivation(xi: &FreeModuleElement, g: &Polynomial) -> Polynomial {
    xi.components()
        .iter()
        .zip(g.gradient())
        .fold(Polynomial::zero(g.nvars()), |acc, (c, d)| acc + c * &d)
}

/// `Θ_X = { ξ : ξ(φ_i) ∈ I_X for all i }`, from the syzygies of the Jacobian
/// columns together with the columns `φ_i e_l`.
pub fn theta_x(x: &Variety) -> Result<VectorFieldModule, LogderError> {
    let (n, k) = (x.nvars(), x.codim());
    let jac = x.jacobian();
    let mut columns: Vec<FreeModuleElement> = (0..n)
        .map(|j| FreeModuleElement::new((0..k).map(|i| jac.get(i, j).clone()).collect()))
        .collect();
    for phi in x.equations() {
        for l in 0..k {
            let mut e = vec![Polynomial::zero(n); k];
            e[l] = phi.clone();
            columns.push(FreeModuleElement::new(e));
        }
    }
    let syz = syzygies_of(k, n, &columns)?;
    let v = VectorFieldModule::new(syz.project(0..n))?;
    if let Some(index) = v.first_non_logarithmic(x) {
        return Err(LogderError::NotLogarithmic { index });
    }
    Ok(v)
}

/// The trivial logarithmic fields: cofactor expansions of the `(k+1)`-column
/// minors of the Jacobian with a symbolic first row `(∂/∂x_1, ..., ∂/∂x_n)`,
/// together with all `φ_i ∂/∂x_j`.
pub fn theta_x_trivial(x: &Variety) -> VectorFieldModule {
    let (n, k) = (x.nvars(), x.codim());
    let jac = x.jacobian();
    let rows: Vec<usize> = (0..k).collect();
    let mut fields = Vec::new();
    if k < n {
        for cols in (0..n).combinations(k + 1) {
            let mut xi = vec![Polynomial::zero(n); n];
            for (t, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                let m = jac.sub_determinant(&rows, &rest);
                xi[c] = if t % 2 == 0 { m } else { -m };
            }
            fields.push(FreeModuleElement::new(xi));
        }
    }
    for phi in x.equations() {
        for j in 0..n {
            fields.push(FreeModuleElement::unit_vector(n, n, j).mul_poly(phi));
        }
    }
    VectorFieldModule::new(SubmoduleGens::new(n, n, fields).expect("fields of rank n"))
        .expect("rank equals nvars")
}

/// The ideal `ω(V)` generated by `Σ A_j ξ_j` over the generators `ξ` of `V`.
pub fn apply_form(omega: &OneForm, v: &VectorFieldModule) -> Result<SubmoduleGens, LogderError> {
    if omega.nvars() != v.nvars() {
        return Err(LogderError::RingMismatch {
            expected: v.nvars(),
            found: omega.nvars(),
        });
    }
    let gens = v
        .gens()
        .iter()
        .map(|xi| {
            xi.components()
                .iter()
                .zip(omega.coefficients())
                .fold(Polynomial::zero(v.nvars()), |acc, (c, a)| acc + c * a)
        })
        .collect();
    Ok(SubmoduleGens::ideal(v.nvars(), gens)?)
}

/// The first `(k+1)`-minor of `(ω; dφ)` outside `I_X`, or `None` when `X`
/// is invariant by `ω`.
pub fn invariance_witness(omega: &OneForm, x: &Variety) -> Result<Option<Polynomial>, LogderError> {
    if omega.nvars() != x.nvars() {
        return Err(LogderError::RingMismatch {
            expected: x.nvars(),
            found: omega.nvars(),
        });
    }
    let k = x.codim();
    if k + 1 > x.nvars() {
        return Ok(None);
    }
    let m = omega.stacked_with_jacobian(x.equations());
    let minors = m.minors(k + 1).expect("k + 1 <= min(rows, cols)");
    let sb = x.ideal().std(&ModuleOrder::default());
    Ok(minors
        .into_iter()
        .find(|d| !sb.contains(&FreeModuleElement::from(d.clone()))))
}

pub fn is_invariant(omega: &OneForm, x: &Variety) -> Result<bool, LogderError> {
    Ok(invariance_witness(omega, x)?.is_none())
}

/// Whether `{f = 0}` is invariant by `ω`: every `A_j f_l - A_l f_j` lies in `⟨f⟩`.
pub fn is_hypersurface_invariant(omega: &OneForm, f: &Polynomial) -> Result<bool, LogderError> {
    is_invariant(omega, &Variety::hypersurface(f.clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, OneForm};

    fn xy() -> (Polynomial, Polynomial) {
        (Polynomial::var(2, 0), Polynomial::var(2, 1))
    }

    fn int(n: usize, c: i64) -> Polynomial {
        Polynomial::from_int(n, c)
    }

    fn cusp(p: u32, q: u32) -> Variety {
        let (x, y) = xy();
        Variety::hypersurface(&y.pow(p) - &x.pow(q)).unwrap()
    }

    #[test]
    fn variety_validation() {
        let (x, _) = xy();
        assert_eq!(Variety::new(vec![]), Err(LogderError::NoEquations));
        assert_eq!(
            Variety::hypersurface(&x + &int(2, 1)),
            Err(LogderError::NotVanishing { index: 0 })
        );
        assert_eq!(
            Variety::hypersurface(Polynomial::zero(2)),
            Err(LogderError::ZeroEquation { index: 0 })
        );
    }

    #[test]
    fn theta_of_normal_crossing() {
        let (x, y) = xy();
        let v = theta_x(&Variety::hypersurface(&x * &y).unwrap()).unwrap();
        let expected = VectorFieldModule::from_fields(
            2,
            vec![vec![x.clone(), Polynomial::zero(2)], vec![Polynomial::zero(2), y.clone()]],
        )
        .unwrap();
        assert!(v.same_module(&expected).unwrap());
    }

    #[test]
    fn theta_of_quasihomogeneous_curves() {
        let (x, y) = xy();
        for (p, q) in [(2u32, 3u32), (3, 4), (2, 5)] {
            let (pi, qi) = (p as i64, q as i64);
            let euler = vec![&int(2, pi) * &x, &int(2, qi) * &y];
            let ham = vec![&int(2, pi) * &y.pow(p - 1), &int(2, qi) * &x.pow(q - 1)];
            let expected = VectorFieldModule::from_fields(2, vec![euler, ham]).unwrap();
            let v = theta_x(&cusp(p, q)).unwrap();
            assert!(v.same_module(&expected).unwrap(), "p={p} q={q}");
        }
    }

    #[test]
    fn theta_in_three_variables() {
        let n = 3;
        let (x, y, z) = (Polynomial::var(n, 0), Polynomial::var(n, 1), Polynomial::var(n, 2));
        let zero = Polynomial::zero(n);
        let x2 = &int(n, 3) * &x.pow(2);
        let phi = &x.pow(3) + &(&y * &z);
        let expected = VectorFieldModule::from_fields(
            n,
            vec![
                vec![z.clone(), -&x2, zero.clone()],
                vec![y.clone(), zero.clone(), -&x2],
                vec![zero.clone(), y.clone(), -&z],
                vec![x.clone(), &int(n, 2) * &y, z.clone()],
            ],
        )
        .unwrap();
        let x_var = Variety::hypersurface(phi).unwrap();
        let v = theta_x(&x_var).unwrap();
        assert!(v.same_module(&expected).unwrap());
        assert!(v.contains(&theta_x_trivial(&x_var)).unwrap());
    }

    #[test]
    fn trivial_fields_of_normal_crossing() {
        let (x, y) = xy();
        let x_var = Variety::hypersurface(&x * &y).unwrap();
        let t = theta_x_trivial(&x_var);
        let ham = FreeModuleElement::new(vec![x.clone(), -&y]);
        assert!(t.gens().iter().any(|g| *g == ham || *g == ham.mul_poly(&int(2, -1))));
        assert_eq!(t.gens().len(), 3);
        assert!(theta_x(&x_var).unwrap().contains(&t).unwrap());
    }

    #[test]
    fn trivial_fields_of_complete_intersection() {
        let n = 3;
        let (x, y, z) = (Polynomial::var(n, 0), Polynomial::var(n, 1), Polynomial::var(n, 2));
        let x_var = Variety::new(vec![&x.pow(2) - &y.pow(3), z.clone()]).unwrap();
        let t = theta_x_trivial(&x_var);
        assert_eq!(t.first_non_logarithmic(&x_var), None);
        let v = theta_x(&x_var).unwrap();
        assert!(v.contains(&t).unwrap());
        assert!(!t.contains(&v).unwrap());
    }

    #[test]
    fn form_on_logarithmic_fields() {
        let (x, y) = xy();
        let f = &x * &y;
        let v = theta_x(&Variety::hypersurface(f.clone()).unwrap()).unwrap();
        let omega = OneForm::exact(&f);
        let image = apply_form(&omega, &v).unwrap();
        assert!(modules_equal(&image, &SubmoduleGens::ideal(2, vec![f.clone()]).unwrap()).unwrap());
    }

    #[test]
    fn trivial_image_is_minor_ideal() {
        let (x, y) = xy();
        let lambda = rational(2, 1);
        let omega = OneForm::new(vec![y.clone(), x.scale(&lambda)]).unwrap();
        let x_var = cusp(2, 3);
        let phi = &x_var.equations()[0];
        let image = apply_form(&omega, &theta_x_trivial(&x_var)).unwrap();
        let mut gens: Vec<Polynomial> = omega.wedge_minors(phi).into_iter().map(|(_, _, m)| m).collect();
        gens.extend(omega.coefficients().iter().map(|a| a * phi));
        let other = SubmoduleGens::ideal(2, gens).unwrap();
        assert!(modules_equal(&image, &other).unwrap());
    }

    #[test]
    fn invariance() {
        let (x, y) = xy();
        let lambda = rational(5, 7);
        let omega = OneForm::new(vec![y.clone(), x.scale(&lambda)]).unwrap();
        assert!(is_hypersurface_invariant(&omega, &(&x * &y)).unwrap());
        let phi = &y.pow(2) - &x.pow(3);
        assert!(!is_hypersurface_invariant(&omega, &phi).unwrap());
        let w = invariance_witness(&omega, &Variety::hypersurface(phi.clone()).unwrap())
            .unwrap()
            .unwrap();
        assert!(!w.is_zero());
        assert!(is_hypersurface_invariant(&OneForm::exact(&phi), &phi).unwrap());
        assert!(is_hypersurface_invariant(&omega, &int(2, 1)).is_err());
    }
}
