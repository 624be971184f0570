use super::{AlgebraError, PolyMatrix, Polynomial};

/// A polynomial 1-form `A_1 dx_1 + ... + A_n dx_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    coefficients: Vec<Polynomial>,
}

impl OneForm {
    /// The form with the given coefficients; there must be exactly one per
    /// ring variable.
    pub fn new(coefficients: Vec<Polynomial>) -> Result<Self, AlgebraError> {
        let n = coefficients.len();
        if let Some(bad) = coefficients.iter().find(|a| a.nvars() != n) {
            return Err(AlgebraError::FormLength {
                coefficients: n,
                nvars: bad.nvars(),
            });
        }
        Ok(OneForm { coefficients })
    }

    /// The exact form `df`.
    pub fn exact(f: &Polynomial) -> Self {
        OneForm {
            coefficients: f.gradient(),
        }
    }

    /// `df + f * eta`.
    pub fn df_plus_f_eta(f: &Polynomial, eta: &OneForm) -> Result<Self, AlgebraError> {
        if eta.nvars() != f.nvars() {
            return Err(AlgebraError::RingMismatch {
                left: f.nvars(),
                right: eta.nvars(),
            });
        }
        let coefficients = f
            .gradient()
            .iter()
            .zip(&eta.coefficients)
            .map(|(d, e)| d + &(f * e))
            .collect();
        Ok(OneForm { coefficients })
    }

    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: usize) -> &Polynomial {
        &self.coefficients[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Polynomial::is_zero)
    }

    /// `u * omega`.
    pub fn scale_by(&self, u: &Polynomial) -> Self {
        OneForm {
            coefficients: self.coefficients.iter().map(|a| a * u).collect(),
        }
    }

    pub fn try_add(&self, other: &OneForm) -> Result<Self, AlgebraError> {
        if self.nvars() != other.nvars() {
            return Err(AlgebraError::RingMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(OneForm {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// The matrix with first row `omega` followed by the Jacobian rows of `phi`.
    pub fn stacked_with_jacobian(&self, phi: &[Polynomial]) -> PolyMatrix {
        let mut rows = vec![self.coefficients.clone()];
        rows.extend(phi.iter().map(Polynomial::gradient));
        PolyMatrix::from_rows(rows).expect("rows share the ring")
    }

    /// Coefficients of `omega ∧ dg`: the minors `A_j g_l - A_l g_j` for `j < l`.
    pub fn wedge_minors(&self, g: &Polynomial) -> Vec<(usize, usize, Polynomial)> {
        let dg = g.gradient();
        let n = self.nvars();
        let mut out = Vec::new();
        for j in 0..n {
            for l in j + 1..n {
                let m = &(&self.coefficients[j] * &dg[l]) - &(&self.coefficients[l] * &dg[j]);
                out.push((j, l, m));
            }
        }
        out
    }
}
