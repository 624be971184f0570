use crate::algebra::{ExponentVector, Polynomial, Rational};
use crate::order::{ModuleOrder, OrderError};
use std::fmt;

/// Element of the free module `O^r`, stored as its `r` component polynomials.
///
/// Rank-one elements are identified with polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModuleElement {
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    /// Panics if `components` is empty or the components live in different rings.
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "free module element of rank 0");
        let n = components[0].nvars();
        assert!(
            components.iter().all(|p| p.nvars() == n),
            "components of a module element must share the ring"
        );
        FreeModuleElement { components }
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        Self::new(vec![Polynomial::zero(nvars); rank])
    }

    /// The basis vector `e_i` of `O^rank`.
    pub fn unit_vector(rank: usize, nvars: usize, i: usize) -> Self {
        let mut v = Self::zero(rank, nvars);
        v.components[i] = Polynomial::one(nvars);
        v
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// All `(component, exponent, coefficient)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &ExponentVector, &Rational)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().map(move |(e, c)| (i, e, c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Self::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Self::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn mul_poly(&self, c: &Polynomial) -> Self {
        Self::new(self.components.iter().map(|a| a * c).collect())
    }

    /// Leading `(coefficient, exponent, component)` under a module order.
    pub fn leading_term(
        &self,
        order: &ModuleOrder,
    ) -> Result<(Rational, ExponentVector, usize), OrderError> {
        self.entries()
            .max_by(|a, b| order.cmp((a.0, a.1), (b.0, b.1)))
            .map(|(i, e, c)| (c.clone(), e.clone(), i))
            .ok_or(OrderError::ZeroInput)
    }

    /// Keeps components `range` only.
    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Self {
        Self::new(self.components[range].to_vec())
    }
}

impl From<Polynomial> for FreeModuleElement {
    fn from(p: Polynomial) -> Self {
        FreeModuleElement::new(vec![p])
    }
}

impl fmt::Debug for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.components.iter().map(|p| p.to_string())).finish()
    }
}

/// `sum_i coeffs[i] * gens[i]`.
pub fn linear_combination(coeffs: &[Polynomial], gens: &[FreeModuleElement]) -> Option<FreeModuleElement> {
    let first = gens.first()?;
    let mut acc = FreeModuleElement::zero(first.rank(), first.nvars());
    for (c, g) in coeffs.iter().zip(gens) {
        if !c.is_zero() {
            acc = acc.add(&g.mul_poly(c));
        }
    }
    Some(acc)
}
