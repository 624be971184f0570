use smallvec::SmallVec;
use std::fmt;

/// Exponent vector of a monomial `x_1^{e_1} ... x_n^{e_n}`.
///
/// The length always equals the number of ring variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[u32; 4]>);

impl ExponentVector {
    /// The unit monomial `1` in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, nvars))
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.0[i] = 1;
        e
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        ExponentVector(SmallVec::from_slice(exps))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        ExponentVector(self.0.iter().map(|e| e * k).collect())
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if self.divides(other) {
            Some(ExponentVector(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Bitmask of the variables that occur; a cheap necessary test for divisibility.
    pub(crate) fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub(crate) fn derivative(&self, i: usize) -> Option<(u32, Self)> {
        let e = self.0[i];
        if e == 0 {
            return None;
        }
        let mut d = self.clone();
        d.0[i] -= 1;
        Some((e, d))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(SmallVec::from_vec(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let a = ExponentVector::from_slice(&[1, 2]);
        let b = ExponentVector::from_slice(&[3, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Some(ExponentVector::from_slice(&[2, 0])));
        assert_eq!(a.lcm(&ExponentVector::from_slice(&[0, 5])).as_slice(), &[1, 5]);
    }

    #[test]
    fn pure_powers() {
        assert_eq!(ExponentVector::from_slice(&[0, 4, 0]).pure_power(), Some((1, 4)));
        assert_eq!(ExponentVector::from_slice(&[1, 1]).pure_power(), None);
        assert_eq!(ExponentVector::zero(2).pure_power(), None);
    }
}
