use super::graph::graph_syzygies;
use super::{linear_combination, Dimension, FreeModuleElement, StandardBasis};
use crate::algebra::{ExponentVector, Polynomial, Rational};
use crate::order::ModuleOrder;
use num_traits::{One, Zero};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("rank mismatch: expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },
    #[error("generator {index} ({generator}) of the smaller module is not contained in the larger one")]
    NotContained { index: usize, generator: String },
}

/// A finite generating set of a submodule of `O^rank`. Rank one gives ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleGens {
    rank: usize,
    nvars: usize,
    gens: Vec<FreeModuleElement>,
}

impl SubmoduleGens {
    /// Zero generators are dropped.
    pub fn new(rank: usize, nvars: usize, gens: Vec<FreeModuleElement>) -> Result<Self, ModuleError> {
        for g in &gens {
            if g.rank() != rank {
                return Err(ModuleError::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
            if g.nvars() != nvars {
                return Err(ModuleError::RingMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        Ok(SubmoduleGens {
            rank,
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ideal(nvars: usize, gens: Vec<Polynomial>) -> Result<Self, ModuleError> {
        Self::new(1, nvars, gens.into_iter().map(FreeModuleElement::from).collect())
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        SubmoduleGens {
            rank,
            nvars,
            gens: Vec::new(),
        }
    }

    /// The whole free module `O^rank`.
    pub fn whole(rank: usize, nvars: usize) -> Self {
        SubmoduleGens {
            rank,
            nvars,
            gens: (0..rank)
                .map(|i| FreeModuleElement::unit_vector(rank, nvars, i))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[FreeModuleElement] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators of a rank-one module as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank, 1, "not an ideal");
        self.gens.iter().map(|g| g.component(0).clone()).collect()
    }

    /// Projects every generator onto components `range`.
    pub fn project(&self, range: std::ops::Range<usize>) -> SubmoduleGens {
        let rank = range.len();
        let gens = self.gens.iter().map(|g| g.slice(range.clone())).collect();
        SubmoduleGens::new(rank, self.nvars, gens).expect("projection keeps ranks consistent")
    }

    pub fn with_generator(&self, g: FreeModuleElement) -> Result<Self, ModuleError> {
        let mut gens = self.gens.clone();
        gens.push(g);
        Self::new(self.rank, self.nvars, gens)
    }

    pub fn std(&self, order: &ModuleOrder) -> StandardBasis {
        StandardBasis::compute(self, order)
    }

    /// Colength under the default order.
    pub fn colength(&self) -> Dimension {
        colength(self, &ModuleOrder::default())
    }

    fn check_element(&self, p: &FreeModuleElement) -> Result<(), ModuleError> {
        if p.rank() != self.rank {
            return Err(ModuleError::RankMismatch {
                expected: self.rank,
                found: p.rank(),
            });
        }
        if p.nvars() != self.nvars {
            return Err(ModuleError::RingMismatch {
                expected: self.nvars,
                found: p.nvars(),
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), ModuleError> {
        if other.rank != self.rank {
            return Err(ModuleError::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        if other.nvars != self.nvars {
            return Err(ModuleError::RingMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }
}

/// `dim O^r / M`, or `Infinite` when the leading staircase is not cofinite.
pub fn colength(m: &SubmoduleGens, order: &ModuleOrder) -> Dimension {
    m.std(order).colength()
}

/// Membership in the module generated by `m`.
pub fn is_member(p: &FreeModuleElement, m: &SubmoduleGens) -> Result<bool, ModuleError> {
    m.check_element(p)?;
    Ok(m.std(&ModuleOrder::default()).contains(p))
}

/// Division data: `unit * p = Σ coefficients[i] * gens[i] + remainder`,
/// where `unit` has a nonzero constant term and `remainder` is zero exactly
/// when `p` lies in the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub coefficients: Vec<Polynomial>,
    pub unit: Polynomial,
    pub remainder: FreeModuleElement,
}

/// Division with unit over the local ring.
///
/// A weak normal form gives `u p - r ∈ M`. The member `q = u p - r` is then
/// written through a polynomial relation `(v, -c)` among `(q, g_1, ..., g_s)`
/// whose first entry is a unit. One of the generating relations has this
/// property, since their first entries generate `M :_{K[x]} q`, an ideal
/// that becomes the unit ideal after localizing.
pub fn lift(p: &FreeModuleElement, m: &SubmoduleGens) -> Result<Lift, ModuleError> {
    m.check_element(p)?;
    let n = m.nvars;
    if m.is_empty() {
        return Ok(Lift {
            coefficients: Vec::new(),
            unit: Polynomial::one(n),
            remainder: p.clone(),
        });
    }
    let (remainder, u) = m.std(&ModuleOrder::default()).normal_form_with_unit(p);
    let q = p.mul_poly(&u).sub(&remainder);
    if q.is_zero() {
        return Ok(Lift {
            coefficients: vec![Polynomial::zero(n); m.len()],
            unit: u,
            remainder,
        });
    }
    let mut list = vec![q];
    list.extend(m.gens.iter().cloned());
    let rel = graph_syzygies(&list, m.rank, n)
        .into_iter()
        .find(|z| z.component(0).is_unit())
        .expect("some relation has a unit first entry");
    // scale the relation so that the unit has constant term 1
    let k = (rel.component(0) * &u).constant_term().recip();
    let v = rel.component(0).scale(&k);
    let neg = -k;
    Ok(Lift {
        coefficients: rel.components()[1..].iter().map(|c| c.scale(&neg)).collect(),
        unit: &v * &u,
        remainder: remainder.mul_poly(&v),
    })
}

/// Generators of `{ c in O^s : Σ c_i g_i = 0 }`.
///
/// Localization is flat, so these are the polynomial syzygies, computed
/// under a global order.
pub fn syzygies(m: &SubmoduleGens) -> SubmoduleGens {
    if m.is_empty() {
        return SubmoduleGens::zero(0, m.nvars);
    }
    let gens = graph_syzygies(&m.gens, m.rank, m.nvars);
    SubmoduleGens::new(m.len(), m.nvars, gens).expect("syzygies have rank s")
}

/// Syzygies of an explicit list, with one coordinate per entry of `gens`.
/// Unlike [`syzygies`] of a [`SubmoduleGens`], zero entries keep their
/// position and contribute the corresponding unit vector.
pub fn syzygies_of(rank: usize, nvars: usize, gens: &[FreeModuleElement]) -> Result<SubmoduleGens, ModuleError> {
    let s = gens.len();
    let nonzero: Vec<usize> = (0..s).filter(|&i| !gens[i].is_zero()).collect();
    let m = SubmoduleGens::new(rank, nvars, nonzero.iter().map(|&i| gens[i].clone()).collect())?;
    if s == 0 {
        return Ok(SubmoduleGens::zero(0, nvars));
    }
    let mut out: Vec<FreeModuleElement> = syzygies(&m)
        .gens()
        .iter()
        .map(|z| {
            let mut full = vec![Polynomial::zero(nvars); s];
            for (pos, &i) in nonzero.iter().enumerate() {
                full[i] = z.component(pos).clone();
            }
            FreeModuleElement::new(full)
        })
        .collect();
    out.extend(
        (0..s)
            .filter(|&i| gens[i].is_zero())
            .map(|i| FreeModuleElement::unit_vector(s, nvars, i)),
    );
    SubmoduleGens::new(s, nvars, out)
}

pub fn module_sum(a: &SubmoduleGens, b: &SubmoduleGens) -> Result<SubmoduleGens, ModuleError> {
    a.check_compatible(b)?;
    let gens = a.gens.iter().chain(&b.gens).cloned().collect();
    SubmoduleGens::new(a.rank, a.nvars, gens)
}

/// `A ∩ B`.
///
/// When one side has finite colength the computation is linear algebra in
/// the finite-dimensional quotient by that side. Otherwise every relation
/// `Σ c_i a_i + Σ d_j b_j = 0` among the joint generators gives the common
/// element `Σ c_i a_i`, and these generate.
pub fn module_intersection(a: &SubmoduleGens, b: &SubmoduleGens) -> Result<SubmoduleGens, ModuleError> {
    a.check_compatible(b)?;
    let (r, n) = (a.rank, a.nvars);
    if a.is_empty() || b.is_empty() {
        return Ok(SubmoduleGens::zero(r, n));
    }
    let order = ModuleOrder::default();
    for (big, other) in [(a, b), (b, a)] {
        let sb = big.std(&order);
        if sb.noether_bound().is_some() {
            return Ok(intersect_cofinite(&sb, other));
        }
    }
    let joint: Vec<FreeModuleElement> = a.gens.iter().chain(&b.gens).cloned().collect();
    let s = a.len();
    let gens = graph_syzygies(&joint, r, n)
        .iter()
        .map(|z| linear_combination(&z.components()[..s], &a.gens).expect("ranks agree"))
        .collect();
    SubmoduleGens::new(r, n, gens)
}

/// `A ∩ B` for `A ⊇ m^N O^r`: split coefficients `c_j` of `Σ c_j b_j` into
/// their parts below and at least degree `N`. The latter always land in `A`;
/// the former range over a finite-dimensional space, where membership in `A`
/// is a linear condition on normal forms.
fn intersect_cofinite(a: &StandardBasis, b: &SubmoduleGens) -> SubmoduleGens {
    let (r, n) = (b.rank, b.nvars);
    let bound = a.noether_bound().expect("cofinite module");
    let low = monomials_below(n, bound);
    let mut products = Vec::new();
    let mut gens = Vec::new();
    for g in &b.gens {
        for e in &low {
            products.push(g.mul_poly(&Polynomial::monomial(e.clone(), One::one())));
        }
        for e in monomials_below(n, bound + 1).into_iter().filter(|e| e.degree() == bound) {
            gens.push(g.mul_poly(&Polynomial::monomial(e, One::one())));
        }
    }
    let standard: Vec<(usize, ExponentVector)> = a.standard_monomials().expect("cofinite module");
    let index: HashMap<(usize, ExponentVector), usize> =
        standard.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let columns: Vec<Vec<Rational>> = products
        .iter()
        .map(|p| {
            let nf = a.reduced_normal_form(p).expect("cofinite module");
            let mut col = vec![Rational::zero(); index.len()];
            for (c, e, v) in nf.entries() {
                col[index[&(c, e.clone())]] = v.clone();
            }
            col
        })
        .collect();
    for k in kernel(&columns, index.len()) {
        let mut sum = FreeModuleElement::zero(r, n);
        for (coef, p) in k.iter().zip(&products) {
            if !coef.is_zero() {
                sum = sum.add(&p.mul_poly(&Polynomial::constant(n, coef.clone())));
            }
        }
        gens.push(sum);
    }
    SubmoduleGens::new(r, n, gens).expect("ranks agree")
}

/// Exponent vectors of total degree below `d`.
fn monomials_below(nvars: usize, d: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i == cur.len() {
            out.push(ExponentVector::from_slice(cur));
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    if d > 0 {
        rec(0, d - 1, &mut cur, &mut out);
    }
    out
}

/// A basis of `{ k : Σ k_j columns[j] = 0 }`, by Gaussian elimination.
fn kernel(columns: &[Vec<Rational>], nrows: usize) -> Vec<Vec<Rational>> {
    let ncols = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..nrows).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in &mut m[row] {
            *v *= &inv;
        }
        for i in 0..nrows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let (pivot_row, target) = if i < row {
                    let (lo, hi) = m.split_at_mut(row);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = m.split_at_mut(i);
                    (&lo[row], &mut hi[0])
                };
                for (t, pv) in target.iter_mut().zip(pivot_row) {
                    if !pv.is_zero() {
                        *t -= &f * pv;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut k = vec![Rational::zero(); ncols];
            k[fc] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                k[pc] = -m[i][fc].clone();
            }
            k
        })
        .collect()
}

/// Index of the first generator of `b` outside `a`, if any.
pub fn first_not_contained(b: &SubmoduleGens, a: &SubmoduleGens) -> Result<Option<usize>, ModuleError> {
    a.check_compatible(b)?;
    let sa = a.std(&ModuleOrder::default());
    Ok(b.gens.iter().position(|g| !sa.contains(g)))
}

/// Equality of generated modules, by mutual membership.
pub fn modules_equal(a: &SubmoduleGens, b: &SubmoduleGens) -> Result<bool, ModuleError> {
    Ok(first_not_contained(b, a)?.is_none() && first_not_contained(a, b)?.is_none())
}

/// `dim A / B` for `B ⊆ A`.
///
/// Under a local degree ordering the leading module of `M + m^N` is that of
/// `M` plus all monomials of degree `N`, so `dim (A + m^N)/(B + m^N)` counts
/// the monomials of degree below `N` in `L(A) \ L(B)`. By Artin-Rees these
/// quotients reach `A/B` for large `N` when it is finite, and grow without
/// bound otherwise; hence `dim A/B = #(L(A) \ L(B))`.
pub fn subquotient_dim(a: &SubmoduleGens, b: &SubmoduleGens) -> Result<Dimension, ModuleError> {
    a.check_compatible(b)?;
    let order = ModuleOrder::default();
    let sa = a.std(&order);
    if let Some(i) = b.gens.iter().position(|g| !sa.contains(g)) {
        return Err(ModuleError::NotContained {
            index: i,
            generator: format!("{:?}", b.gens[i]),
        });
    }
    let sb = b.std(&order);
    Ok(match sa.staircase().count_outside(&sb.staircase()) {
        Some(d) => Dimension::Finite(d),
        None => Dimension::Infinite,
    })
}

/// `dim A / B` from the presentation of `A/B` as the quotient of `O^s`, one
/// basis vector per generator of `A`, by the syzygies of `A` and the lifts
/// of the generators of `B`. Slower than [`subquotient_dim`]; kept as an
/// independent cross-check.
pub fn subquotient_dim_presented(a: &SubmoduleGens, b: &SubmoduleGens) -> Result<Dimension, ModuleError> {
    if let Some(i) = first_not_contained(b, a)? {
        return Err(ModuleError::NotContained {
            index: i,
            generator: format!("{:?}", b.gens[i]),
        });
    }
    let s = a.len();
    if s == 0 {
        return Ok(Dimension::Finite(0));
    }
    let mut relations = syzygies(a).gens().to_vec();
    for g in &b.gens {
        // the unit only rescales the column, which does not change the module
        relations.push(FreeModuleElement::new(lift(g, a)?.coefficients));
    }
    SubmoduleGens::new(s, a.nvars, relations).map(|p| p.colength())
}
