//! Order-sorted term vectors used inside the standard basis engine.

use super::FreeModuleElement;
use crate::algebra::{ExponentVector, Polynomial, Rational};
use crate::order::{ModuleOrder, MonomialOrder};
use num_traits::{One, Zero};
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub exp: ExponentVector,
    pub deg: u32,
    pub comp: u32,
    pub coeff: Rational,
}

/// Compares two terms under `ord`, using the cached degrees.
#[inline]
pub(crate) fn cmp_terms(ord: &ModuleOrder, a: &Term, b: &Term) -> Ordering {
    cmp_raw(ord, (a.comp, a.deg, &a.exp), (b.comp, b.deg, &b.exp))
}

#[inline]
pub(crate) fn cmp_raw(
    ord: &ModuleOrder,
    (ca, da, ea): (u32, u32, &ExponentVector),
    (cb, db, eb): (u32, u32, &ExponentVector),
) -> Ordering {
    let (ba, bb) = (ord.block(ca as usize), ord.block(cb as usize));
    if ba != bb {
        return bb.cmp(&ba);
    }
    let mono = match ord.base {
        _ if ord.is_global() => {
            if da != db {
                da.cmp(&db)
            } else {
                let mut o = Ordering::Equal;
                for (x, y) in ea.as_slice().iter().zip(eb.as_slice()).rev() {
                    if x != y {
                        o = y.cmp(x);
                        break;
                    }
                }
                o
            }
        }
        MonomialOrder::NegDegRevLex => {
            if da != db {
                db.cmp(&da)
            } else {
                let mut o = Ordering::Equal;
                for (x, y) in ea.as_slice().iter().zip(eb.as_slice()).rev() {
                    if x != y {
                        o = y.cmp(x);
                        break;
                    }
                }
                o
            }
        }
        MonomialOrder::NegLex => ord.base.cmp(ea, eb),
    };
    match mono {
        Ordering::Equal => cb.cmp(&ca),
        o => o,
    }
}

/// Nonzero terms sorted strictly decreasing under the active module order.
#[derive(Clone, Debug, Default)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn from_element(e: &FreeModuleElement, ord: &ModuleOrder) -> SVec {
        Self::from_element_shifted(e, 0, ord)
    }

    /// Places the components of `e` starting at component `offset`.
    pub fn from_element_shifted(e: &FreeModuleElement, offset: usize, ord: &ModuleOrder) -> SVec {
        let mut terms: Vec<Term> = e
            .entries()
            .map(|(i, exp, c)| Term {
                deg: exp.degree(),
                exp: exp.clone(),
                comp: (i + offset) as u32,
                coeff: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| cmp_terms(ord, b, a));
        SVec { terms }
    }

    pub fn concat(mut self, other: SVec, ord: &ModuleOrder) -> SVec {
        self.terms.extend(other.terms);
        self.terms.sort_by(|a, b| cmp_terms(ord, b, a));
        self
    }

    pub fn one(nvars: usize) -> SVec {
        SVec {
            terms: vec![Term {
                exp: ExponentVector::zero(nvars),
                deg: 0,
                comp: 0,
                coeff: Rational::one(),
            }],
        }
    }

    /// Components `lo..hi`, shifted down by `lo`.
    pub fn to_element_range(&self, lo: usize, hi: usize, nvars: usize) -> FreeModuleElement {
        let mut comps = vec![Polynomial::zero(nvars); hi - lo];
        for t in &self.terms {
            let c = t.comp as usize;
            if c >= lo && c < hi {
                comps[c - lo].add_term(t.exp.clone(), t.coeff.clone());
            }
        }
        FreeModuleElement::new(comps)
    }

    pub fn to_polynomial(&self, nvars: usize) -> Polynomial {
        self.to_element_range(0, 1, nvars).into_components().remove(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.deg).max().unwrap_or(0)
    }

    pub fn ecart(&self) -> u32 {
        match self.lead() {
            Some(l) => self.max_degree() - l.deg,
            None => 0,
        }
    }

    pub fn make_monic(&mut self) {
        if let Some(l) = self.terms.first() {
            if l.coeff.is_one() {
                return;
            }
            let inv = l.coeff.recip();
            for t in &mut self.terms {
                t.coeff *= &inv;
            }
        }
    }

    /// Drops every term of degree `>= bound`, except the leading term when `keep_lead`.
    pub fn truncate(&mut self, bound: u32, keep_lead: bool) {
        let mut first = keep_lead;
        self.terms.retain(|t| {
            let keep = first || t.deg < bound;
            first = false;
            keep
        });
    }

    /// `self - c * x^t * other`, merged in order.
    pub fn sub_scaled(&self, c: &Rational, t: &ExponentVector, other: &SVec, ord: &ModuleOrder) -> SVec {
        let tdeg = t.degree();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|o| Term {
            exp: o.exp.mul(t),
            deg: o.deg + tdeg,
            comp: o.comp,
            coeff: &o.coeff * c,
        });
        let mut bcur = b.next();
        loop {
            match (a.peek(), bcur.as_ref()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.push(a.next().unwrap().clone());
                }
                (None, Some(_)) => {
                    let mut bt = bcur.take().unwrap();
                    bt.coeff = -bt.coeff;
                    out.push(bt);
                    bcur = b.next();
                }
                (Some(at), Some(bt)) => match cmp_terms(ord, at, bt) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let mut bt = bcur.take().unwrap();
                        bt.coeff = -bt.coeff;
                        out.push(bt);
                        bcur = b.next();
                    }
                    Ordering::Equal => {
                        let at = a.next().unwrap();
                        let bt = bcur.take().unwrap();
                        let s = &at.coeff - &bt.coeff;
                        if !s.is_zero() {
                            out.push(Term { coeff: s, ..bt });
                        }
                        bcur = b.next();
                    }
                },
            }
        }
        SVec { terms: out }
    }

    pub fn mul_term(&self, c: &Rational, t: &ExponentVector) -> SVec {
        let tdeg = t.degree();
        SVec {
            terms: self
                .terms
                .iter()
                .map(|o| Term {
                    exp: o.exp.mul(t),
                    deg: o.deg + tdeg,
                    comp: o.comp,
                    coeff: &o.coeff * c,
                })
                .collect(),
        }
    }

    pub fn in_lower_block(&self, split: usize) -> bool {
        self.terms.iter().all(|t| t.comp as usize >= split)
    }
}
