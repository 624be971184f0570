//! Mora's weak normal form for local orderings.

use super::svec::{SVec, Term};
use super::FreeModuleElement;
use crate::order::ModuleOrder;

/// A reducer with its cached ecart and divisibility data.
///
/// `unit` is the coefficient of the element being reduced inside this
/// reducer; it is `None` for elements of the module itself.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub v: SVec,
    pub ecart: u32,
    pub mask: u64,
    pub unit: Option<SVec>,
}

impl Reducer {
    pub fn new(v: SVec) -> Self {
        let ecart = v.ecart();
        let mask = v.lead().map_or(0, |l| l.exp.support_mask());
        Reducer {
            v,
            ecart,
            mask,
            unit: None,
        }
    }

    fn refresh(&mut self) {
        self.ecart = self.v.ecart();
        self.mask = self.v.lead().map_or(0, |l| l.exp.support_mask());
    }

    #[inline]
    pub fn lead(&self) -> &Term {
        self.v.lead().expect("reducers are nonzero")
    }

    #[inline]
    pub fn divides(&self, t: &Term, tmask: u64) -> bool {
        let l = self.lead();
        l.comp == t.comp && self.mask & !tmask == 0 && l.deg <= t.deg && l.exp.divides(&t.exp)
    }

    pub fn truncate_tail(&mut self, bound: u32) {
        self.v.truncate(bound, true);
        self.refresh();
    }
}

/// Result of a weak normal form: `unit * p - (module combination) = rem`.
pub(crate) struct NormalForm {
    pub rem: SVec,
    pub unit: Option<SVec>,
}

/// Reduces `h` with Mora's rule: among reducers whose leading term divides
/// the current leading term, take the one of least ecart (first found on
/// ties); if that ecart exceeds the ecart of `h`, `h` itself joins the
/// reducers before being reduced.
///
/// With `bound`, terms of degree `>= bound` are dropped after every step;
/// the caller guarantees that `m^bound O^r` lies in the module.
pub(crate) fn mora_reduce(
    h: SVec,
    base: &[Reducer],
    ord: &ModuleOrder,
    bound: Option<u32>,
    track_unit: bool,
    nvars: usize,
) -> NormalForm {
    let unit_ord = ModuleOrder::new(ord.base);
    let mut h = h;
    let mut unit = track_unit.then(|| SVec::one(nvars));
    if let Some(b) = bound {
        h.truncate(b, false);
    }
    let mut extra: Vec<Reducer> = Vec::new();
    // under a well-ordering plain division terminates
    let lazy = ord.is_global();
    while let Some(lead) = h.lead() {
        let lmask = lead.exp.support_mask();
        let mut best: Option<(bool, usize, u32)> = None;
        for (i, r) in base.iter().enumerate() {
            if r.divides(lead, lmask) && best.is_none_or(|b| r.ecart < b.2) {
                best = Some((false, i, r.ecart));
                if r.ecart == 0 || lazy {
                    break;
                }
            }
        }
        if best.is_none_or(|b| b.2 > 0) {
            for (i, r) in extra.iter().enumerate() {
                if r.divides(lead, lmask) && best.is_none_or(|b| r.ecart < b.2) {
                    best = Some((true, i, r.ecart));
                }
            }
        }
        let Some((is_extra, idx, g_ecart)) = best else { break };
        let g = if is_extra { &extra[idx] } else { &base[idx] };
        let gl = g.lead();
        let c = &lead.coeff / &gl.coeff;
        let t = gl.exp.quotient_of(&lead.exp).expect("divisibility checked");
        let mut next = h.sub_scaled(&c, &t, &g.v, ord);
        let next_unit = match (&unit, &g.unit) {
            (Some(u), Some(gu)) => Some(u.sub_scaled(&c, &t, gu, &unit_ord)),
            (u, _) => u.clone(),
        };
        let h_ecart = h.ecart();
        if !lazy && g_ecart > h_ecart {
            let mut r = Reducer::new(h);
            r.unit = unit.take();
            extra.push(r);
        }
        if let Some(b) = bound {
            next.truncate(b, false);
        }
        h = next;
        unit = next_unit;
    }
    NormalForm { rem: h, unit }
}

/// Mora normal form of `p` against an arbitrary list of module elements.
///
/// This is the weak normal form: some unit `u` of the local ring satisfies
/// `u * p - (combination of g) = result`, and no leading term of `g` divides
/// the leading term of the result.
pub fn mora_normal_form(
    p: &FreeModuleElement,
    g: &[FreeModuleElement],
    order: &ModuleOrder,
) -> FreeModuleElement {
    let reducers: Vec<Reducer> = g
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| Reducer::new(SVec::from_element(e, order)))
        .collect();
    let h = SVec::from_element(p, order);
    let nf = mora_reduce(h, &reducers, order, None, false, p.nvars());
    nf.rem.to_element_range(0, p.rank(), p.nvars())
}

/// Ecart of a nonzero module element: maximal term degree minus the degree
/// of the leading term.
pub fn ecart(p: &FreeModuleElement, order: &ModuleOrder) -> Option<u32> {
    let v = SVec::from_element(p, order);
    v.lead().map(|_| v.ecart())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::order::MonomialOrder;

    fn ord() -> ModuleOrder {
        ModuleOrder::new(MonomialOrder::NegDegRevLex)
    }

    #[test]
    fn ecart_examples() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        assert_eq!(ecart(&x.clone().into(), &ord()), Some(0));
        assert_eq!(ecart(&(&x + &x.pow(3)).into(), &ord()), Some(2));
        // y^p - x^q, p = 2, q = 5
        assert_eq!(ecart(&(&y.pow(2) - &x.pow(5)).into(), &ord()), Some(3));
        assert_eq!(ecart(&Polynomial::zero(2).into(), &ord()), None);
    }

    #[test]
    fn simple_normal_forms() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let nf = mora_normal_form(&x.pow(2).into(), &[x.clone().into()], &ord());
        assert!(nf.is_zero());
        let cusp = &y.pow(2) - &x.pow(3);
        let xy = &x * &y;
        let nf = mora_normal_form(&xy.clone().into(), &[cusp.into()], &ord());
        assert_eq!(nf, xy.into());
    }

    #[test]
    fn unit_is_needed_locally() {
        // x lies in <x - x^2> only locally: x = (1 - x)^{-1} (x - x^2)
        let x = Polynomial::var(1, 0);
        let g = &x - &x.pow(2);
        let nf = mora_normal_form(&x.clone().into(), &[g.into()], &ord());
        assert!(nf.is_zero());
    }
}
