//! Standard bases over the local ring by s-pair completion with Mora's
//! normal form.

use super::mora::{mora_reduce, Reducer};
use super::staircase::Staircase;
use super::svec::{cmp_raw, SVec};
use super::{Dimension, FreeModuleElement, SubmoduleGens};
use crate::algebra::ExponentVector;
use crate::order::ModuleOrder;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
    deg: u32,
    comp: u32,
    seq: u64,
}

/// State of one completion run.
pub(crate) struct Completion {
    pub ord: ModuleOrder,
    pub nvars: usize,
    pub rank: usize,
    pub elems: Vec<Reducer>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    seq: u64,
    /// Terms of degree `>= bound` lie in the module and may be dropped.
    pub bound: Option<u32>,
    allow_bound: bool,
}

impl Completion {
    pub fn run(gens: Vec<SVec>, ord: ModuleOrder, nvars: usize, rank: usize, allow_bound: bool) -> Self {
        let mut c = Completion {
            ord,
            nvars,
            rank,
            elems: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            seq: 0,
            bound: None,
            allow_bound,
        };
        for mut g in gens {
            if let Some(b) = c.bound {
                g.truncate(b, false);
            }
            if g.is_zero() {
                continue;
            }
            g.make_monic();
            c.insert(g);
        }
        while let Some(p) = c.pop_pair() {
            if let Some(b) = c.bound {
                if c.ord.degree_compatible() && p.deg >= b {
                    continue;
                }
            }
            let s = c.spoly(&p);
            let nf = mora_reduce(s, &c.elems, &c.ord, c.bound, false, c.nvars);
            let mut h = nf.rem;
            if !h.is_zero() {
                h.make_monic();
                c.insert(h);
            }
        }
        c
    }

    fn lead(&self, i: usize) -> (u32, &ExponentVector) {
        let l = self.elems[i].lead();
        (l.comp, &l.exp)
    }

    fn spoly(&self, p: &Pair) -> SVec {
        let (fi, fj) = (&self.elems[p.i].v, &self.elems[p.j].v);
        let ti = fi.lead().unwrap().exp.quotient_of(&p.lcm).unwrap();
        let tj = fj.lead().unwrap().exp.quotient_of(&p.lcm).unwrap();
        let one = num_traits::One::one();
        let a = fi.mul_term(&one, &ti);
        a.sub_scaled(&one, &tj, fj, &self.ord)
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        // local orders take the largest lcm first (lowest degree), global
        // ones the smallest
        let want = if ord.is_global() { Ordering::Less } else { Ordering::Greater };
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let o = if ord.is_global() {
                a.deg.cmp(&b.deg).then_with(|| cmp_raw(&ord, (a.comp, a.deg, &a.lcm), (b.comp, b.deg, &b.lcm)))
            } else {
                cmp_raw(&ord, (a.comp, a.deg, &a.lcm), (b.comp, b.deg, &b.lcm))
            };
            if o == want || (o == Ordering::Equal && a.seq < b.seq) {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    /// Adds a new element and updates the pair set with the Gebauer-Moeller criteria.
    fn insert(&mut self, h: SVec) {
        let hidx = self.elems.len();
        self.elems.push(Reducer::new(h));
        self.active.push(false);
        let (hc, hl) = {
            let (c, e) = self.lead(hidx);
            (c, e.clone())
        };
        let product_criterion = self.rank == 1;

        struct Cand {
            g: usize,
            lcm: ExponentVector,
            disjoint: bool,
        }
        let cands: Vec<Cand> = (0..hidx)
            .filter(|&g| self.active[g])
            .filter_map(|g| {
                let (gc, gl) = self.lead(g);
                (gc == hc).then(|| Cand {
                    g,
                    lcm: gl.lcm(&hl),
                    disjoint: product_criterion && gl.is_coprime(&hl),
                })
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for k in 0..cands.len() {
            let me = &cands[k].lcm;
            let dominated = cands[k + 1..].iter().any(|c| c.lcm.divides(me))
                || kept.iter().any(|&m| cands[m].lcm.divides(me));
            if cands[k].disjoint || !dominated {
                kept.push(k);
            }
        }

        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.comp != hc || !hl.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().exp.lcm(&hl);
            let lj = elems[p.j].lead().exp.lcm(&hl);
            li == p.lcm || lj == p.lcm
        });
        for k in kept {
            let c = &cands[k];
            if c.disjoint {
                continue;
            }
            self.seq += 1;
            self.pairs.push(Pair {
                i: c.g,
                j: hidx,
                deg: c.lcm.degree(),
                lcm: c.lcm.clone(),
                comp: hc,
                seq: self.seq,
            });
        }
        for g in 0..hidx {
            if self.active[g] {
                let (gc, gl) = self.lead(g);
                if gc == hc && hl.divides(gl) {
                    self.active[g] = false;
                }
            }
        }
        self.active[hidx] = true;
        self.refresh_bound();
    }

    fn active_leads(&self) -> Staircase {
        Staircase::new(
            self.rank,
            self.nvars,
            (0..self.elems.len())
                .filter(|&i| self.active[i])
                .map(|i| {
                    let l = self.elems[i].lead();
                    (l.comp as usize, &l.exp)
                }),
        )
    }

    fn refresh_bound(&mut self) {
        if !self.allow_bound {
            return;
        }
        let stair = self.active_leads();
        if !stair.is_cofinite() {
            return;
        }
        let Some(size) = stair.size() else { return };
        // every monomial of degree > max_degree is a leading term, hence
        // m^(max_degree+1) O^r lies in the module for degree-compatible orders;
        // for any local order the length bounds the nilpotency index
        let b = if self.ord.degree_compatible() {
            size.max_degree.map_or(0, |d| d + 1)
        } else {
            u32::try_from(size.count).unwrap_or(u32::MAX)
        };
        if self.bound.is_some_and(|old| old <= b) {
            return;
        }
        self.bound = Some(b);
        for r in &mut self.elems {
            r.truncate_tail(b);
        }
        if self.ord.degree_compatible() {
            self.pairs.retain(|p| p.deg < b);
        }
    }

    /// Indices of a minimal subset with the same leading module, sorted by
    /// decreasing leading term.
    pub fn minimal_indices(&self) -> Vec<usize> {
        let n = self.elems.len();
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..n {
            if !self.active[i] {
                continue;
            }
            let (ci, li) = self.lead(i);
            let redundant = (0..n).any(|j| {
                if j == i || !self.active[j] {
                    return false;
                }
                let (cj, lj) = self.lead(j);
                cj == ci && lj.divides(li) && (lj != li || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let ord = self.ord;
        keep.sort_by(|&a, &b| {
            let (la, lb) = (self.elems[a].lead(), self.elems[b].lead());
            cmp_raw(&ord, (lb.comp, lb.deg, &lb.exp), (la.comp, la.deg, &la.exp))
        });
        keep
    }
}

/// A standard basis of a submodule of `O^r` under a fixed local order,
/// together with its leading staircase.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    source: SubmoduleGens,
    basis: Vec<FreeModuleElement>,
    order: ModuleOrder,
    leading: Vec<(usize, ExponentVector)>,
    noether_bound: Option<u32>,
    reducers: Vec<Reducer>,
}

impl StandardBasis {
    /// Computes a standard basis. Output elements have leading coefficient 1,
    /// minimal leading terms, and are sorted by decreasing leading term.
    pub fn compute(m: &SubmoduleGens, order: &ModuleOrder) -> Self {
        let gens: Vec<SVec> = m
            .gens()
            .iter()
            .map(|g| SVec::from_element(g, order))
            .collect();
        let run = Completion::run(gens, *order, m.nvars(), m.rank(), true);
        let idx = run.minimal_indices();
        let reducers: Vec<Reducer> = idx.iter().map(|&i| run.elems[i].clone()).collect();
        let basis = reducers
            .iter()
            .map(|r| r.v.to_element_range(0, m.rank(), m.nvars()))
            .collect();
        let leading = reducers
            .iter()
            .map(|r| {
                let l = r.lead();
                (l.comp as usize, l.exp.clone())
            })
            .collect();
        StandardBasis {
            source: m.clone(),
            basis,
            order: *order,
            leading,
            noether_bound: run.bound,
            reducers,
        }
    }

    pub fn source(&self) -> &SubmoduleGens {
        &self.source
    }

    pub fn basis(&self) -> &[FreeModuleElement] {
        &self.basis
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    /// Leading `(component, exponent)` pairs of the basis.
    pub fn leading(&self) -> &[(usize, ExponentVector)] {
        &self.leading
    }

    /// A degree `d` with `m^d O^r` contained in the module, once known.
    pub fn noether_bound(&self) -> Option<u32> {
        self.noether_bound
    }

    pub(crate) fn staircase(&self) -> Staircase {
        Staircase::new(
            self.source.rank(),
            self.source.nvars(),
            self.leading.iter().map(|(c, e)| (*c, e)),
        )
    }

    /// `dim O^r / M`: the number of `(component, monomial)` pairs outside the
    /// leading staircase.
    pub fn colength(&self) -> Dimension {
        match self.staircase().size() {
            Some(s) => Dimension::Finite(s.count),
            None => Dimension::Infinite,
        }
    }

    /// The standard monomials, or `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<(usize, ExponentVector)>> {
        let mut out = Vec::new();
        self.staircase()
            .for_each_standard(|c, e| out.push((c, ExponentVector::from_slice(e))))
            .then_some(out)
    }

    /// Weak normal form against this basis. Terms beyond the Noether bound,
    /// which lie in the module, are discarded along the way.
    pub fn normal_form(&self, p: &FreeModuleElement) -> FreeModuleElement {
        assert_eq!(p.rank(), self.source.rank(), "rank mismatch");
        let h = SVec::from_element(p, &self.order);
        let nf = mora_reduce(
            h,
            &self.reducers,
            &self.order,
            self.noether_bound,
            false,
            self.source.nvars(),
        );
        nf.rem.to_element_range(0, p.rank(), p.nvars())
    }

    /// Weak normal form with its unit: `unit * p - remainder` lies in the module.
    pub fn normal_form_with_unit(&self, p: &FreeModuleElement) -> (FreeModuleElement, crate::algebra::Polynomial) {
        assert_eq!(p.rank(), self.source.rank(), "rank mismatch");
        let nvars = self.source.nvars();
        let h = SVec::from_element(p, &self.order);
        let nf = mora_reduce(h, &self.reducers, &self.order, self.noether_bound, true, nvars);
        let unit = nf.unit.expect("unit tracked").to_polynomial(nvars);
        (nf.rem.to_element_range(0, p.rank(), nvars), unit)
    }

    /// Fully reduced normal form, with every term standard, for a module of
    /// finite colength. Everything of degree at least the Noether bound lies
    /// in the module, so plain division runs over finitely many monomials
    /// and needs no unit. `None` without a bound.
    pub(crate) fn reduced_normal_form(&self, p: &FreeModuleElement) -> Option<FreeModuleElement> {
        let bound = self.noether_bound?;
        let mut h = SVec::from_element(p, &self.order);
        h.truncate(bound, false);
        let mut done = Vec::new();
        while let Some(lead) = h.lead() {
            let mask = lead.exp.support_mask();
            match self.reducers.iter().find(|r| r.divides(lead, mask)) {
                Some(g) => {
                    let gl = g.lead();
                    let c = &lead.coeff / &gl.coeff;
                    let t = gl.exp.quotient_of(&lead.exp).expect("divisibility checked");
                    h = h.sub_scaled(&c, &t, &g.v, &self.order);
                    h.truncate(bound, false);
                }
                None => done.push(h.terms.remove(0)),
            }
        }
        h.terms = done;
        Some(h.to_element_range(0, p.rank(), p.nvars()))
    }

    pub fn contains(&self, p: &FreeModuleElement) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Leading exponents in component `comp`.
    pub fn leading_in(&self, comp: usize) -> impl Iterator<Item = &ExponentVector> {
        self.leading.iter().filter(move |(c, _)| *c == comp).map(|(_, e)| e)
    }

    /// Checks that every leading term lies in the leading module of `other`
    /// and vice versa.
    pub fn same_leading_module(&self, other: &StandardBasis) -> bool {
        let covers = |a: &StandardBasis, b: &StandardBasis| {
            a.leading
                .iter()
                .all(|(c, e)| b.leading_in(*c).any(|g| g.divides(e)))
        };
        covers(self, other) && covers(other, self)
    }
}
