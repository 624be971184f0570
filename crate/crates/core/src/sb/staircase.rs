//! Counting monomials outside a leading module.

use crate::algebra::ExponentVector;

/// Leading exponents of a submodule of `O^rank`, grouped by component.
pub(crate) struct Staircase {
    nvars: usize,
    per_comp: Vec<Vec<ExponentVector>>,
}

/// Summary of the standard monomials of a cofinite staircase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct StaircaseSize {
    pub count: u64,
    pub max_degree: Option<u32>,
}

impl Staircase {
    pub fn new<'a, I>(rank: usize, nvars: usize, leads: I) -> Self
    where
        I: IntoIterator<Item = (usize, &'a ExponentVector)>,
    {
        let mut per_comp = vec![Vec::new(); rank];
        for (c, e) in leads {
            per_comp[c].push(e.clone());
        }
        // keep minimal generators only
        for gens in &mut per_comp {
            gens.sort_by_key(|e| e.degree());
            let mut min: Vec<ExponentVector> = Vec::new();
            for e in gens.drain(..) {
                if !min.iter().any(|m| m.divides(&e)) {
                    min.push(e);
                }
            }
            *gens = min;
        }
        Staircase { nvars, per_comp }
    }

    /// Per-variable box bounds of one component, `None` if some variable has no pure power.
    fn box_bounds(&self, comp: usize) -> Option<Vec<u32>> {
        let gens = &self.per_comp[comp];
        if gens.iter().any(|e| e.is_one()) {
            return Some(vec![0; self.nvars]);
        }
        let mut bounds: Vec<Option<u32>> = vec![None; self.nvars];
        for e in gens {
            if let Some((i, k)) = e.pure_power() {
                bounds[i] = Some(bounds[i].map_or(k, |b| b.min(k)));
            }
        }
        bounds.into_iter().collect()
    }

    pub fn is_cofinite(&self) -> bool {
        (0..self.per_comp.len()).all(|c| self.box_bounds(c).is_some())
    }

    /// Visits every standard monomial of a cofinite staircase; returns `false`
    /// without visiting anything if the staircase is not cofinite.
    pub fn for_each_standard<F: FnMut(usize, &[u32])>(&self, mut visit: F) -> bool {
        let mut all = Vec::with_capacity(self.per_comp.len());
        for c in 0..self.per_comp.len() {
            match self.box_bounds(c) {
                Some(b) => all.push(b),
                None => return false,
            }
        }
        for (c, bounds) in all.iter().enumerate() {
            if bounds.contains(&0) {
                continue;
            }
            let gens = &self.per_comp[c];
            let mut cur = vec![0u32; self.nvars];
            'outer: loop {
                let covered = gens
                    .iter()
                    .any(|g| g.as_slice().iter().zip(&cur).all(|(a, b)| a <= b));
                if !covered {
                    visit(c, &cur);
                }
                // odometer step; once a coordinate is covered, larger values
                // in the first coordinate stay covered, so skip ahead
                let mut i = 0;
                if covered {
                    cur[0] = bounds[0] - 1;
                }
                loop {
                    if i == self.nvars {
                        break 'outer;
                    }
                    cur[i] += 1;
                    if cur[i] < bounds[i] {
                        break;
                    }
                    cur[i] = 0;
                    i += 1;
                }
            }
        }
        true
    }

    /// Number of monomials in this (larger) leading module outside `inner`,
    /// or `None` when there are infinitely many. Assumes `inner` is contained
    /// in `self`.
    pub fn count_outside(&self, inner: &Staircase) -> Option<u64> {
        let mut total = 0u64;
        for (c, gens) in self.per_comp.iter().enumerate() {
            if gens.is_empty() {
                continue;
            }
            let small = &inner.per_comp[c];
            // x^a x_i^e lies in `inner` once e reaches the least excess of a
            // generator that is already below a off coordinate i
            let mut bounds = vec![0u32; self.nvars];
            for a in gens {
                let a = a.as_slice();
                for (i, bound) in bounds.iter_mut().enumerate() {
                    let excess = small
                        .iter()
                        .map(ExponentVector::as_slice)
                        .filter(|b| (0..self.nvars).all(|j| j == i || b[j] <= a[j]))
                        .map(|b| b[i].saturating_sub(a[i]))
                        .min()?;
                    *bound = (*bound).max(a[i] + excess);
                }
            }
            let inside = |g: &ExponentVector, cur: &[u32]| g.as_slice().iter().zip(cur).all(|(a, b)| a <= b);
            let mut cur = vec![0u32; self.nvars];
            'outer: loop {
                if gens.iter().any(|g| inside(g, &cur)) && !small.iter().any(|g| inside(g, &cur)) {
                    total += 1;
                }
                let mut i = 0;
                loop {
                    if i == self.nvars {
                        break 'outer;
                    }
                    cur[i] += 1;
                    if cur[i] < bounds[i] {
                        break;
                    }
                    cur[i] = 0;
                    i += 1;
                }
            }
        }
        Some(total)
    }

    pub fn size(&self) -> Option<StaircaseSize> {
        let mut count = 0u64;
        let mut max_degree: Option<u32> = None;
        let finite = self.for_each_standard(|_, e| {
            count += 1;
            let d: u32 = e.iter().sum();
            max_degree = Some(max_degree.map_or(d, |m| m.max(d)));
        });
        finite.then_some(StaircaseSize { count, max_degree })
    }
}
