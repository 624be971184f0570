//! Relations among generators, from the graph module `<(g_i, e_i)>`.
//!
//! Syzygies over the local ring are the localization of syzygies over the
//! polynomial ring, since localization is flat. The graph module is
//! therefore eliminated under a global well-ordering, where plain
//! reduction terminates quickly; no highest-corner truncation is available
//! there because the relation module never has finite colength.

use super::std::Completion;
use super::svec::{SVec, Term};
use super::FreeModuleElement;
use crate::algebra::ExponentVector;
use crate::order::ModuleOrder;
use num_traits::One;

fn unit_term(nvars: usize, comp: usize) -> SVec {
    SVec {
        terms: vec![Term {
            exp: ExponentVector::zero(nvars),
            deg: 0,
            comp: comp as u32,
            coeff: One::one(),
        }],
    }
}

/// Generators of `{ c : Σ c_i g_i = 0 }` for nonzero `gens` in `O^rank`.
pub(crate) fn graph_syzygies(gens: &[FreeModuleElement], rank: usize, nvars: usize) -> Vec<FreeModuleElement> {
    let s = gens.len();
    let ord = ModuleOrder::global_elimination(rank);
    let vecs = gens
        .iter()
        .enumerate()
        .map(|(i, g)| SVec::from_element(g, &ord).concat(unit_term(nvars, rank + i), &ord))
        .collect();
    let run = Completion::run(vecs, ord, nvars, rank + s, false);
    run.minimal_indices()
        .into_iter()
        .filter(|&i| run.elems[i].v.in_lower_block(rank))
        .map(|i| run.elems[i].v.to_element_range(rank, rank + s, nvars))
        .collect()
}
