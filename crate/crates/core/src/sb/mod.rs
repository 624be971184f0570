//! Standard bases of submodules of free modules over the local ring, and the
//! operations built on them: colength, membership, lift, syzygies, sums,
//! intersections and subquotient dimensions.
//!
//! Everything runs on polynomial representatives with a local order, so a
//! module here stands for the module it generates over the localization at
//! the origin.

mod dimension;
mod element;
mod graph;
mod module;
mod mora;
mod staircase;
mod std;
mod svec;

pub use dimension::Dimension;
pub use element::{linear_combination, FreeModuleElement};
pub use module::{
    colength, first_not_contained, is_member, lift, module_intersection, module_sum, modules_equal,
    subquotient_dim, subquotient_dim_presented, syzygies, syzygies_of, Lift, ModuleError, SubmoduleGens,
};
pub use mora::{ecart, mora_normal_form};
pub use std::StandardBasis;
