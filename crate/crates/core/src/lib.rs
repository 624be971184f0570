//! Exact local commutative algebra for singularity invariants of holomorphic
//! 1-forms: standard bases over the local ring, logarithmic vector fields,
//! Bruce-Roberts numbers, Tjurina numbers and GSV indices, with checkers for
//! the identities relating them.

pub mod algebra;
pub mod cli;
pub mod invariants;
pub mod io;
pub mod logder;
pub mod order;
pub mod sb;
