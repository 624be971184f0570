//! Local monomial orderings and their extension to free modules.
//!
//! In a local ordering the unit monomial `1` is larger than every variable,
//! so leading terms are the terms of *lowest* degree. This is what makes the
//! leading staircase of a standard basis measure the colength in the local
//! ring rather than in the polynomial ring.

use crate::algebra::{ExponentVector, Polynomial, Rational};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("exponent vectors of different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("the zero element has no leading term")]
    ZeroInput,
    #[error("unknown monomial order `{0}` (expected negdegrevlex or neglex)")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Lower total degree is larger; ties broken reverse-lexicographically.
    #[default]
    NegDegRevLex,
    /// `a > b` iff the first nonzero entry of `a - b` is negative.
    NegLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::NegDegRevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return db.cmp(&da);
                }
                for (x, y) in a.as_slice().iter().zip(b.as_slice()).rev() {
                    if x != y {
                        // last nonzero entry of a - b negative => a is larger
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::NegLex => {
                for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn try_cmp(self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering, OrderError> {
        if a.len() != b.len() {
            return Err(OrderError::LengthMismatch(a.len(), b.len()));
        }
        Ok(self.cmp(a, b))
    }

    /// True when larger monomials never have larger degree.
    pub fn is_degree_compatible(self) -> bool {
        matches!(self, MonomialOrder::NegDegRevLex)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::NegDegRevLex => "negdegrevlex",
            MonomialOrder::NegLex => "neglex",
        }
    }

    /// Leading term of a nonzero polynomial.
    pub fn leading_term(self, p: &Polynomial) -> Result<(Rational, ExponentVector), OrderError> {
        p.terms()
            .max_by(|a, b| self.cmp(a.0, b.0))
            .map(|(e, c)| (c.clone(), e.clone()))
            .ok_or(OrderError::ZeroInput)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = OrderError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "negdegrevlex" | "ds" => Ok(MonomialOrder::NegDegRevLex),
            "neglex" | "ls" => Ok(MonomialOrder::NegLex),
            _ => Err(OrderError::Unknown(s.to_string())),
        }
    }
}

/// How monomial comparison combines with the component index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PositionRule {
    /// Compare monomials first; on ties the lower component index is larger.
    #[default]
    TermOverPosition,
}

/// Ordering on terms `x^a e_i` of a free module `O^r`.
///
/// An optional elimination split makes every term in a component below the
/// split larger than every term at or above it; inside each block the rule is
/// term-over-position. Syzygy computations use the split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub position: PositionRule,
    eliminate_below: usize,
    // degree-reverse-lexicographic well-ordering in place of `base`; only
    // for relations that are computed over the polynomial ring and then
    // localized
    global: bool,
}

impl ModuleOrder {
    pub fn new(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            position: PositionRule::TermOverPosition,
            eliminate_below: 0,
            global: false,
        }
    }

    /// Order in which components `0..upper` dominate components `upper..`.
    pub fn elimination(base: MonomialOrder, upper: usize) -> Self {
        ModuleOrder {
            eliminate_below: upper,
            ..Self::new(base)
        }
    }

    /// Global degrevlex elimination order, for computations whose result
    /// commutes with localization (syzygies, intersections).
    pub(crate) fn global_elimination(upper: usize) -> Self {
        ModuleOrder {
            eliminate_below: upper,
            global: true,
            ..Self::new(MonomialOrder::default())
        }
    }

    pub(crate) fn is_global(&self) -> bool {
        self.global
    }

    pub fn elimination_split(&self) -> usize {
        self.eliminate_below
    }

    pub fn block(&self, comp: usize) -> u8 {
        u8::from(comp >= self.eliminate_below && self.eliminate_below > 0)
    }

    pub fn cmp(&self, (ca, a): (usize, &ExponentVector), (cb, b): (usize, &ExponentVector)) -> Ordering {
        let (ba, bb) = (self.block(ca), self.block(cb));
        if ba != bb {
            return bb.cmp(&ba);
        }
        let mono = if self.global {
            // reversing the arguments of the local comparison flips the
            // degree test and keeps the revlex tie-break
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => self.base.cmp(a, b),
                o => o,
            }
        } else {
            self.base.cmp(a, b)
        };
        match mono {
            Ordering::Equal => cb.cmp(&ca),
            o => o,
        }
    }

    /// Whether a truncation by total degree is compatible with the order in
    /// the strong sense: terms of a product `t * g` never exceed `deg(t * lead(g))`
    /// from below.
    pub(crate) fn degree_compatible(&self) -> bool {
        self.base.is_degree_compatible() && self.eliminate_below == 0 && !self.global
    }
}

impl From<MonomialOrder> for ModuleOrder {
    fn from(base: MonomialOrder) -> Self {
        ModuleOrder::new(base)
    }
}
