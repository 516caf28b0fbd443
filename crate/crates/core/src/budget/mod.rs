//! Color budgets for sparse graph classes: topological-minor degeneracy,
//! apex graphs and graphs excluding a complete (topological) minor.

mod apex;
mod degenerate;

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::dynamic::Coloring;
use crate::graph::{Graph, Vertex};

pub use apex::color_apex;
pub use degenerate::color_degenerate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetError {
    #[error("k must be at least 1, got {0}")]
    InvalidK(usize),
    #[error("t must be at least 2, got {0}")]
    InvalidT(u64),
    #[error("t = {0} is outside the supported range")]
    Overflow(u64),
    #[error("a graph reached by the recursion has minimum degree {min_degree} > k = {k}")]
    DegeneracyViolation { k: usize, min_degree: usize, witness: Graph },
    #[error("the apex set is empty")]
    EmptyApexSet,
    #[error("removing the apex set does not leave a planar graph")]
    NotApex,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("planar piece is a five-cycle and the budget is four")]
    PlanarBaseTooSmall,
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Excluded {
    TopologicalMinor,
    Minor,
}

impl fmt::Display for Excluded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Excluded::TopologicalMinor => "topological",
            Excluded::Minor => "minor",
        })
    }
}

/// Excluded `K_t` as a minor or as a topological minor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BudgetMode {
    pub mode: Excluded,
    pub t: u64,
}

impl BudgetMode {
    pub fn new(mode: Excluded, t: u64) -> Result<Self, BudgetError> {
        if t < 2 {
            return Err(BudgetError::InvalidT(t));
        }
        Ok(BudgetMode { mode, t })
    }

    pub fn topological(t: u64) -> Result<Self, BudgetError> {
        Self::new(Excluded::TopologicalMinor, t)
    }

    pub fn minor(t: u64) -> Result<Self, BudgetError> {
        Self::new(Excluded::Minor, t)
    }
}

/// Number of colors that suffice for graphs without `K_t` in the given sense:
/// `10t² + 2` for topological minors, `⌊16t√(log₂ t)⌋ + 3` for minors.
pub fn budget(mode: BudgetMode) -> Result<u64, BudgetError> {
    let t = mode.t;
    if t < 2 {
        return Err(BudgetError::InvalidT(t));
    }
    let over = || BudgetError::Overflow(t);
    match mode.mode {
        Excluded::TopologicalMinor => t
            .checked_mul(t)
            .and_then(|s| s.checked_mul(10))
            .and_then(|s| s.checked_add(2))
            .ok_or_else(over),
        Excluded::Minor => {
            if t > 4096 {
                return Err(over());
            }
            Ok(floor_16t_sqrt_log2(t) + 3)
        }
    }
}

/// `⌊16t·√(log₂ t)⌋`, exact.
fn floor_16t_sqrt_log2(t: u64) -> u64 {
    if t.is_power_of_two() {
        let l = u128::from(t.trailing_zeros());
        let s = 256 * u128::from(t) * u128::from(t) * l;
        return isqrt(s) as u64;
    }
    let x = 16.0 * t as f64 * (t as f64).log2().sqrt();
    let m = x.floor() as u64;
    if x - (m as f64) > 1e-9 && (m as f64) + 1.0 - x > 1e-9 {
        return m;
    }
    // Near an integer: m ≤ 16t√(log₂ t) iff 2^(m²) ≤ t^(256t²).
    let fits = |m: u64| {
        let lhs = BigUint::from(1u8) << (m * m);
        let rhs = BigUint::from(t).pow((256 * t * t) as u32);
        lhs <= rhs
    };
    if fits(m + 1) {
        m + 1
    } else if fits(m) {
        m
    } else {
        m - 1
    }
}

fn isqrt(n: u128) -> u128 {
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Dynamic coloring of a graph assumed to exclude `K_t` in the given sense,
/// with at most `budget(mode)` colors. A [`BudgetError::DegeneracyViolation`]
/// shows the assumption is false.
pub fn color_no_kt(g: &Graph, mode: BudgetMode) -> Result<Coloring, BudgetError> {
    let b = budget(mode)?;
    let k = usize::try_from(b - 3).map_err(|_| BudgetError::Overflow(mode.t))?;
    color_degenerate(g, k)
}
