use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Family, Root, RootSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Stratum label s ∈ {1,3,4,5,6,7,8}; label 2 is folded into 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Stratum(u8);

impl Stratum {
    pub const ALL: [Stratum; 7] = [Stratum(1), Stratum(3), Stratum(4), Stratum(5), Stratum(6), Stratum(7), Stratum(8)];

    pub fn new(s: usize) -> Result<Self> {
        match s {
            1 | 3..=8 => Ok(Stratum(s as u8)),
            _ => Err(Error::InvalidStratum(s)),
        }
    }

    /// Stratum of a nonzero lattice vector: the largest t with βᵗ ≠ 0, with 2 read as 3.
    pub fn of(beta: &Root) -> Option<Self> {
        beta.support_top().map(|t| Stratum(if t == 2 { 3 } else { t as u8 }))
    }

    pub fn value(self) -> usize {
        self.0 as usize
    }

    /// s′ = max(3, s + 1).
    pub fn prime(self) -> usize {
        (self.value() + 1).max(3)
    }

    /// Strata present in Eₙ.
    pub fn up_to(n: usize) -> impl Iterator<Item = Stratum> {
        Self::ALL.into_iter().filter(move |s| s.value() <= n)
    }
}

impl TryFrom<usize> for Stratum {
    type Error = Error;
    fn try_from(s: usize) -> Result<Self> {
        Stratum::new(s)
    }
}

impl From<Stratum> for usize {
    fn from(s: Stratum) -> usize {
        s.value()
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl RootSystem {
    fn require_e(&self) -> Result<()> {
        if self.family == Family::E {
            Ok(())
        } else {
            Err(Error::UnsupportedSystem { family: self.family, rank: self.rank })
        }
    }

    pub fn stratum(&self, beta: &Root) -> Result<Stratum> {
        self.require_e()?;
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        Ok(Stratum::of(beta).expect("roots are nonzero"))
    }

    /// Δₛ⁺ in enumeration order.
    pub fn stratum_roots(&self, s: Stratum) -> Result<Vec<Root>> {
        self.require_e()?;
        if s.value() > self.rank {
            return Err(Error::InvalidStratum(s.value()));
        }
        Ok(self.positive.iter().filter(|b| Stratum::of(b) == Some(s)).cloned().collect())
    }

    /// ζₛ = Σ αᵢ for s′ ≤ i ≤ n, which is zero for s = n.
    pub fn zeta(&self, s: Stratum) -> Result<Root> {
        self.require_e()?;
        if s.value() > self.rank {
            return Err(Error::InvalidStratum(s.value()));
        }
        if s.value() == self.rank {
            return Ok(self.zero());
        }
        Ok(Root::sum_of_simple(self.rank, s.prime()..=self.rank))
    }

    /// β̃ = β + ζₛ, lifting a positive root into the top stratum.
    pub fn tilde(&self, beta: &Root) -> Result<Root> {
        if !self.is_positive_root(beta) {
            return Err(Error::NotPositiveRoot(beta.to_string()));
        }
        let s = self.stratum(beta)?;
        let lifted = beta + &self.zeta(s)?;
        if !self.is_positive_root(&lifted) {
            return Err(Error::NotPositiveRoot(lifted.to_string()));
        }
        Ok(lifted)
    }

    pub fn hasse(&self, subset: &[Root]) -> Graph<Root> {
        hasse_diagram(subset)
    }

    /// Hₛ, the Hasse diagram of Δₛ⁺.
    pub fn stratum_hasse(&self, s: Stratum) -> Result<Graph<Root>> {
        Ok(hasse_diagram(&self.stratum_roots(s)?))
    }
}

/// Covering relations of `subset` under the root-poset order, vertices in the given order.
pub fn hasse_diagram(subset: &[Root]) -> Graph<Root> {
    let le = |a: &Root, b: &Root| a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| x <= y);
    let lt = |a: &Root, b: &Root| a != b && le(a, b);
    let mut g = Graph::new(subset.to_vec());
    for (i, a) in subset.iter().enumerate() {
        for (j, b) in subset.iter().enumerate() {
            if lt(a, b) && !subset.iter().any(|c| lt(a, c) && lt(c, b)) {
                g.add_edge(i, j);
            }
        }
    }
    g
}
