//! Simply-laced root systems in simple-root coordinates.
//!
//! Every lattice vector is an integer coefficient vector over the simple
//! roots, so all arithmetic is exact. Vertex and simple-root labels are
//! 1-based throughout (`simple_root(7)` is α₇), matching the Dynkin labels
//! used everywhere else in the crate.

mod strata;
mod twist;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg;

pub use strata::{hasse_diagram, Stratum};
pub use twist::DynkinTwist;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{c}")
    }
}

/// A lattice vector written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    /// The simple root αᵢ (1-based) in a lattice of the given rank.
    pub fn simple(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "simple root index {i} out of range 1..={rank}");
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Root(c)
    }

    /// Σ αᵢ over `range` (1-based, inclusive bounds handled by the caller's range).
    pub fn sum_of_simple(rank: usize, range: impl IntoIterator<Item = usize>) -> Self {
        let mut c = vec![0; rank];
        for i in range {
            c[i - 1] += 1;
        }
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    /// The coefficient of αᵢ (1-based); zero beyond the rank.
    pub fn coeff(&self, i: usize) -> i32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// Embeds into a lattice of rank `rank >= self.rank()` by zero padding.
    pub fn padded(&self, rank: usize) -> Root {
        assert!(rank >= self.rank());
        let mut c = self.0.clone();
        c.resize(rank, 0);
        Root(c)
    }

    /// Drops trailing coordinates; they must all be zero.
    pub fn truncated(&self, rank: usize) -> Option<Root> {
        if self.0.iter().skip(rank).any(|&c| c != 0) {
            return None;
        }
        Some(Root(self.0[..rank.min(self.rank())].to_vec()))
    }

    /// Largest index with a nonzero coefficient.
    pub fn support_top(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0).map(|i| i + 1)
    }

    /// Sort key used for every enumeration: height, then coefficients.
    pub fn order_key(&self) -> (i32, &[i32]) {
        (self.height(), &self.0)
    }
}

impl fmt::Display for Root {
    /// Digit strings when every coefficient is a single digit of one sign
    /// (`0011111`, `-0011111`), otherwise a bracketed list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|c| (0..=9).contains(c)) {
            self.0.iter().try_for_each(|c| write!(f, "{c}"))
        } else if self.0.iter().all(|c| (-9..=0).contains(c)) {
            write!(f, "-")?;
            self.0.iter().try_for_each(|c| write!(f, "{}", -c))
        } else {
            let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(s.to_string());
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            return inner
                .split(',')
                .map(|t| t.trim().parse::<i32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()
                .map(Root);
        }
        if s.contains(',') {
            return s
                .split(',')
                .map(|t| t.trim().parse::<i32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()
                .map(Root);
        }
        let (sign, digits) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s),
        };
        if digits.is_empty() {
            return Err(bad());
        }
        digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| sign * d as i32).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()
            .map(Root)
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<&Root> for i32 {
    type Output = Root;
    fn mul(self, rhs: &Root) -> Root {
        Root(rhs.0.iter().map(|c| self * c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Root {
            type Output = Root;
            fn $m(self, rhs: Root) -> Root {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Root> for Root {
            type Output = Root;
            fn $m(self, rhs: &Root) -> Root {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

/// A finite simply-laced root system with a fixed simple basis.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    /// All roots sorted by (height, coefficients).
    roots: Vec<Root>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    /// Builds Aₙ (n ≥ 1), Dₙ (n ≥ 3) or Eₙ (3 ≤ n ≤ 8).
    ///
    /// Eₙ uses the numbering v1-v3-v4-v5-v6-v7-v8 with v2 attached to v4, so
    /// Eₙ₋₁ sits inside Eₙ as the first n−1 simple roots.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let edges = dynkin_edges(family, rank).ok_or(Error::UnsupportedSystem { family, rank })?;
        let mut cartan = vec![vec![0; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        let positive = positive_roots_of(&cartan);
        let mut roots: Vec<Root> = positive.iter().map(|r| -r).chain(positive.iter().cloned()).collect();
        roots.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        Ok(RootSystem { family, rank, cartan, roots, positive, index })
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::build(Family::E, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Aᵢⱼ = ⟨αᵢ, αⱼ⟩.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn cartan_det(&self) -> i64 {
        let m: Vec<Vec<i64>> = self.cartan.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        linalg::det_int(&m)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..=self.rank).map(|i| self.simple_root(i)).collect()
    }

    pub fn zero(&self) -> Root {
        Root::zero(self.rank)
    }

    pub fn root_index(&self, beta: &Root) -> Option<usize> {
        self.index.get(beta).copied()
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        self.index.contains_key(beta)
    }

    pub fn is_positive_root(&self, beta: &Root) -> bool {
        beta.is_positive() && self.is_root(beta)
    }

    /// βᵀ·A·β′. Panics when the ranks differ; see [`RootSystem::checked_inner`].
    pub fn inner(&self, a: &Root, b: &Root) -> i32 {
        self.checked_inner(a, b).expect("inner product of vectors from different lattices")
    }

    pub fn checked_inner(&self, a: &Root, b: &Root) -> Result<i32> {
        for v in [a, b] {
            if v.rank() != self.rank {
                return Err(Error::RankMismatch(self.rank, v.rank()));
            }
        }
        let mut total = 0;
        for (i, &x) in a.coeffs().iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = &self.cartan[i];
            total += x * row.iter().zip(b.coeffs()).map(|(r, y)| r * y).sum::<i32>();
        }
        Ok(total)
    }

    pub fn norm(&self, a: &Root) -> i32 {
        self.inner(a, a)
    }

    /// Root-poset order: β ≤ β′ iff β′ − β has no negative coefficient.
    pub fn leq(&self, a: &Root, b: &Root) -> bool {
        assert_eq!(a.rank(), b.rank(), "rank mismatch");
        a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| x <= y)
    }

    pub fn lt(&self, a: &Root, b: &Root) -> bool {
        a != b && self.leq(a, b)
    }

    /// The literal one-step relation: β′ − β is itself a positive root.
    pub fn differs_by_positive_root(&self, a: &Root, b: &Root) -> bool {
        self.is_positive_root(&(b - a))
    }

    /// Pairs of distinct positive roots for which root-poset comparability and
    /// ⟨β, β′⟩ > 0 disagree.
    pub fn comparability_exceptions(&self) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for (i, a) in self.positive.iter().enumerate() {
            for b in &self.positive[i + 1..] {
                let comparable = self.leq(a, b) || self.leq(b, a);
                if comparable != (self.inner(a, b) > 0) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// The unique maximal root.
    pub fn highest_root(&self) -> Result<Root> {
        if !self.is_irreducible() {
            return Err(Error::UnsupportedSystem { family: self.family, rank: self.rank });
        }
        Ok(self.roots.last().expect("nonempty root system").clone())
    }

    /// The unique minimal root α̂ (the affine vertex decoration).
    pub fn lowest_root(&self) -> Result<Root> {
        self.highest_root().map(|r| -r)
    }

    /// r_α(β) = β − ⟨α, β⟩ α.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Root {
        beta - &(self.inner(alpha, beta) * alpha)
    }

    pub fn dynkin_graph(&self) -> Graph<usize> {
        let mut g = Graph::new((1..=self.rank).collect());
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.cartan[i][j] != 0 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_irreducible(&self) -> bool {
        let g = self.dynkin_graph();
        let mut seen = vec![false; self.rank];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Coordinates in ℝ⁸ multiplied by two, for E-type systems.
    ///
    /// ⟨β, β′⟩ equals the Euclidean dot product of the doubled vectors divided by 4.
    pub fn ambient_doubled(&self, beta: &Root) -> Result<[i32; 8]> {
        if self.family != Family::E || beta.rank() != self.rank {
            return Err(Error::UnsupportedSystem { family: self.family, rank: self.rank });
        }
        let mut out = [0; 8];
        for (i, &c) in beta.coeffs().iter().enumerate() {
            for (o, a) in out.iter_mut().zip(E8_SIMPLE_DOUBLED[i]) {
                *o += c * a;
            }
        }
        Ok(out)
    }
}

/// Doubled ambient E8 simple roots. α₂ is the negative of the half-integer
/// vector (½,½,½,−½,…) so that v2 attaches to v4 with ⟨α₂, α₄⟩ = −1.
const E8_SIMPLE_DOUBLED: [[i32; 8]; 8] = [
    [2, -2, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, 1, 1, 1, 1, 1],
    [0, 2, -2, 0, 0, 0, 0, 0],
    [0, 0, 2, -2, 0, 0, 0, 0],
    [0, 0, 0, 2, -2, 0, 0, 0],
    [0, 0, 0, 0, 2, -2, 0, 0],
    [0, 0, 0, 0, 0, 2, -2, 0],
    [0, 0, 0, 0, 0, 0, 2, -2],
];

fn dynkin_edges(family: Family, rank: usize) -> Option<Vec<(usize, usize)>> {
    match family {
        Family::A if rank >= 1 => Some((1..rank).map(|i| (i, i + 1)).collect()),
        Family::D if rank >= 3 => {
            let mut e: Vec<_> = (1..rank - 1).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank));
            Some(e)
        }
        Family::E if (3..=8).contains(&rank) => Some(
            [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
                .into_iter()
                .filter(|&(a, b)| a <= rank && b <= rank)
                .collect(),
        ),
        _ => None,
    }
}

/// Positive roots of the system with Cartan matrix `cartan`, closing the
/// simple roots under adding simple roots while the norm stays 2.
pub(crate) fn positive_roots_of(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let norm = |c: &[i32]| -> i32 { (0..n).map(|i| c[i] * (0..n).map(|j| cartan[i][j] * c[j]).sum::<i32>()).sum() };
    let mut found: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    let mut seen: std::collections::HashSet<Root> = found.iter().cloned().collect();
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let mut c = beta.coeffs().to_vec();
                c[i] += 1;
                if norm(&c) == 2 {
                    let r = Root(c);
                    if seen.insert(r.clone()) {
                        next.push(r);
                    }
                }
            }
        }
        found.extend(next.iter().cloned());
        frontier = next;
    }
    found.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    found
}
