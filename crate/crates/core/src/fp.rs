//! Free modules over ℤ/p with a bilinear form, the norm-2 locus Γ and the
//! orthogonality graphs on it.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// How vectors are written. `BitPairs` groups pairs of ℤ/2 coordinates into
/// one digit of F = ℤ/2×ℤ/2 (so "033" is six bits 00 11 11).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Notation {
    Digits,
    BitPairs,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector {
    p: u32,
    entries: Vec<u32>,
    notation: Notation,
}

impl FpVector {
    /// Reduces every entry into 0..p.
    pub fn new(p: u32, entries: &[i64]) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        let entries = entries.iter().map(|&e| e.rem_euclid(p as i64) as u32).collect();
        Ok(FpVector { p, entries, notation: Notation::Digits })
    }

    pub fn zero(p: u32, dim: usize) -> Self {
        FpVector { p, entries: vec![0; dim], notation: Notation::Digits }
    }

    pub fn with_notation(mut self, notation: Notation) -> Self {
        self.notation = notation;
        self
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn notation(&self) -> Notation {
        self.notation
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Digits as displayed: one per coordinate, or one per bit pair.
    pub fn digits(&self) -> Vec<u32> {
        match self.notation {
            Notation::Digits => self.entries.clone(),
            Notation::BitPairs => self.entries.chunks(2).map(|c| 2 * c[0] + c.get(1).copied().unwrap_or(0)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> FpVector {
        let p = self.p as i64;
        FpVector {
            p: self.p,
            entries: self.entries.iter().map(|&e| (e as i64 * k).rem_euclid(p) as u32).collect(),
            notation: self.notation,
        }
    }

    pub fn checked_add(&self, other: &FpVector) -> Result<FpVector> {
        self.compatible(other)?;
        Ok(FpVector {
            p: self.p,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| (a + b) % self.p).collect(),
            notation: self.notation,
        })
    }

    /// Reduces into ℤ/q for a divisor q of p.
    pub fn reduce(&self, q: u32) -> Result<FpVector> {
        if q < 2 || !self.p.is_multiple_of(q) {
            return Err(Error::InvalidReduction { p: self.p, reduced: q });
        }
        Ok(FpVector { p: q, entries: self.entries.iter().map(|e| e % q).collect(), notation: self.notation })
    }

    fn compatible(&self, other: &FpVector) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }
}

impl fmt::Display for FpVector {
    /// Concatenated digits when p ≤ 10, otherwise comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.digits();
        if self.p <= 10 {
            digits.iter().try_for_each(|d| write!(f, "{d}"))
        } else {
            let parts: Vec<String> = digits.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl Add for &FpVector {
    type Output = FpVector;
    fn add(self, rhs: &FpVector) -> FpVector {
        self.checked_add(rhs).expect("incompatible vectors")
    }
}

impl Neg for &FpVector {
    type Output = FpVector;
    fn neg(self) -> FpVector {
        self.scale(-1)
    }
}

impl Sub for &FpVector {
    type Output = FpVector;
    fn sub(self, rhs: &FpVector) -> FpVector {
        self + &(-rhs)
    }
}

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpForm {
    p: u32,
    gram: Vec<Vec<u32>>,
}

impl FpForm {
    pub fn from_gram(p: u32, gram: &[Vec<i64>]) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        let m = gram.len();
        if let Some(row) = gram.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: row.len() });
        }
        let gram: Vec<Vec<u32>> =
            gram.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect()).collect();
        for i in 0..m {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Parse(format!("Gram matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(FpForm { p, gram })
    }

    /// Σ xᵢyᵢ on (ℤ/p)ᵐ.
    pub fn standard(p: u32, m: usize) -> Result<Self> {
        let gram: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect();
        Self::from_gram(p, &gram)
    }

    /// The symplectic form on F³ over ℤ/2: on each F-coordinate, (a|a′) = 1
    /// exactly when a, a′ are nonzero and different.
    pub fn f_cubed() -> Self {
        let mut gram = vec![vec![0i64; 6]; 6];
        for k in 0..3 {
            gram[2 * k][2 * k + 1] = 1;
            gram[2 * k + 1][2 * k] = 1;
        }
        Self::from_gram(2, &gram).expect("valid form")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<u32>] {
        &self.gram
    }

    /// xᵀ·G·y mod p.
    pub fn eval(&self, x: &FpVector, y: &FpVector) -> Result<u32> {
        for v in [x, y] {
            if v.p != self.p {
                return Err(Error::ModulusMismatch(self.p, v.p));
            }
            if v.dim() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: v.dim() });
            }
        }
        let p = self.p as u64;
        let mut total = 0u64;
        for (i, &xi) in x.entries.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row: u64 = self.gram[i].iter().zip(&y.entries).map(|(&g, &yj)| g as u64 * yj as u64).sum();
            total += xi as u64 * (row % p);
        }
        Ok((total % p) as u32)
    }

    /// Reduces the Gram matrix into ℤ/q for a divisor q of p.
    pub fn reduce(&self, q: u32) -> Result<FpForm> {
        if q < 2 || !self.p.is_multiple_of(q) {
            return Err(Error::InvalidReduction { p: self.p, reduced: q });
        }
        Ok(FpForm { p: q, gram: self.gram.iter().map(|r| r.iter().map(|g| g % q).collect()).collect() })
    }
}

/// V = (ℤ/p)ᵐ together with a form and a notation for its vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpSpace {
    form: FpForm,
    notation: Notation,
}

impl FpSpace {
    pub fn new(form: FpForm, notation: Notation) -> Result<Self> {
        if notation == Notation::BitPairs && (form.p != 2 || !form.dim().is_multiple_of(2)) {
            return Err(Error::DimensionMismatch { expected: 2 * form.dim().div_ceil(2), found: form.dim() });
        }
        Ok(FpSpace { form, notation })
    }

    /// (ℤ/p)ᵐ with the standard form.
    pub fn standard(p: u32, m: usize) -> Result<Self> {
        Self::new(FpForm::standard(p, m)?, Notation::Digits)
    }

    /// F³ with F = ℤ/2×ℤ/2 and its symplectic form.
    pub fn f_cubed() -> Self {
        Self::new(FpForm::f_cubed(), Notation::BitPairs).expect("valid space")
    }

    pub fn p(&self) -> u32 {
        self.form.p
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &FpForm {
        &self.form
    }

    pub fn notation(&self) -> Notation {
        self.notation
    }

    pub fn size(&self) -> usize {
        (self.p() as usize).pow(self.dim() as u32)
    }

    pub fn zero(&self) -> FpVector {
        FpVector::zero(self.p(), self.dim()).with_notation(self.notation)
    }

    pub fn vector(&self, entries: &[i64]) -> Result<FpVector> {
        if entries.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: entries.len() });
        }
        Ok(FpVector::new(self.p(), entries)?.with_notation(self.notation))
    }

    /// Adopts a vector of the right shape into this space's notation.
    pub fn adopt(&self, v: &FpVector) -> Result<FpVector> {
        if v.p != self.p() {
            return Err(Error::ModulusMismatch(self.p(), v.p));
        }
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.dim() });
        }
        Ok(v.clone().with_notation(self.notation))
    }

    pub fn eval(&self, x: &FpVector, y: &FpVector) -> Result<u32> {
        self.form.eval(x, y)
    }

    /// Parses the display notation ("033", "12000").
    pub fn parse(&self, s: &str) -> Result<FpVector> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        let digits: Vec<u32> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_>>()?
        };
        let entries: Vec<i64> = match self.notation {
            Notation::Digits => {
                if digits.iter().any(|&d| d >= self.p()) {
                    return Err(bad());
                }
                digits.iter().map(|&d| d as i64).collect()
            }
            Notation::BitPairs => {
                if digits.iter().any(|&d| d > 3) {
                    return Err(bad());
                }
                digits.iter().flat_map(|&d| [(d >> 1) as i64, (d & 1) as i64]).collect()
            }
        };
        self.vector(&entries)
    }

    /// Position of `v` in `vectors()`: the entries read as a base-p numeral.
    pub fn index(&self, v: &FpVector) -> usize {
        v.entries.iter().fold(0usize, |acc, &e| acc * self.p() as usize + e as usize)
    }

    pub fn from_index(&self, mut i: usize) -> FpVector {
        let p = self.p() as usize;
        let mut entries = vec![0i64; self.dim()];
        for e in entries.iter_mut().rev() {
            *e = (i % p) as i64;
            i /= p;
        }
        self.vector(&entries).expect("in range")
    }

    /// Every vector, in index order.
    pub fn vectors(&self) -> Vec<FpVector> {
        (0..self.size()).map(|i| self.from_index(i)).collect()
    }

    /// Γ = {x ≠ 0 : (x|x) ≡ 2 mod p}.
    pub fn gamma(&self) -> GammaSet {
        let two = 2 % self.p();
        let members = self
            .vectors()
            .into_iter()
            .filter(|x| !x.is_zero() && self.eval(x, x).expect("same space") == two)
            .collect();
        GammaSet { members }
    }

    /// Orthogonality graph on `vertices`.
    pub fn o_graph_on(&self, vertices: &[FpVector]) -> Graph<FpVector> {
        Graph::from_relation(vertices.to_vec(), |x, y| self.eval(x, y).expect("same space") == 0)
    }

    pub fn n_graph_on(&self, vertices: &[FpVector]) -> Graph<FpVector> {
        self.o_graph_on(vertices).complement()
    }

    pub fn o_graph(&self) -> Graph<FpVector> {
        self.o_graph_on(&self.vectors())
    }

    pub fn n_graph(&self) -> Graph<FpVector> {
        self.n_graph_on(&self.vectors())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    members: Vec<FpVector>,
}

impl GammaSet {
    pub fn members(&self) -> &[FpVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        self.members.binary_search(v).is_ok()
    }
}
