//! Homomorphisms from a root lattice into (ℤ/p)ᵐ that preserve the inner
//! product mod p, and the checks that they are injective on roots.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{FpForm, FpSpace, FpVector, Notation};
use crate::linalg;
use crate::roots::{Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// (sᵢ|sⱼ) differs from Aᵢⱼ mod p.
    Form { i: usize, j: usize, expected: u32, found: u32 },
    /// sᵢ = sⱼ with p = 2.
    Duplicate { i: usize, j: usize },
}

/// Outcome of checking a candidate S against the Cartan matrix.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SCheck {
    pub violations: Vec<Violation>,
}

impl SCheck {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks (sᵢ|sⱼ) ≡ ⟨αᵢ, αⱼ⟩ mod p for all i ≤ j, and distinctness when p = 2.
/// Indices in the report are 1-based.
pub fn check_s(system: &RootSystem, space: &FpSpace, s: &[FpVector]) -> Result<SCheck> {
    if s.len() != system.rank() {
        return Err(Error::DimensionMismatch { expected: system.rank(), found: s.len() });
    }
    let p = space.p();
    let mut report = SCheck::default();
    for i in 0..s.len() {
        for j in i..s.len() {
            let found = space.eval(&s[i], &s[j])?;
            let expected = (system.cartan()[i][j] as i64).rem_euclid(p as i64) as u32;
            if found != expected {
                report.violations.push(Violation::Form { i: i + 1, j: j + 1, expected, found });
            }
            if p == 2 && i != j && s[i] == s[j] {
                report.violations.push(Violation::Duplicate { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(report)
}

/// f: Λ → V with f(αᵢ) = sᵢ, tabulated on its domain: Δ⁺ ∪ {0} for p = 2
/// and Δ for p > 2.
#[derive(Debug, Clone)]
pub struct CompressionMap {
    system: RootSystem,
    space: FpSpace,
    s: Vec<FpVector>,
    domain: Vec<Root>,
    table: Vec<FpVector>,
    inverse: HashMap<FpVector, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityReport {
    pub checked: usize,
    /// Two domain elements with the same image.
    pub collision: Option<(Root, Root)>,
    /// A root whose image lies outside Γ.
    pub outside_gamma: Option<Root>,
}

impl InjectivityReport {
    pub fn ok(&self) -> bool {
        self.collision.is_none() && self.outside_gamma.is_none()
    }
}

impl CompressionMap {
    pub fn new(system: RootSystem, space: FpSpace, s: Vec<FpVector>) -> Result<Self> {
        let s: Vec<FpVector> = s.iter().map(|v| space.adopt(v)).collect::<Result<_>>()?;
        let report = check_s(&system, &space, &s)?;
        if !report.ok() {
            return Err(Error::InvalidImages(format!("{:?}", report.violations)));
        }
        if space.dim() < system.rank() {
            assert_eq!(
                system.cartan_det().rem_euclid(space.p() as i64),
                0,
                "a compression below full rank forces p | det(A)"
            );
        }
        let domain: Vec<Root> = if space.p() == 2 {
            std::iter::once(system.zero()).chain(system.positive_roots().iter().cloned()).collect()
        } else {
            system.roots().to_vec()
        };
        let mut map = CompressionMap { system, space, s, domain, table: Vec::new(), inverse: HashMap::new() };
        map.table = map.domain.iter().map(|r| map.apply(r)).collect();
        for (k, img) in map.table.iter().enumerate() {
            map.inverse.entry(img.clone()).or_insert(k);
        }
        Ok(map)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn space(&self) -> &FpSpace {
        &self.space
    }

    pub fn p(&self) -> u32 {
        self.space.p()
    }

    pub fn s(&self) -> &[FpVector] {
        &self.s
    }

    pub fn domain(&self) -> &[Root] {
        &self.domain
    }

    /// (β, f(β)) over the domain, in domain order.
    pub fn table(&self) -> impl Iterator<Item = (&Root, &FpVector)> {
        self.domain.iter().zip(&self.table)
    }

    /// f(β) = Σ βⁱ sᵢ for any lattice vector β.
    pub fn apply(&self, beta: &Root) -> FpVector {
        assert_eq!(beta.rank(), self.system.rank(), "rank mismatch");
        let p = self.p() as i64;
        let mut acc = vec![0i64; self.space.dim()];
        for (c, s) in beta.coeffs().iter().zip(&self.s) {
            for (a, &e) in acc.iter_mut().zip(s.entries()) {
                *a = (*a + *c as i64 * e as i64).rem_euclid(p);
            }
        }
        self.space.vector(&acc).expect("dimension matches")
    }

    /// The domain element mapping to `x`, if any.
    pub fn preimage(&self, x: &FpVector) -> Option<&Root> {
        self.inverse.get(x).map(|&k| &self.domain[k])
    }

    /// Injective on the domain with every root image in Γ.
    pub fn verify_injective(&self) -> InjectivityReport {
        let gamma = self.space.gamma();
        let mut seen: HashMap<&FpVector, &Root> = HashMap::new();
        let mut report = InjectivityReport { checked: self.domain.len(), collision: None, outside_gamma: None };
        for (root, img) in self.table() {
            if let Some(prev) = seen.insert(img, root) {
                report.collision.get_or_insert_with(|| (prev.clone(), root.clone()));
            }
            if !root.is_zero() && !gamma.contains(img) {
                report.outside_gamma.get_or_insert_with(|| root.clone());
            }
        }
        report
    }

    /// First pair of roots with (f(β)|f(β′)) ≢ ⟨β, β′⟩ mod p.
    pub fn inner_product_violation(&self) -> Option<(Root, Root)> {
        let p = self.p() as i64;
        let roots = self.system.roots();
        let images: Vec<FpVector> = roots.iter().map(|r| self.apply(r)).collect();
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate().skip(i) {
                let lhs = self.space.eval(&images[i], &images[j]).expect("same space") as i64;
                if lhs != (self.system.inner(a, b) as i64).rem_euclid(p) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    /// First pair β ≠ β′ where ⟨β,β′⟩ = 0 and (f(β)|f(β′)) = 0 disagree.
    /// For p = 2 the pairs β′ = −β are skipped, since f(β) = f(−β) there.
    pub fn orthogonality_violation(&self) -> Option<(Root, Root)> {
        let roots = self.system.roots();
        let images: Vec<FpVector> = roots.iter().map(|r| self.apply(r)).collect();
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate().skip(i + 1) {
                if self.p() == 2 && (a + b).is_zero() {
                    continue;
                }
                let lhs = self.space.eval(&images[i], &images[j]).expect("same space") == 0;
                if lhs != (self.system.inner(a, b) == 0) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn to_export(&self) -> MapExport {
        MapExport {
            system: self.system.name(),
            p: self.p(),
            dim: self.space.dim(),
            notation: self.space.notation(),
            gram: self.space.form().gram().to_vec(),
            s: self.s.iter().map(FpVector::to_string).collect(),
            table: self.table().map(|(r, x)| TableRow { root: r.coeffs().to_vec(), image: x.to_string() }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapExport {
    pub system: String,
    pub p: u32,
    pub dim: usize,
    pub notation: Notation,
    pub gram: Vec<Vec<u32>>,
    #[serde(rename = "S")]
    pub s: Vec<String>,
    pub table: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub root: Vec<i32>,
    pub image: String,
}

/// V = (ℤ/p)ⁿ / ker(A mod p) with the induced form, S the images of the basis.
///
/// Cosets are represented by their coordinates outside the pivot columns of
/// the reduced echelon basis of the kernel.
pub fn canonical_compression(system: &RootSystem, p: u32) -> Result<CompressionMap> {
    if !linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let det = system.cartan_det();
    if det.rem_euclid(p as i64) != 0 {
        return Err(Error::NoCompression { p, det });
    }
    let n = system.rank();
    let a: Vec<Vec<i64>> = system.cartan().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let kernel = linalg::kernel_mod(&a, p)?;
    let kernel_rows: Vec<Vec<i64>> = kernel.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
    let (basis, pivots) =
        if kernel_rows.is_empty() { (Vec::new(), Vec::new()) } else { linalg::rref_mod(&kernel_rows, p)? };
    let kept: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let project = |e: &[i64]| -> Vec<i64> {
        let mut e: Vec<i64> = e.iter().map(|x| x.rem_euclid(p as i64)).collect();
        for (row, &pc) in basis.iter().zip(&pivots) {
            let f = e[pc];
            for (x, &r) in e.iter_mut().zip(row) {
                *x = (*x - f * r as i64).rem_euclid(p as i64);
            }
        }
        kept.iter().map(|&c| e[c]).collect()
    };
    let gram: Vec<Vec<i64>> = kept.iter().map(|&i| kept.iter().map(|&j| a[i][j]).collect()).collect();
    let space = FpSpace::new(FpForm::from_gram(p, &gram)?, Notation::Digits)?;
    let s: Vec<FpVector> = (0..n)
        .map(|i| {
            let e: Vec<i64> = (0..n).map(|k| i64::from(k == i)).collect();
            space.vector(&project(&e))
        })
        .collect::<Result<_>>()?;
    let distinct = (0..n).all(|i| (i + 1..n).all(|j| s[i] != s[j]));
    if !distinct || s.iter().any(FpVector::is_zero) {
        return Err(Error::DegenerateImages);
    }
    CompressionMap::new(system.clone(), space, s)
}

/// f′ = ρ∘f where ρ reduces coefficients from ℤ/p to ℤ/p′.
pub fn reduce_composite(map: &CompressionMap, reduced: u32) -> Result<CompressionMap> {
    let p = map.p();
    if reduced == p {
        return Ok(map.clone());
    }
    if reduced <= 2 || !p.is_multiple_of(reduced) {
        return Err(Error::InvalidReduction { p, reduced });
    }
    let space = FpSpace::new(map.space.form().reduce(reduced)?, map.space.notation())?;
    let s = map.s.iter().map(|v| v.reduce(reduced)).collect::<Result<Vec<_>>>()?;
    CompressionMap::new(map.system.clone(), space, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    fn e7_paper_map() -> CompressionMap {
        let v = FpSpace::f_cubed();
        let s = ["100", "030", "300", "111", "003", "001", "033"].iter().map(|t| v.parse(t).unwrap()).collect();
        CompressionMap::new(RootSystem::e(7).unwrap(), v, s).unwrap()
    }

    #[test]
    fn duplicate_images_are_reported() {
        let v = FpSpace::f_cubed();
        let mut s: Vec<FpVector> =
            ["100", "030", "300", "111", "003", "001", "033"].iter().map(|t| v.parse(t).unwrap()).collect();
        s[0] = s[2].clone();
        let report = check_s(&RootSystem::e(7).unwrap(), &v, &s).unwrap();
        assert!(report.violations.contains(&Violation::Duplicate { i: 1, j: 3 }));
        assert!(check_s(&RootSystem::e(7).unwrap(), &v, &s[..6]).is_err());
    }

    #[test]
    fn e7_paper_map_basics() {
        let f = e7_paper_map();
        let e7 = f.system().clone();
        let a = |i| e7.simple_root(i);
        assert_eq!(f.apply(&a(7)).to_string(), "033");
        assert_eq!(f.apply(&e7.zero()).to_string(), "000");
        assert_eq!(f.apply(&(a(6) + a(7))).to_string(), "032");
        assert_eq!(f.domain().len(), 64);
        assert!(f.verify_injective().ok());
        assert_eq!(f.inner_product_violation(), None);
        assert_eq!(f.orthogonality_violation(), None);
        assert_eq!(f.preimage(&f.space().parse("033").unwrap()), Some(&a(7)));
    }

    #[test]
    fn canonical_quotients() {
        let e7 = RootSystem::e(7).unwrap();
        let f = canonical_compression(&e7, 2).unwrap();
        assert_eq!(f.space().dim(), 6);
        assert!(f.verify_injective().ok());
        let e6 = RootSystem::e(6).unwrap();
        let g = canonical_compression(&e6, 3).unwrap();
        assert_eq!(g.space().dim(), 5);
        assert!(g.verify_injective().ok());
        assert_eq!(g.inner_product_violation(), None);
        let e8 = RootSystem::e(8).unwrap();
        assert_eq!(canonical_compression(&e8, 2).unwrap_err(), Error::NoCompression { p: 2, det: 1 });
        assert_eq!(canonical_compression(&e7, 4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn tiny_quotients_are_degenerate() {
        let d4 = RootSystem::build(Family::D, 4).unwrap();
        assert_eq!(canonical_compression(&d4, 2).unwrap_err(), Error::DegenerateImages);
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(canonical_compression(&a2, 3).unwrap_err(), Error::DegenerateImages);
    }

    #[test]
    fn a2_mod_three_is_not_injective() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let v = FpSpace::new(FpForm::from_gram(3, &[vec![2]]).unwrap(), Notation::Digits).unwrap();
        let one = v.vector(&[1]).unwrap();
        let f = CompressionMap::new(a2.clone(), v, vec![one.clone(), one]).unwrap();
        let report = f.verify_injective();
        assert_eq!(report.collision, Some((-a2.simple_root(1), -a2.simple_root(2))));
    }

    #[test]
    fn composite_reduction() {
        let e6 = RootSystem::e(6).unwrap();
        let a: Vec<Vec<i64>> = e6.cartan().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let space = FpSpace::new(FpForm::from_gram(9, &a).unwrap(), Notation::Digits).unwrap();
        let s: Vec<FpVector> =
            (0..6).map(|i| space.vector(&(0..6).map(|k| i64::from(k == i)).collect::<Vec<_>>()).unwrap()).collect();
        let lift = CompressionMap::new(e6.clone(), space, s).unwrap();
        assert!(lift.verify_injective().ok());
        let reduced = reduce_composite(&lift, 3).unwrap();
        assert_eq!(reduced.p(), 3);
        assert!(reduced.verify_injective().ok());
        assert_eq!(reduced.inner_product_violation(), None);
        assert_eq!(reduce_composite(&lift, 9).unwrap().s(), lift.s());
        assert!(reduce_composite(&lift, 2).is_err());
        assert!(reduce_composite(&lift, 1).is_err());
        assert!(reduce_composite(&lift, 4).is_err());
    }
}
