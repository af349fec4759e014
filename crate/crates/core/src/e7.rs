//! The E7 compression into F³, F = ℤ/2×ℤ/2, and the combinatorics it carries.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::compression::CompressionMap;
use crate::error::{Error, Result};
use crate::fp::{FpSpace, FpVector};
use crate::graph::Graph;
use crate::roots::{Root, RootSystem, Stratum};

/// Images of α₁…α₇.
pub const PAPER_S: [&str; 7] = ["100", "030", "300", "111", "003", "001", "033"];

/// A map of F³ written digit-wise on (a, b, c).
pub type DigitMap = fn([u32; 3]) -> [u32; 3];

/// The four symmetries of Γ₇⁺ paired with the twist vertex they come from.
pub const TWIST_SYMMETRIES: [(usize, &str, DigitMap); 4] = [
    (7, "(a,b,c) -> (c,b,a)", |[a, b, c]| [c, b, a]),
    (6, "(a,b,c) -> (a,c,b)", |[a, b, c]| [a, c, b]),
    (4, "(a,b,c) -> ([1->2->3->1]a,b,c)", |[a, b, c]| [cycle_f(a), b, c]),
    (3, "(a,b,c) -> ([3<->2]a,b,c)", |[a, b, c]| [swap_f(a), b, c]),
];

fn cycle_f(a: u32) -> u32 {
    match a {
        0 => 0,
        3 => 1,
        x => x + 1,
    }
}

fn swap_f(a: u32) -> u32 {
    match a {
        2 => 3,
        3 => 2,
        x => x,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumImage {
    pub s: Stratum,
    pub members: Vec<String>,
    /// zₛ = f(ζₛ).
    pub anchor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistCheck {
    pub vertex: usize,
    pub symmetry: String,
    pub preserves_gamma7: bool,
    pub matches_twist: bool,
    /// First x ∈ Γ₇⁺ where the twist and the symmetry disagree: (x, twist, symmetry).
    pub first_mismatch: Option<(String, String, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    pub pairs: usize,
    pub mismatches: usize,
}

impl PairCheck {
    pub fn ok(&self) -> bool {
        self.mismatches == 0
    }

    fn add(&mut self, good: bool) {
        self.pairs += 1;
        if !good {
            self.mismatches += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossStratum {
    pub less: bool,
    pub orthogonal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleSix {
    pub alpha: Root,
    /// Points x with ⟨f⁻¹(x), α⟩ = −1, then their partners x ⊕ f(α).
    pub halves: [Vec<String>; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CubeCell {
    /// 0, 1, 2 for the zero coordinate a, b, c.
    pub face: usize,
    pub row: u32,
    pub col: u32,
}

/// A permutation group on 0..degree, stored element by element.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: HashSet<Vec<u8>>,
}

impl PermGroup {
    /// Closure of `generators` under composition.
    pub fn generate(degree: usize, generators: &[Vec<u8>]) -> Self {
        let identity: Vec<u8> = (0..degree as u8).collect();
        let mut elements = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let h: Vec<u8> = g.iter().map(|&i| s[i as usize]).collect();
                if elements.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        PermGroup { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, perm: &[u8]) -> bool {
        self.elements.contains(perm)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Vec<u8>> {
        self.elements.iter()
    }
}

/// The paper's E7 map together with the E8 system used in cross-checks.
#[derive(Debug, Clone)]
pub struct E7Model {
    map: CompressionMap,
    e8: RootSystem,
    /// Stratum of f⁻¹(x) for each vector index; `None` for 0.
    strata: Vec<Option<Stratum>>,
}

impl E7Model {
    pub fn standard() -> Self {
        let space = FpSpace::f_cubed();
        let s = PAPER_S.iter().map(|t| space.parse(t).expect("valid literal")).collect();
        let map = CompressionMap::new(RootSystem::e(7).expect("E7"), space, s).expect("paper S is valid");
        let strata = map.space().vectors().iter().map(|x| map.preimage(x).and_then(Stratum::of)).collect();
        E7Model { map, e8: RootSystem::e(8).expect("E8"), strata }
    }

    pub fn map(&self) -> &CompressionMap {
        &self.map
    }

    pub fn space(&self) -> &FpSpace {
        self.map.space()
    }

    pub fn system(&self) -> &RootSystem {
        self.map.system()
    }

    pub fn e8(&self) -> &RootSystem {
        &self.e8
    }

    pub fn vector(&self, s: &str) -> Result<FpVector> {
        self.space().parse(s)
    }

    pub fn f(&self, beta: &Root) -> FpVector {
        self.map.apply(beta)
    }

    /// f⁻¹ on V, landing in Δ⁺ ∪ {0}.
    pub fn f_inv(&self, x: &FpVector) -> Result<&Root> {
        self.map.preimage(x).ok_or_else(|| Error::NotInSet { vector: x.to_string(), set: "f(Δ⁺∪{0})" })
    }

    pub fn digits(x: &FpVector) -> [u32; 3] {
        let d = x.digits();
        [d[0], d[1], d[2]]
    }

    pub fn from_digits(&self, d: [u32; 3]) -> FpVector {
        let e: Vec<i64> = d.iter().flat_map(|&a| [(a >> 1) as i64, (a & 1) as i64]).collect();
        self.space().vector(&e).expect("six bits")
    }

    pub fn stratum_of(&self, x: &FpVector) -> Option<Stratum> {
        self.strata[self.space().index(x)]
    }

    /// Exactly one of a = a′, b = b′, c = c′.
    pub fn t_adjacent(x: &FpVector, y: &FpVector) -> bool {
        let (dx, dy) = (Self::digits(x), Self::digits(y));
        dx.iter().zip(&dy).filter(|(a, b)| a == b).count() == 1
    }

    pub fn t_graph(&self) -> Graph<FpVector> {
        Graph::from_relation(self.space().vectors(), Self::t_adjacent)
    }

    /// 𝓛(v), in index order.
    pub fn link(&self, v: &FpVector) -> Vec<FpVector> {
        self.space().vectors().into_iter().filter(|y| Self::t_adjacent(v, y)).collect()
    }

    /// 𝓛ᶜ(v): neither v nor adjacent to it.
    pub fn antilink(&self, v: &FpVector) -> Vec<FpVector> {
        self.space().vectors().into_iter().filter(|y| y != v && !Self::t_adjacent(v, y)).collect()
    }

    /// Γₛ⁺ = f(Δₛ⁺), in root enumeration order.
    pub fn gamma_plus(&self, s: Stratum) -> Vec<FpVector> {
        self.system().stratum_roots(s).expect("s ≤ 7").iter().map(|b| self.f(b)).collect()
    }

    pub fn z(&self, s: Stratum) -> FpVector {
        self.f(&self.system().zeta(s).expect("s ≤ 7"))
    }

    pub fn stratum_images(&self) -> Vec<StratumImage> {
        Stratum::up_to(7)
            .map(|s| StratumImage {
                s,
                members: self.gamma_plus(s).iter().map(FpVector::to_string).collect(),
                anchor: self.z(s).to_string(),
            })
            .collect()
    }

    fn set(v: impl IntoIterator<Item = FpVector>) -> BTreeSet<FpVector> {
        v.into_iter().collect()
    }

    /// Γ₇⁺ = 𝓛(0) = {abc with exactly one zero digit}.
    pub fn lemma27(&self) -> bool {
        let gamma7 = Self::set(self.gamma_plus(Stratum::new(7).expect("7")));
        let link0 = Self::set(self.link(&self.space().zero()));
        let one_zero = Self::set(
            self.space().vectors().into_iter().filter(|x| Self::digits(x).iter().filter(|&&d| d == 0).count() == 1),
        );
        gamma7.len() == 27 && gamma7 == link0 && gamma7 == one_zero
    }

    /// Γₛ⁺ = 𝓛(zₛ) ∩ ⋂_{7≥t>s} 𝓛ᶜ(z_t).
    pub fn otherstrata_first(&self, s: Stratum) -> bool {
        let mut rhs = Self::set(self.link(&self.z(s)));
        for t in Stratum::up_to(7).filter(|t| *t > s) {
            let anti = Self::set(self.antilink(&self.z(t)));
            rhs = rhs.intersection(&anti).cloned().collect();
        }
        Self::set(self.gamma_plus(s)) == rhs
    }

    /// Γₛ⁺ ⊕ zₛ = 𝓛(z₇) ∩ ⋂_{7>t≥s} 𝓛ᶜ(z_t).
    pub fn otherstrata_second(&self, s: Stratum) -> bool {
        let seven = Stratum::new(7).expect("7");
        let zs = self.z(s);
        let lhs = Self::set(self.gamma_plus(s).iter().map(|x| x + &zs));
        let mut rhs = Self::set(self.link(&self.z(seven)));
        for t in Stratum::up_to(7).filter(|t| *t >= s && *t < seven) {
            let anti = Self::set(self.antilink(&self.z(t)));
            rhs = rhs.intersection(&anti).cloned().collect();
        }
        lhs == rhs
    }

    /// Compares each listed symmetry with the Dynkin twist at its vertex,
    /// transported to Γ₇⁺ through f.
    pub fn twist_checks(&self) -> Result<Vec<TwistCheck>> {
        let gamma7 = self.gamma_plus(Stratum::new(7)?);
        let members = Self::set(gamma7.iter().cloned());
        TWIST_SYMMETRIES
            .iter()
            .map(|&(vertex, name, sym)| {
                let twist = self.system().dynkin_twist(vertex)?;
                let mut first_mismatch = None;
                let mut preserves = true;
                for x in &gamma7 {
                    let by_sym = self.from_digits(sym(Self::digits(x)));
                    preserves &= members.contains(&by_sym);
                    let by_twist = self.f(&twist.apply(self.f_inv(x)?));
                    if by_twist != by_sym && first_mismatch.is_none() {
                        first_mismatch = Some((x.to_string(), by_twist.to_string(), by_sym.to_string()));
                    }
                }
                Ok(TwistCheck {
                    vertex,
                    symmetry: name.to_string(),
                    preserves_gamma7: preserves,
                    matches_twist: first_mismatch.is_none(),
                    first_mismatch,
                })
            })
            .collect()
    }

    /// On Γₛ⁺: T-adjacency ⇔ (x|y) = 0 ⇔ ⟨f⁻¹x, f⁻¹y⟩ = 0, over all pairs x ≠ y.
    pub fn t_equals_o(&self, s: Stratum) -> PairCheck {
        let roots = self.system().stratum_roots(s).expect("s ≤ 7");
        let images: Vec<FpVector> = roots.iter().map(|b| self.f(b)).collect();
        let mut check = PairCheck { pairs: 0, mismatches: 0 };
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let t = Self::t_adjacent(&images[i], &images[j]);
                let o = self.space().eval(&images[i], &images[j]).expect("same space") == 0;
                let r = self.system().inner(&roots[i], &roots[j]) == 0;
                check.add(t == o && o == r);
            }
        }
        check
    }

    fn gamma7_set(&self) -> BTreeSet<FpVector> {
        Self::set(self.gamma_plus(Stratum::new(7).expect("7")))
    }

    /// The completion x₃ = x₁ ⊕ x₂ of an orthogonal pair in Γ₇⁺.
    pub fn orth_triple(&self, x1: &FpVector, x2: &FpVector) -> Result<FpVector> {
        let gamma7 = self.gamma7_set();
        for x in [x1, x2] {
            if !gamma7.contains(x) {
                return Err(Error::NotInSet { vector: x.to_string(), set: "Γ₇⁺" });
            }
        }
        if x1 == x2 || self.space().eval(x1, x2)? != 0 {
            return Err(Error::NotOrthogonal(x1.to_string(), x2.to_string()));
        }
        Ok(x1 + x2)
    }

    /// β₃ = −(α̂₈ + 2α₈ + β₁ + β₂) computed in E8 and read back in E7.
    pub fn beta3(&self, b1: &Root, b2: &Root) -> Result<Root> {
        let low = self.e8.lowest_root()?;
        let a8 = self.e8.simple_root(8);
        let sum = &(&low + &(2 * &a8)) + &(&b1.padded(8) + &b2.padded(8));
        let b3 = -&sum;
        if !self.e8.is_root(&b3) {
            return Err(Error::NotARoot(b3.to_string()));
        }
        b3.truncated(7).ok_or_else(|| Error::NotARoot(b3.to_string()))
    }

    /// x ⊕ f(α) ∈ Γₛ⁺, where s is the stratum of x.
    pub fn order_step(&self, x: &FpVector, alpha: &Root) -> Result<bool> {
        let s = self.stratum_of(x).ok_or_else(|| Error::NotInSet { vector: x.to_string(), set: "Γₛ⁺" })?;
        if !self.system().is_positive_root(alpha) {
            return Err(Error::NotPositiveRoot(alpha.to_string()));
        }
        if self.system().stratum(alpha)?.value() == 7 {
            return Err(Error::TopStratumRoot(alpha.to_string()));
        }
        Ok(self.stratum_of(&(x + &self.f(alpha))) == Some(s))
    }

    /// Hₛ rebuilt from images: x joined to x ⊕ f(αᵢ), i ≤ 6, inside Γₛ⁺.
    pub fn hasse_from_images(&self, s: Stratum) -> Graph<FpVector> {
        let vertices = self.gamma_plus(s);
        let steps: Vec<FpVector> = (1..=6).map(|i| self.f(&self.system().simple_root(i))).collect();
        Graph::from_relation(vertices, |x, y| steps.iter().any(|a| &(x + a) == y))
    }

    /// Order and orthogonality of α ∈ Δₛ⁺, β ∈ Δₜ⁺ (s ≤ t) read through the lifts.
    ///
    /// For s < t the lifts may coincide (α₆ < α₆+α₇ both lift to α₆+α₇), so
    /// α < β is read as α̃ ≤ β̃ there and as α̃ < β̃ when s = t.
    pub fn cross_stratum(&self, alpha: &Root, beta: &Root) -> Result<CrossStratum> {
        let sys = self.system();
        let (s, t) = (sys.stratum(alpha)?, sys.stratum(beta)?);
        if s > t {
            return Err(Error::InvalidStratum(s.value()));
        }
        let (at, bt) = (sys.tilde(alpha)?, sys.tilde(beta)?);
        let less = if s == t { sys.lt(&at, &bt) } else { sys.leq(&at, &bt) };
        let (fa, fb) = (self.f(&at), self.f(&bt));
        let mut form = self.space().eval(&fa, &fb)?;
        if s < t {
            form ^= self.space().eval(&self.z(s), &fb)?;
        }
        Ok(CrossStratum { less, orthogonal: alpha != beta && form == 0 })
    }

    /// Pairs α ∈ Δₛ⁺, β ∈ Δₜ⁺, s ≤ t, where "α < β iff α̃ < β̃" fails.
    pub fn strict_lift_exceptions(&self) -> Vec<(Root, Root)> {
        let sys = self.system();
        let mut out = Vec::new();
        for a in sys.positive_roots() {
            for b in sys.positive_roots() {
                if sys.stratum(a).ok() > sys.stratum(b).ok() {
                    continue;
                }
                let (at, bt) = (sys.tilde(a).expect("positive"), sys.tilde(b).expect("positive"));
                if sys.lt(a, b) != sys.lt(&at, &bt) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    fn e6_root(&self, alpha: &Root) -> Result<()> {
        if self.system().is_root(alpha) && alpha.coeff(7) == 0 {
            Ok(())
        } else {
            Err(Error::NotARoot(alpha.to_string()))
        }
    }

    /// r_α on Γ₇⁺: x ⊕ f(α) when that stays in Γ₇⁺, otherwise x.
    pub fn reflect(&self, alpha: &Root, x: &FpVector) -> Result<FpVector> {
        self.e6_root(alpha)?;
        if self.stratum_of(x).map(Stratum::value) != Some(7) {
            return Err(Error::NotInSet { vector: x.to_string(), set: "Γ₇⁺" });
        }
        let y = x + &self.f(alpha);
        Ok(if self.stratum_of(&y).map(Stratum::value) == Some(7) { y } else { x.clone() })
    }

    /// r_α as a permutation of the positions of `gamma_plus(7)`.
    pub fn reflection_perm(&self, alpha: &Root) -> Result<Vec<u8>> {
        let gamma7 = self.gamma_plus(Stratum::new(7)?);
        gamma7
            .iter()
            .map(|x| {
                let y = self.reflect(alpha, x)?;
                Ok(gamma7.iter().position(|g| *g == y).expect("closed") as u8)
            })
            .collect()
    }

    pub fn digit_perm(&self, map: impl Fn([u32; 3]) -> [u32; 3]) -> Option<Vec<u8>> {
        let gamma7 = self.gamma_plus(Stratum::new(7).expect("7"));
        gamma7
            .iter()
            .map(|x| {
                let y = self.from_digits(map(Self::digits(x)));
                gamma7.iter().position(|g| *g == y).map(|p| p as u8)
            })
            .collect()
    }

    /// One double six per α ∈ Δ⁺(E6).
    pub fn double_sixes(&self) -> Vec<DoubleSix> {
        let gamma7 = self.gamma_plus(Stratum::new(7).expect("7"));
        self.e6_positive()
            .into_iter()
            .map(|alpha| {
                let fa = self.f(&alpha);
                let mut lower = Vec::new();
                let mut upper = Vec::new();
                for x in &gamma7 {
                    let beta = self.f_inv(x).expect("image");
                    if self.system().inner(beta, &alpha) == -1 {
                        lower.push(x.to_string());
                        upper.push((x + &fa).to_string());
                    }
                }
                DoubleSix { alpha, halves: [lower, upper] }
            })
            .collect()
    }

    pub fn e6_positive(&self) -> Vec<Root> {
        self.system().positive_roots().iter().filter(|r| r.coeff(7) == 0).cloned().collect()
    }

    /// W(E6) acting on Γ₇⁺, generated by the simple reflections r_α₁ … r_α₆.
    pub fn weyl_e6_closure(&self) -> PermGroup {
        let gens: Vec<Vec<u8>> =
            (1..=6).map(|i| self.reflection_perm(&self.system().simple_root(i)).expect("E6 root")).collect();
        PermGroup::generate(27, &gens)
    }

    /// α̂₆, the lowest root of E6, as an E7 lattice vector.
    pub fn lowest_e6(&self) -> Root {
        RootSystem::e(6).expect("E6").lowest_root().expect("simple").padded(7)
    }

    pub fn cube_layout(&self, x: &FpVector) -> Result<CubeCell> {
        if self.stratum_of(x).map(Stratum::value) != Some(7) {
            return Err(Error::NotInSet { vector: x.to_string(), set: "Γ₇⁺" });
        }
        let d = Self::digits(x);
        let face = d.iter().position(|&a| a == 0).expect("one zero digit");
        let rest: Vec<u32> = d.iter().enumerate().filter(|&(k, _)| k != face).map(|(_, &a)| a).collect();
        Ok(CubeCell { face, row: rest[0], col: rest[1] })
    }

    /// Orthogonality read off the cube corner: on one face, different row and
    /// column; across faces, equal value in the coordinate both faces share.
    pub fn cube_orthogonal(&self, x: &FpVector, y: &FpVector) -> Result<bool> {
        let (cx, cy) = (self.cube_layout(x)?, self.cube_layout(y)?);
        if cx.face == cy.face {
            return Ok(cx.row != cy.row && cx.col != cy.col);
        }
        let shared = 3 - cx.face - cy.face;
        Ok(Self::digits(x)[shared] == Self::digits(y)[shared])
    }

    /// Generated subgroup of reflections compared to digit-wise GL(F) on one coordinate.
    pub fn coordinate_automorphisms_from_reflections(&self) -> Vec<(usize, bool)> {
        let low = self.lowest_e6();
        let a = |i| self.system().simple_root(i);
        let pairs = [(0, [a(1), a(3)]), (1, [low, a(2)]), (2, [a(6), a(5)])];
        pairs
            .into_iter()
            .map(|(coord, roots)| {
                let gens: Vec<Vec<u8>> = roots.iter().map(|r| self.reflection_perm(r).expect("E6 root")).collect();
                let generated: BTreeSet<Vec<u8>> = PermGroup::generate(27, &gens).elements().cloned().collect();
                let expected: BTreeSet<Vec<u8>> = s3_on_f()
                    .into_iter()
                    .map(|phi| {
                        self.digit_perm(|mut d| {
                            d[coord] = phi[d[coord] as usize];
                            d
                        })
                        .expect("GL(F) preserves Γ₇⁺")
                    })
                    .collect();
                (coord, generated == expected)
            })
            .collect()
    }

    /// The six coordinate permutations, as permutations of Γ₇⁺.
    pub fn coordinate_permutations(&self) -> Vec<Vec<u8>> {
        permutations3()
            .into_iter()
            .map(|pi| self.digit_perm(|d| [d[pi[0]], d[pi[1]], d[pi[2]]]).expect("permuting digits keeps one zero"))
            .collect()
    }

    /// Each coordinate permutation P conjugates the affine-diagram reflections
    /// as an automorphism of the three arms: P r_α P⁻¹ = r_τ(α).
    pub fn coordinate_permutations_match_affine_s3(&self) -> bool {
        let low = self.lowest_e6();
        let a = |i| self.system().simple_root(i);
        // arms (outer, inner) meeting at α₄, indexed by the coordinate they act on
        let arms = [[a(1), a(3)], [low, a(2)], [a(6), a(5)]];
        let refl = |r: &Root| self.reflection_perm(r).expect("E6 root");
        let centre = refl(&a(4));
        let mut seen = BTreeSet::new();
        for p in self.coordinate_permutations() {
            let inv = invert(&p);
            let conj = |g: &[u8]| -> Vec<u8> { (0..27).map(|i| p[g[inv[i] as usize] as usize]).collect() };
            if conj(&centre) != centre {
                return false;
            }
            let mut tau = [usize::MAX; 3];
            for (k, arm) in arms.iter().enumerate() {
                let images = [conj(&refl(&arm[0])), conj(&refl(&arm[1]))];
                match (0..3).find(|&m| images[0] == refl(&arms[m][0]) && images[1] == refl(&arms[m][1])) {
                    Some(m) => tau[k] = m,
                    None => return false,
                }
            }
            if !seen.insert(tau) {
                return false;
            }
        }
        seen.len() == 6
    }

    /// Translation by every t is an automorphism of the T-graph.
    pub fn t_graph_translation_invariant(&self) -> bool {
        let vs = self.space().vectors();
        vs.iter().all(|t| {
            vs.iter().all(|x| vs.iter().all(|y| Self::t_adjacent(x, y) == Self::t_adjacent(&(x + t), &(y + t))))
        })
    }

    /// Every (stratum, Γₛ⁺ size) pair.
    pub fn stratum_sizes(&self) -> BTreeMap<usize, usize> {
        Stratum::up_to(7).map(|s| (s.value(), self.gamma_plus(s).len())).collect()
    }
}

fn s3_on_f() -> Vec<[u32; 4]> {
    permutations3().into_iter().map(|p| [0, p[0] as u32 + 1, p[1] as u32 + 1, p[2] as u32 + 1]).collect()
}

fn permutations3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

fn invert(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}
