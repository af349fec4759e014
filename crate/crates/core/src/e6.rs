//! The E6 compression into (ℤ/3)⁵ with the standard form.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::compression::CompressionMap;
use crate::e7::{PairCheck, PermGroup};
use crate::error::{Error, Result};
use crate::fp::{FpSpace, FpVector};
use crate::graph::Graph;
use crate::roots::{Root, RootSystem, Stratum};

/// Images of α₁…α₆.
pub const PAPER_S: [&str; 6] = ["12000", "00012", "01200", "00120", "00011", "11111"];

/// x ↦ (signs[i] · x[perm[i]])ᵢ on (ℤ/3)⁵.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub perm: [usize; 5],
    pub signs: [i8; 5],
}

impl Monomial {
    pub fn apply(&self, x: &[u32]) -> Vec<i64> {
        (0..5).map(|i| self.signs[i] as i64 * x[self.perm[i]] as i64).collect()
    }

    pub fn is_permutation(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistAction {
    pub vertex: usize,
    /// The twist transported to V, when it is a signed coordinate permutation.
    pub monomial: Option<Monomial>,
    pub preserves_top: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SquareCell {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone)]
pub struct E6Model {
    map: CompressionMap,
    strata: Vec<Option<Stratum>>,
}

impl E6Model {
    pub fn standard() -> Self {
        let space = FpSpace::standard(3, 5).expect("valid space");
        let s = PAPER_S.iter().map(|t| space.parse(t).expect("valid literal")).collect();
        let map = CompressionMap::new(RootSystem::e(6).expect("E6"), space, s).expect("paper S is valid");
        let strata = map
            .space()
            .vectors()
            .iter()
            .map(|x| map.preimage(x).filter(|r| r.is_positive()).and_then(Stratum::of))
            .collect();
        E6Model { map, strata }
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

    pub fn vector(&self, s: &str) -> Result<FpVector> {
        self.space().parse(s)
    }

    pub fn f(&self, beta: &Root) -> FpVector {
        self.map.apply(beta)
    }

    pub fn f_inv(&self, x: &FpVector) -> Result<&Root> {
        self.map.preimage(x).ok_or_else(|| Error::NotInSet { vector: x.to_string(), set: "Γ" })
    }

    /// Stratum of a positive-root image; `None` elsewhere.
    pub fn stratum_of(&self, x: &FpVector) -> Option<Stratum> {
        self.strata[self.space().index(x)]
    }

    pub fn gamma_plus(&self, s: Stratum) -> Vec<FpVector> {
        self.system().stratum_roots(s).expect("s ≤ 6").iter().map(|b| self.f(b)).collect()
    }

    /// {x : x₁x₂x₃x₄x₅ ≡ 1 mod 3}, in index order.
    pub fn product_one(&self) -> Vec<FpVector> {
        self.space().vectors().into_iter().filter(|x| x.entries().iter().product::<u32>() % 3 == 1).collect()
    }

    /// Γ₆⁺ equals the product-one set.
    pub fn top_stratum(&self) -> bool {
        let top: BTreeSet<FpVector> = self.gamma_plus(Stratum::new(6).expect("6")).into_iter().collect();
        let formula: BTreeSet<FpVector> = self.product_one().into_iter().collect();
        top.len() == 16 && top == formula
    }

    /// Searches the 3840 signed permutations for one agreeing with g on Γ.
    fn as_monomial(&self, g: impl Fn(&FpVector) -> FpVector) -> Option<Monomial> {
        let gamma = self.space().gamma();
        for perm in permutations5() {
            for mask in 0..32u32 {
                let signs: [i8; 5] = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
                let m = Monomial { perm, signs };
                let fits =
                    gamma.members().iter().all(|x| self.space().vector(&m.apply(x.entries())).expect("dim 5") == g(x));
                if fits {
                    return Some(m);
                }
            }
        }
        None
    }

    /// The Dynkin twists at v3…v6 transported to V through f.
    pub fn twist_actions(&self) -> Result<Vec<TwistAction>> {
        let top: BTreeSet<FpVector> = self.gamma_plus(Stratum::new(6)?).into_iter().collect();
        (3..=6)
            .map(|vertex| {
                let twist = self.system().dynkin_twist(vertex)?;
                let transported = |x: &FpVector| self.f(&twist.apply(self.f_inv(x).expect("Γ = f(Δ)")));
                let monomial = self.as_monomial(transported);
                let preserves_top = top.iter().all(|x| top.contains(&transported(x)));
                Ok(TwistAction { vertex, monomial, preserves_top })
            })
            .collect()
    }

    /// Order of the group generated by the coordinate permutations of the
    /// twists at v3, v4, v5 (120 means all of S₅).
    pub fn twist_permutation_group_order(&self) -> Result<usize> {
        let gens: Vec<Vec<u8>> = self
            .twist_actions()?
            .iter()
            .filter(|t| (3..=5).contains(&t.vertex))
            .map(|t| t.monomial.filter(Monomial::is_permutation).map(|m| m.perm.iter().map(|&i| i as u8).collect()))
            .collect::<Option<_>>()
            .ok_or(Error::InvalidImages("twist is not a coordinate permutation".into()))?;
        Ok(PermGroup::generate(5, &gens).order())
    }

    /// x ↦ (−x₁, −x₂, −x₃, −x₄, x₅).
    pub const SIGN_FLIP: Monomial = Monomial { perm: [0, 1, 2, 3, 4], signs: [-1, -1, -1, -1, 1] };

    /// Whether the product-one set is closed under every coordinate
    /// permutation and the sign flip.
    pub fn top_closed_under_symmetries(&self) -> bool {
        let top: BTreeSet<FpVector> = self.product_one().into_iter().collect();
        let maps = permutations5().into_iter().map(|perm| Monomial { perm, signs: [1; 5] }).chain([Self::SIGN_FLIP]);
        for m in maps {
            for x in &top {
                if !top.contains(&self.space().vector(&m.apply(x.entries())).expect("dim 5")) {
                    return false;
                }
            }
        }
        true
    }

    /// xᵢ = yᵢ for exactly one i.
    pub fn t_adjacent(x: &FpVector, y: &FpVector) -> bool {
        x.entries().iter().zip(y.entries()).filter(|(a, b)| a == b).count() == 1
    }

    pub fn t_graph(&self) -> Graph<FpVector> {
        Graph::from_relation(self.space().vectors(), Self::t_adjacent)
    }

    pub fn link(&self, v: &FpVector) -> Vec<FpVector> {
        self.space().vectors().into_iter().filter(|y| Self::t_adjacent(v, y)).collect()
    }

    pub fn t_equals_o(&self, s: Stratum) -> PairCheck {
        let roots = self.system().stratum_roots(s).expect("s ≤ 6");
        let images: Vec<FpVector> = roots.iter().map(|b| self.f(b)).collect();
        let mut check = PairCheck { pairs: 0, mismatches: 0 };
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let t = Self::t_adjacent(&images[i], &images[j]);
                let o = self.space().eval(&images[i], &images[j]).expect("same space") == 0;
                let r = self.system().inner(&roots[i], &roots[j]) == 0;
                check.pairs += 1;
                if !(t == o && o == r) {
                    check.mismatches += 1;
                }
            }
        }
        check
    }

    /// x + f(α) ∈ Γₛ⁺, where s is the stratum of x.
    pub fn order_step6(&self, x: &FpVector, alpha: &Root) -> Result<bool> {
        let s = self.stratum_of(x).ok_or_else(|| Error::NotInSet { vector: x.to_string(), set: "Γₛ⁺" })?;
        if !self.system().is_positive_root(alpha) {
            return Err(Error::NotPositiveRoot(alpha.to_string()));
        }
        Ok(self.stratum_of(&(x + &self.f(alpha))) == Some(s))
    }

    /// Hₛ rebuilt from images: x joined to x + f(αᵢ) inside Γₛ⁺.
    pub fn hasse_from_images(&self, s: Stratum) -> Graph<FpVector> {
        let vertices = self.gamma_plus(s);
        let steps: Vec<FpVector> = self.system().simple_roots().iter().map(|a| self.f(a)).collect();
        Graph::from_relation(vertices, |x, y| steps.iter().any(|a| &(x + a) == y || &(y + a) == x))
    }

    /// Rows from (x₁, x₂), columns from (x₃, x₄), each pair read as a binary
    /// number with 1 ↦ 0 and 2 ↦ 1; x₅ is then forced.
    pub fn square_layout(&self, x: &FpVector) -> Result<SquareCell> {
        if self.stratum_of(x).map(Stratum::value) != Some(6) {
            return Err(Error::NotInSet { vector: x.to_string(), set: "Γ₆⁺" });
        }
        let e = x.entries();
        let bit = |v: u32| (v - 1) as usize;
        Ok(SquareCell { row: 2 * bit(e[0]) + bit(e[1]), col: 2 * bit(e[2]) + bit(e[3]) })
    }

    /// Hasse edges of H₆ joining horizontally or vertically adjacent cells,
    /// and the total number of edges.
    pub fn square_hasse_locality(&self) -> (usize, usize) {
        let h = self.hasse_from_images(Stratum::new(6).expect("6"));
        let mut local = 0;
        for (u, v) in h.edges() {
            let (a, b) = (self.square_layout(h.label(u)).expect("top"), self.square_layout(h.label(v)).expect("top"));
            if a.row.abs_diff(b.row) + a.col.abs_diff(b.col) == 1 {
                local += 1;
            }
        }
        (local, h.edge_count())
    }
}

fn permutations5() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let mut p = [0, 1, 2, 3, 4];
    heap(5, &mut p, &mut out);
    out.sort();
    out
}

fn heap(k: usize, p: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
    if k == 1 {
        out.push(*p);
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}
