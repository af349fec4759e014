//! Order ideals of the strata posets, the open maps hₛ, the isomorphisms
//! ψₛ: 𝒥(Δₛ⁺) → Δₛ′⁺, and the symmetries of 𝒥(Δ₇⁺).
//!
//! Roots of a stratum are numbered in enumeration order (height, then
//! coefficients); bit i of an ideal is the i-th root.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::e7::E7Model;
use crate::error::{Error, Result};
use crate::fp::FpVector;
use crate::graph::Graph;
use crate::roots::{Root, RootSystem, Stratum};

/// Δₛ⁺ ⊂ Δ⁺(E8) under the root-poset order.
#[derive(Debug, Clone)]
pub struct StratumPoset {
    s: Stratum,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    /// Strictly smaller elements.
    below: Vec<u64>,
    hasse: Graph<Root>,
}

impl StratumPoset {
    pub fn new(e8: &RootSystem, s: Stratum) -> Result<Self> {
        if e8.rank() != 8 {
            return Err(Error::RankMismatch(e8.rank(), 8));
        }
        let roots = e8.stratum_roots(s)?;
        let n = roots.len();
        let mut below = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && e8.leq(&roots[j], &roots[i]) {
                    below[i] |= 1 << j;
                }
            }
        }
        let mut hasse = Graph::new(roots.clone());
        for i in 0..n {
            for j in bits(below[i]) {
                let through = bits(below[i]).any(|k| below[k] >> j & 1 == 1);
                if !through {
                    hasse.add_edge(i, j);
                }
            }
        }
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        Ok(StratumPoset { s, roots, index, below, hasse })
    }

    pub fn stratum(&self) -> Stratum {
        self.s
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn position(&self, beta: &Root) -> Option<usize> {
        self.index.get(beta).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.below[j] >> i & 1 == 1
    }

    pub fn hasse(&self) -> &Graph<Root> {
        &self.hasse
    }

    fn full(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn is_ideal_bits(&self, set: u64) -> bool {
        set & !self.full() == 0 && bits(set).all(|i| self.below[i] & !set == 0)
    }

    pub fn ideal(&self, members: &[Root]) -> Result<OrderIdeal> {
        let mut set = 0u64;
        for beta in members {
            let i = self.position(beta).ok_or_else(|| Error::NotPositiveRoot(beta.to_string()))?;
            set |= 1 << i;
        }
        self.ideal_from_bits(set)
    }

    pub fn ideal_from_bits(&self, set: u64) -> Result<OrderIdeal> {
        if self.is_ideal_bits(set) {
            Ok(OrderIdeal { s: self.s, bits: set })
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    /// {β′ : β′ ≤ roots[i]}.
    pub fn down_set(&self, i: usize) -> OrderIdeal {
        OrderIdeal { s: self.s, bits: self.below[i] | 1 << i }
    }

    pub fn members<'a>(&'a self, j: &OrderIdeal) -> Vec<&'a Root> {
        bits(j.bits).map(|i| &self.roots[i]).collect()
    }

    /// Ideals of the subposet on `within`, sorted by bitset.
    pub fn ideals_within(&self, within: u64) -> Vec<OrderIdeal> {
        let order: Vec<usize> = bits(within).collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((k, cur)) = stack.pop() {
            if k == order.len() {
                out.push(OrderIdeal { s: self.s, bits: cur });
                continue;
            }
            let i = order[k];
            stack.push((k + 1, cur));
            if self.below[i] & within & !cur == 0 {
                stack.push((k + 1, cur | 1 << i));
            }
        }
        out.sort();
        out
    }
}

/// Set bits of `x`, lowest first.
fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let i = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(i)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderIdeal {
    s: Stratum,
    bits: u64,
}

impl OrderIdeal {
    pub fn stratum(&self) -> Stratum {
        self.s
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        bits(self.bits)
    }
}

/// All order ideals of the poset, sorted by bitset (so J ⊂ K puts J first).
pub fn enumerate_ideals(poset: &StratumPoset) -> Vec<OrderIdeal> {
    poset.ideals_within(poset.full())
}

/// A labelling Δₛ⁺ → {1, …, s}, indexed like the poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenMap {
    pub s: Stratum,
    pub table: Vec<usize>,
}

impl OpenMap {
    pub fn label(&self, i: usize) -> usize {
        self.table[i]
    }

    /// hₛ(αₛ) = s, Hasse edges go to Dynkin edges, and the neighbours of
    /// every vertex cover the Dynkin neighbours of its label.
    pub fn is_open(&self, poset: &StratumPoset) -> bool {
        let s = self.s.value();
        let dyn_graph = dynkin(s);
        let start = poset.position(&Root::simple(8, s));
        if start.map(|i| self.table[i]) != Some(s) || self.table.len() != poset.len() {
            return false;
        }
        let h = poset.hasse();
        (0..poset.len()).all(|v| {
            let lv = self.table[v];
            if !(1..=s).contains(&lv) {
                return false;
            }
            let image: BTreeSet<usize> = h.neighbours(v).map(|u| self.table[u]).collect();
            let wanted: BTreeSet<usize> = dyn_graph.neighbours(lv - 1).map(|u| u + 1).collect();
            image == wanted
        })
    }
}

/// Every open map for one stratum, found by exhausting the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenMapSearch {
    pub s: Stratum,
    pub solutions: Vec<OpenMap>,
    /// Partial labellings visited.
    pub nodes: u64,
}

impl OpenMapSearch {
    pub fn unique(&self) -> Option<&OpenMap> {
        match self.solutions.as_slice() {
            [h] => Some(h),
            _ => None,
        }
    }

    pub fn exists(&self) -> bool {
        !self.solutions.is_empty()
    }
}

fn dynkin(s: usize) -> Graph<usize> {
    RootSystem::e(s).expect("3 ≤ s ≤ 8").dynkin_graph()
}

/// Backtracking over labels in Hasse-BFS order from αₛ, pruning on the
/// homomorphism condition and on local surjectivity as soon as a vertex has
/// all its neighbours labelled. The search continues past the first hit.
pub fn find_open_map(poset: &StratumPoset) -> Result<OpenMapSearch> {
    let s = poset.stratum().value();
    if s < 3 {
        return Err(Error::InvalidStratum(s));
    }
    let dyn_graph = dynkin(s);
    let dyn_mask: Vec<u16> = (1..=s).map(|l| dyn_graph.neighbours(l - 1).fold(0u16, |m, u| m | 1 << (u + 1))).collect();
    let h = poset.hasse();
    let n = poset.len();
    let start = poset.position(&Root::simple(8, s)).expect("αₛ lies in Δₛ⁺");

    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in std::iter::once(start).chain(0..n) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in h.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| h.neighbours(v).collect()).collect();

    struct Search<'a> {
        order: &'a [usize],
        nbrs: &'a [Vec<usize>],
        dyn_mask: &'a [u16],
        labels: Vec<usize>,
        start: usize,
        s: usize,
        nodes: u64,
        solutions: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn complete_ok(&self, v: usize) -> bool {
            let mut mask = 0u16;
            for &u in &self.nbrs[v] {
                if self.labels[u] == 0 {
                    return true;
                }
                mask |= 1 << self.labels[u];
            }
            mask == self.dyn_mask[self.labels[v] - 1]
        }

        fn run(&mut self, k: usize) {
            self.nodes += 1;
            if k == self.order.len() {
                self.solutions.push(self.labels.clone());
                return;
            }
            let v = self.order[k];
            let candidates = if v == self.start { self.s..=self.s } else { 1..=self.s };
            for c in candidates {
                let fits = self.nbrs[v]
                    .iter()
                    .all(|&u| self.labels[u] == 0 || self.dyn_mask[c - 1] >> self.labels[u] & 1 == 1);
                if !fits {
                    continue;
                }
                self.labels[v] = c;
                if self.complete_ok(v) && self.nbrs[v].iter().all(|&u| self.labels[u] == 0 || self.complete_ok(u)) {
                    self.run(k + 1);
                }
                self.labels[v] = 0;
            }
        }
    }

    let mut search = Search {
        order: &order,
        nbrs: &nbrs,
        dyn_mask: &dyn_mask,
        labels: vec![0; n],
        start,
        s,
        nodes: 0,
        solutions: Vec::new(),
    };
    search.run(0);
    let stratum = poset.stratum();
    Ok(OpenMapSearch {
        s: stratum,
        solutions: search.solutions.into_iter().map(|table| OpenMap { s: stratum, table }).collect(),
        nodes: search.nodes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiReport {
    pub ideals: usize,
    pub target: usize,
    pub bijective: bool,
    /// J ⊆ J′ ⇔ ψ(J) ≤ ψ(J′) over all pairs.
    pub order_isomorphism: bool,
}

/// 𝒥(Δₛ⁺) with its open map, for 3 ≤ s ≤ 7.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    e8: RootSystem,
    poset: StratumPoset,
    h: OpenMap,
    ideals: Vec<OrderIdeal>,
}

impl IdealLattice {
    pub fn new(s: Stratum) -> Result<Self> {
        if !(3..=7).contains(&s.value()) {
            return Err(Error::InvalidStratum(s.value()));
        }
        let e8 = RootSystem::e(8)?;
        let poset = StratumPoset::new(&e8, s)?;
        let search = find_open_map(&poset)?;
        let h = search.unique().cloned().ok_or(Error::InvalidStratum(s.value()))?;
        let ideals = enumerate_ideals(&poset);
        Ok(IdealLattice { e8, poset, h, ideals })
    }

    pub fn e8(&self) -> &RootSystem {
        &self.e8
    }

    pub fn poset(&self) -> &StratumPoset {
        &self.poset
    }

    pub fn open_map(&self) -> &OpenMap {
        &self.h
    }

    pub fn ideals(&self) -> &[OrderIdeal] {
        &self.ideals
    }

    pub fn stratum(&self) -> Stratum {
        self.poset.stratum()
    }

    /// ψₛ(J) = αₛ′ + Σ_{β∈J} α_{hₛ(β)}.
    pub fn psi(&self, j: &OrderIdeal) -> Result<Root> {
        if j.s != self.stratum() || !self.poset.is_ideal_bits(j.bits) {
            return Err(Error::NotAnIdeal);
        }
        let mut coeffs = vec![0; 8];
        coeffs[self.stratum().prime() - 1] += 1;
        for i in j.indices() {
            coeffs[self.h.label(i) - 1] += 1;
        }
        Ok(Root::new(coeffs))
    }

    /// Δₛ′⁺, or Δ₈⁺ without its top −α̂₈ when s = 7.
    pub fn psi_target(&self) -> Vec<Root> {
        let s_prime = Stratum::new(self.stratum().prime()).expect("s′ ≤ 8");
        let top = self.e8.highest_root().expect("E8");
        let mut t = self.e8.stratum_roots(s_prime).expect("E8 strata");
        t.retain(|b| *b != top);
        t
    }

    pub fn psi_report(&self) -> PsiReport {
        let images: Vec<Root> = self.ideals.iter().map(|j| self.psi(j).expect("enumerated")).collect();
        let target: BTreeSet<Root> = self.psi_target().into_iter().collect();
        let image_set: BTreeSet<Root> = images.iter().cloned().collect();
        let bijective = image_set.len() == images.len() && image_set == target;
        let mut order_isomorphism = true;
        for (a, ja) in self.ideals.iter().enumerate() {
            for (b, jb) in self.ideals.iter().enumerate() {
                if ja.is_subset(jb) != self.e8.leq(&images[a], &images[b]) {
                    order_isomorphism = false;
                }
            }
        }
        PsiReport { ideals: self.ideals.len(), target: target.len(), bijective, order_isomorphism }
    }

    /// Unions and intersections of ideals are ideals.
    pub fn is_lattice(&self) -> bool {
        let set: BTreeSet<u64> = self.ideals.iter().map(|j| j.bits).collect();
        self.ideals
            .iter()
            .all(|a| self.ideals.iter().all(|b| set.contains(&(a.bits | b.bits)) && set.contains(&(a.bits & b.bits))))
    }

    pub fn export(&self) -> IdealsExport {
        let roots = self.poset.roots();
        IdealsExport {
            s: self.stratum(),
            roots: roots.iter().map(Root::to_string).collect(),
            open_map: roots.iter().zip(&self.h.table).map(|(r, &l)| (r.to_string(), l)).collect(),
            ideals: self
                .ideals
                .iter()
                .map(|j| IdealRow {
                    bits: j.bits,
                    members: self.poset.members(j).iter().map(|r| r.to_string()).collect(),
                    psi: self.psi(j).expect("enumerated").to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRow {
    pub bits: u64,
    pub members: Vec<String>,
    pub psi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealsExport {
    pub s: Stratum,
    /// Bit i of every ideal refers to roots[i].
    pub roots: Vec<String>,
    pub open_map: Vec<(String, usize)>,
    pub ideals: Vec<IdealRow>,
}

/// ε on the labels of D̂yn(E₇), with 0 standing for the affine vertex α̂₇.
pub const EPSILON: [usize; 8] = [7, 6, 2, 5, 4, 3, 1, 0];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SameFace {
    /// Label ↦ (vertices reaching a 7 on their own face, vertices with that label).
    pub reach: BTreeMap<usize, (usize, usize)>,
    /// All 5s and 6s reach a 7; no 1 or 3 does.
    pub rule_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub mu_is_cba: bool,
    pub rho_is_bca: bool,
    /// How many β ∈ Δ₇⁺ the printed formula −α₇ − Σ βᵏ ε(αₖ) sends to a root.
    pub printed_mu_roots: usize,
    pub check_root: String,
    pub check_fixed_by_mu: bool,
    pub check_orthogonal: bool,
    pub part_sizes: [usize; 4],
    pub mu_tilde_involution: bool,
    pub mu_tilde_reverses_inclusion: bool,
    pub mu_tilde_swaps_parts: bool,
    pub rho_tilde_bijection: bool,
    pub psi_mu_nu: bool,
    pub printed_nu_mismatches: usize,
    pub psi_rho_sigma: bool,
    pub printed_sigma_mismatches: usize,
    pub psi_parts: bool,
    pub h7_mu: bool,
    /// β ≠ α₇ with β ≱ α̌₇: the roots added inside 𝒥₁.
    pub h7_rho_domain: usize,
    pub h7_rho_on_domain: bool,
    pub h7_rho_mismatches_overall: usize,
    pub antilink_033: bool,
    pub antilink_330: bool,
    pub same_face: SameFace,
}

impl SymmetryReport {
    pub fn ok(&self) -> bool {
        self.mu_is_cba
            && self.rho_is_bca
            && self.check_fixed_by_mu
            && self.check_orthogonal
            && self.part_sizes == [1, 27, 27, 1]
            && self.mu_tilde_involution
            && self.mu_tilde_reverses_inclusion
            && self.mu_tilde_swaps_parts
            && self.rho_tilde_bijection
            && self.psi_mu_nu
            && self.psi_rho_sigma
            && self.psi_parts
            && self.h7_mu
            && self.h7_rho_on_domain
            && self.antilink_033
            && self.antilink_330
            && self.same_face.rule_holds
    }
}

/// μ, ρ, ν, σ and their lifts to 𝒥(Δ₇⁺).
#[derive(Debug, Clone)]
pub struct E7Symmetries {
    model: E7Model,
    lattice: IdealLattice,
    mu: Vec<usize>,
    rho: Vec<usize>,
    check: usize,
    alpha7: usize,
}

impl E7Symmetries {
    pub fn new() -> Result<Self> {
        let model = E7Model::standard();
        let lattice = IdealLattice::new(Stratum::new(7)?)?;
        let poset = lattice.poset();
        let place = |r: &Root| poset.position(r).ok_or_else(|| Error::NotPositiveRoot(r.to_string()));
        let mu = poset.roots().iter().map(|b| place(&Self::mu_linear(b))).collect::<Result<Vec<_>>>()?;
        let twist6 = model.system().dynkin_twist(6)?;
        let rho = poset
            .roots()
            .iter()
            .map(|b| {
                let t = twist6.apply(&b.truncated(7).expect("E7 root")).padded(8);
                Ok(mu[place(&t)?])
            })
            .collect::<Result<Vec<_>>>()?;
        let check_root = model.f_inv(&model.vector("303")?)?.padded(8);
        let check = place(&check_root)?;
        let alpha7 = place(&Root::simple(8, 7))?;
        Ok(E7Symmetries { model, lattice, mu, rho, check, alpha7 })
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn model(&self) -> &E7Model {
        &self.model
    }

    /// α̌₇ = f⁻¹(303).
    pub fn check_root(&self) -> &Root {
        &self.lattice.poset().roots()[self.check]
    }

    pub fn mu(&self, i: usize) -> usize {
        self.mu[i]
    }

    pub fn rho(&self, i: usize) -> usize {
        self.rho[i]
    }

    /// ε(αₖ) in E8 coordinates; ε(α₇) = α̂₇.
    fn epsilon_root(k: usize) -> Root {
        match EPSILON[k] {
            0 => -&RootSystem::e(7).expect("E7").highest_root().expect("E7").padded(8),
            j => Root::simple(8, j),
        }
    }

    /// −Σ_{k≤7} βᵏ ε(αₖ).
    pub fn mu_linear(beta: &Root) -> Root {
        (1..=7).fold(Root::zero(8), |acc, k| &acc - &(beta.coeff(k) * &Self::epsilon_root(k)))
    }

    /// −α₇ − Σ βᵏ ε(αₖ), as printed.
    pub fn mu_printed(beta: &Root) -> Root {
        &Self::mu_linear(beta) - &Root::simple(8, 7)
    }

    fn hat8() -> Root {
        -&RootSystem::e(8).expect("E8").highest_root().expect("E8")
    }

    /// ν(β) = −β − α̂₈.
    pub fn nu(beta: &Root) -> Root {
        &(-beta) - &Self::hat8()
    }

    /// −β − 2α₈ − α̂₈, as printed.
    pub fn nu_printed(beta: &Root) -> Root {
        &Self::nu(beta) - &(2 * &Root::simple(8, 8))
    }

    /// σ(β) = −α̂₈ − α₈ − μ(β − α₈), μ taken linear.
    pub fn sigma(beta: &Root) -> Root {
        let a8 = Root::simple(8, 8);
        &(&(-&Self::hat8()) - &a8) - &Self::mu_linear(&(beta - &a8))
    }

    /// −α̂₈ − μ(β − α₈) with the printed μ.
    pub fn sigma_printed(beta: &Root) -> Root {
        &(-&Self::hat8()) - &Self::mu_printed(&(beta - &Root::simple(8, 8)))
    }

    /// μ̃(J) = {μ(β) : β ∉ J}.
    pub fn mu_tilde(&self, j: &OrderIdeal) -> OrderIdeal {
        let full = self.lattice.poset().full();
        let bits = bits(full & !j.bits).fold(0u64, |m, i| m | 1 << self.mu[i]);
        OrderIdeal { s: j.s, bits }
    }

    /// 0 for ∅, 3 for Δ₇⁺, otherwise 1 or 2 as α̌₇ is absent or present.
    pub fn part(&self, j: &OrderIdeal) -> usize {
        if j.is_empty() {
            0
        } else if j.bits == self.lattice.poset().full() {
            3
        } else if j.contains(self.check) {
            2
        } else {
            1
        }
    }

    /// ρ̃(J) = {ρ(β) : β ∈ J ∖ {α₇}} ∪ {β : β ≤ α̌₇}, for J ∈ 𝒥₁.
    pub fn rho_tilde(&self, j: &OrderIdeal) -> Result<OrderIdeal> {
        match self.part(j) {
            1 => {}
            p => return Err(Error::WrongPart(p)),
        }
        let moved = bits(j.bits & !(1 << self.alpha7)).fold(0u64, |m, i| m | 1 << self.rho[i]);
        Ok(OrderIdeal { s: j.s, bits: moved | self.lattice.poset().down_set(self.check).bits })
    }

    fn digits(&self, i: usize) -> [u32; 3] {
        E7Model::digits(&self.f(i))
    }

    fn f(&self, i: usize) -> FpVector {
        self.model.f(&self.lattice.poset().roots()[i].truncated(7).expect("E7 root"))
    }

    pub fn same_face(&self) -> SameFace {
        let poset = self.lattice.poset();
        let h = self.lattice.open_map();
        let face = |i: usize| self.model.cube_layout(&self.f(i)).expect("Γ₇⁺").face;
        let mut reach: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for v in 0..poset.len() {
            let mut seen = vec![false; poset.len()];
            seen[v] = true;
            let mut stack = vec![v];
            let mut found = false;
            while let Some(x) = stack.pop() {
                if x != v && h.label(x) == 7 {
                    found = true;
                    break;
                }
                for y in poset.hasse().neighbours(x) {
                    if !seen[y] && face(y) == face(v) {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            let e = reach.entry(h.label(v)).or_default();
            e.0 += found as usize;
            e.1 += 1;
        }
        let all = |l: usize| reach.get(&l).is_some_and(|&(r, n)| r == n);
        let none = |l: usize| reach.get(&l).is_some_and(|&(r, _)| r == 0);
        let rule_holds = all(5) && all(6) && none(1) && none(3);
        SameFace { reach, rule_holds }
    }

    pub fn report(&self) -> SymmetryReport {
        let lattice = &self.lattice;
        let poset = lattice.poset();
        let h = lattice.open_map();
        let n = poset.len();
        let e7 = self.model.system();
        let ideals = lattice.ideals();
        let psi = |j: &OrderIdeal| lattice.psi(j).expect("ideal");

        let mu_is_cba = (0..n).all(|i| {
            let [a, b, c] = self.digits(i);
            self.digits(self.mu[i]) == [c, b, a]
        });
        let rho_is_bca = (0..n).all(|i| {
            let [a, b, c] = self.digits(i);
            self.digits(self.rho[i]) == [b, c, a]
        });
        let e8 = lattice.e8();
        let printed_mu_roots = poset.roots().iter().filter(|b| e8.is_root(&Self::mu_printed(b))).count();

        let check7 = self.check_root().truncated(7).expect("E7 root");
        let hat7 = -&e7.highest_root().expect("E7");
        let check_orthogonal = e7.inner(&check7, &e7.simple_root(7)) == 0 && e7.inner(&check7, &hat7) == 0;

        let mut part_sizes = [0usize; 4];
        for j in ideals {
            part_sizes[self.part(j)] += 1;
        }
        let ideal_set: BTreeSet<OrderIdeal> = ideals.iter().copied().collect();
        let mu_tilde_involution =
            ideals.iter().all(|j| ideal_set.contains(&self.mu_tilde(j)) && self.mu_tilde(&self.mu_tilde(j)) == *j);
        let mu_tilde_reverses_inclusion = ideals
            .iter()
            .all(|a| ideals.iter().all(|b| a.is_subset(b) == self.mu_tilde(b).is_subset(&self.mu_tilde(a))));
        let mu_tilde_swaps_parts = ideals.iter().all(|j| self.part(&self.mu_tilde(j)) == 3 - self.part(j));

        let part1: Vec<&OrderIdeal> = ideals.iter().filter(|j| self.part(j) == 1).collect();
        let part2: BTreeSet<OrderIdeal> = ideals.iter().filter(|j| self.part(j) == 2).copied().collect();
        let rho_images: BTreeSet<OrderIdeal> = part1.iter().map(|j| self.rho_tilde(j).expect("part 1")).collect();
        let rho_tilde_bijection = rho_images.len() == part1.len() && rho_images == part2;

        let psi_mu_nu = ideals.iter().all(|j| psi(&self.mu_tilde(j)) == Self::nu(&psi(j)));
        let printed_nu_mismatches =
            ideals.iter().filter(|j| psi(&self.mu_tilde(j)) != Self::nu_printed(&psi(j))).count();
        let psi_rho_sigma = part1.iter().all(|j| psi(&self.rho_tilde(j).expect("part 1")) == Self::sigma(&psi(j)));
        let printed_sigma_mismatches =
            part1.iter().filter(|j| psi(&self.rho_tilde(j).expect("part 1")) != Self::sigma_printed(&psi(j))).count();

        let targets = lattice.psi_target();
        let psi_parts = (0..4).all(|i| {
            let got: BTreeSet<Root> = ideals.iter().filter(|j| self.part(j) == i).map(psi).collect();
            let want: BTreeSet<Root> = targets.iter().filter(|b| b.coeff(7) == i as i32).cloned().collect();
            got == want
        });

        let h7_mu = (0..n).all(|i| h.label(self.mu[i]) == h.label(i));
        let domain: Vec<usize> = (0..n).filter(|&i| i != self.alpha7 && !poset.leq(self.check, i)).collect();
        let h7_rho_on_domain = domain.iter().all(|&i| h.label(self.rho[i]) == EPSILON[h.label(i)]);
        let h7_rho_mismatches_overall = (0..n).filter(|&i| h.label(self.rho[i]) != EPSILON[h.label(i)]).count();

        let image = |ix: &mut dyn Iterator<Item = usize>| -> BTreeSet<FpVector> { ix.map(|i| self.f(i)).collect() };
        let gamma7: BTreeSet<FpVector> = (0..n).map(|i| self.f(i)).collect();
        let antilink = |v: &str| -> BTreeSet<FpVector> {
            let v = self.model.vector(v).expect("literal");
            self.model.antilink(&v).into_iter().filter(|x| gamma7.contains(x)).collect()
        };
        let top = n - 1;
        let u: Vec<usize> = domain.clone();
        let w: Vec<usize> = (0..n).filter(|&i| i != top && !poset.leq(i, self.check)).collect();
        let mask = |ix: &[usize]| ix.iter().fold(0u64, |m, &i| m | 1 << i);
        let (u_mask, w_mask) = (mask(&u), mask(&w));
        let down_check = poset.down_set(self.check).bits;
        let j1_as_u: BTreeSet<OrderIdeal> =
            part1.iter().map(|j| OrderIdeal { s: j.s, bits: j.bits & !(1 << self.alpha7) }).collect();
        let j2_as_w: BTreeSet<OrderIdeal> =
            part2.iter().map(|j| OrderIdeal { s: j.s, bits: j.bits & !down_check }).collect();
        let u_ideals: BTreeSet<OrderIdeal> = poset.ideals_within(u_mask).into_iter().collect();
        let w_ideals: BTreeSet<OrderIdeal> = poset.ideals_within(w_mask).into_iter().collect();
        let rho_u: BTreeSet<usize> = u.iter().map(|&i| self.rho[i]).collect();
        let antilink_033 =
            image(&mut u.iter().copied()) == antilink("033") && j1_as_u.len() == part1.len() && j1_as_u == u_ideals;
        let antilink_330 = image(&mut w.iter().copied()) == antilink("330")
            && j2_as_w.len() == part2.len()
            && j2_as_w == w_ideals
            && rho_u == w.iter().copied().collect();

        SymmetryReport {
            mu_is_cba,
            rho_is_bca,
            printed_mu_roots,
            check_root: self.check_root().to_string(),
            check_fixed_by_mu: self.mu[self.check] == self.check,
            check_orthogonal,
            part_sizes,
            mu_tilde_involution,
            mu_tilde_reverses_inclusion,
            mu_tilde_swaps_parts,
            rho_tilde_bijection,
            psi_mu_nu,
            printed_nu_mismatches,
            psi_rho_sigma,
            printed_sigma_mismatches,
            psi_parts,
            h7_mu,
            h7_rho_domain: domain.len(),
            h7_rho_on_domain,
            h7_rho_mismatches_overall,
            antilink_033,
            antilink_330,
            same_face: self.same_face(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: usize) -> Stratum {
        Stratum::new(s).unwrap()
    }

    #[test]
    fn ideal_counts() {
        let e8 = RootSystem::e(8).unwrap();
        for (s, want) in [(3, 6), (4, 10), (5, 16), (6, 27), (7, 56)] {
            let poset = StratumPoset::new(&e8, st(s)).unwrap();
            let ideals = enumerate_ideals(&poset);
            assert_eq!(ideals.len(), want, "s={s}");
            assert!(ideals.first().unwrap().is_empty());
            assert_eq!(ideals.last().unwrap().len(), poset.len());
            // brute force over all subsets for the small strata
            if poset.len() <= 16 {
                let brute = (0u64..1 << poset.len()).filter(|&m| {
                    (0..poset.len()).all(|i| {
                        m >> i & 1 == 0
                            || (0..poset.len())
                                .all(|j| !e8.leq(&poset.roots()[j], &poset.roots()[i]) || m >> j & 1 == 1)
                    })
                });
                assert_eq!(brute.count(), want);
            }
        }
    }

    #[test]
    fn open_maps() {
        let e8 = RootSystem::e(8).unwrap();
        for s in 3..=7 {
            let poset = StratumPoset::new(&e8, st(s)).unwrap();
            let search = find_open_map(&poset).unwrap();
            let h = search.unique().expect("unique open map");
            assert!(h.is_open(&poset));
            let a_s = poset.position(&Root::simple(8, s)).unwrap();
            assert_eq!(h.label(a_s), s);
        }
        let poset = StratumPoset::new(&e8, st(8)).unwrap();
        let search = find_open_map(&poset).unwrap();
        assert!(!search.exists());
        assert!(search.nodes > 0);
    }

    #[test]
    fn psi_is_an_isomorphism() {
        for s in 3..=7 {
            let l = IdealLattice::new(st(s)).unwrap();
            let r = l.psi_report();
            assert!(r.bijective && r.order_isomorphism, "s={s}");
            assert_eq!(r.ideals, r.target);
            assert!(l.is_lattice());
            let empty = l.ideals()[0];
            assert_eq!(l.psi(&empty).unwrap(), Root::simple(8, st(s).prime()));
        }
        let l = IdealLattice::new(st(7)).unwrap();
        let j = l.poset().ideal(&[Root::simple(8, 7)]).unwrap();
        assert_eq!(l.psi(&j).unwrap().to_string(), "00000011");
        assert_eq!(l.poset().ideal(&[Root::simple(8, 7), "01122210".parse().unwrap()]), Err(Error::NotAnIdeal));
        assert!(IdealLattice::new(st(8)).is_err());
    }

    #[test]
    fn symmetries() {
        let sym = E7Symmetries::new().unwrap();
        let r = sym.report();
        assert_eq!(r.check_root, "01122210");
        assert_eq!(r.part_sizes, [1, 27, 27, 1]);
        assert_eq!(r.h7_rho_domain, 16);
        assert_eq!(r.printed_mu_roots, 16);
        assert!(r.printed_nu_mismatches > 0);
        assert!(r.printed_sigma_mismatches > 0);
        assert!(r.h7_rho_mismatches_overall > 0);
        assert!(r.ok(), "{r:#?}");
        let m = sym.model();
        let x = sym.lattice().poset().position(&m.f_inv(&m.vector("033").unwrap()).unwrap().padded(8)).unwrap();
        assert_eq!(m.f(&sym.lattice().poset().roots()[sym.mu(x)].truncated(7).unwrap()).to_string(), "330");
        let empty = sym.lattice().ideals()[0];
        assert_eq!(sym.rho_tilde(&empty), Err(Error::WrongPart(0)));
    }

    #[test]
    fn nu_is_an_involution() {
        let l = IdealLattice::new(st(7)).unwrap();
        for b in l.psi_target() {
            assert_eq!(E7Symmetries::nu(&E7Symmetries::nu(&b)), b);
        }
    }
}
