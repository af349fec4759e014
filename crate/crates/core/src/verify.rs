//! Named exhaustive checks. Ids follow the anchors used for the statements
//! they test (`thm:T-graph7`, `lem:27`, ...) or a `module:topic` name.

use std::cell::OnceCell;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::compression::{canonical_compression, reduce_composite, CompressionMap};
use crate::e6::E6Model;
use crate::e7::E7Model;
use crate::error::{Error, Result};
use crate::fp::{FpForm, FpSpace, FpVector, Notation};
use crate::ideals::{find_open_map, E7Symmetries, IdealLattice, StratumPoset};
use crate::linalg::{det_int, det_mod};
use crate::roots::{Family, Root, RootSystem, Stratum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

/// Shared models, built on first use.
#[derive(Default)]
pub struct Context {
    e6: OnceCell<E6Model>,
    sym: OnceCell<E7Symmetries>,
    e8: OnceCell<RootSystem>,
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn e7(&self) -> &E7Model {
        self.symmetries().model()
    }

    pub fn e6(&self) -> &E6Model {
        self.e6.get_or_init(E6Model::standard)
    }

    pub fn symmetries(&self) -> &E7Symmetries {
        self.sym.get_or_init(|| E7Symmetries::new().expect("E7 ideals"))
    }

    pub fn e8(&self) -> &RootSystem {
        self.e8.get_or_init(|| RootSystem::e(8).expect("E8"))
    }
}

type CheckFn = fn(&Context) -> (bool, String);

pub struct Check {
    pub id: &'static str,
    pub about: &'static str,
    run: CheckFn,
}

impl Check {
    pub fn run(&self, cx: &Context) -> CheckResult {
        let (passed, detail) = (self.run)(cx);
        CheckResult { id: self.id.to_string(), passed, detail }
    }
}

pub const CHECKS: &[Check] = &[
    Check { id: "roots:enumeration", about: "root counts and norms for A, D, E", run: roots_enumeration },
    Check {
        id: "roots:comparability", about: "comparable iff ⟨β,β′⟩ > 0 on Δ⁺(E7)", run: roots_comparability
    },
    Check { id: "eqn:strata", about: "strata sizes and partition of Δ(E8)", run: strata },
    Check { id: "roots:twists", about: "Dynkin twists are isometric bijections", run: twists },
    Check { id: "roots:tilde", about: "lifts are injective into Δ₇⁺", run: tilde },
    Check { id: "fp:forms", about: "symmetric forms, alternating F³, Γ sizes", run: fp_forms },
    Check { id: "fp:det", about: "det mod p agrees with the integer determinant", run: fp_det },
    Check { id: "prop:pdivides", about: "compressions need p | det A", run: p_divides },
    Check { id: "thm:injective", about: "injectivity of the standard and canonical maps", run: injective },
    Check {
        id: "thm:injective-a2", about: "injectivity of the A2 map into ℤ/3 with s₁ = s₂ = 1", run: injective_a2
    },
    Check {
        id: "compression:form", about: "(f β | f β′) ≡ ⟨β,β′⟩ and orthogonality transfer", run: compression_form
    },
    Check { id: "e7:bijection", about: "Δ⁺(E7) ∪ {0} → F³ is a bijection", run: e7_bijection },
    Check { id: "e7:t-graph", about: "T-graph on F³ is translation invariant and strongly regular", run: e7_t_graph },
    Check { id: "lem:27", about: "Γ₇⁺ = 𝓛(0) = exactly one zero coordinate", run: lemma27 },
    Check { id: "eqn:symmetries27", about: "the four symmetries equal the Dynkin twists through f", run: symmetries27 },
    Check { id: "thm:T-graph7", about: "T-graph = O-graph on each Γₛ⁺ of E7", run: t_graph7 },
    Check { id: "thm:otherstrata", about: "links and antilinks cut out the lower strata", run: other_strata },
    Check { id: "lem:orthseq", about: "orthogonal pairs complete uniquely by ⊕", run: orth_seq },
    Check { id: "cor:orthseqcor", about: "(x|y) = 0 iff x ⊕ y ∈ Γ₇⁺", run: orth_seq_cor },
    Check { id: "thm:order7", about: "Hasse diagrams from ⊕ on images (E7)", run: order7 },
    Check { id: "e7:cross-stratum", about: "order and orthogonality through lifts", run: cross_stratum },
    Check { id: "fig:cubecorner", about: "orthogonality read off the cube corner", run: cube_corner },
    Check {
        id: "e7:double-six",
        about: "36 double sixes, halves maximal cliques of the Schläfli graph",
        run: double_six,
    },
    Check { id: "e7:double-six-o-clique", about: "double-six halves are cliques of the O-graph", run: double_six_o },
    Check { id: "fig:automorphisms", about: "W(E6) closure and coordinate automorphisms", run: automorphisms },
    Check { id: "e6:bijection", about: "Δ(E6) → Γ ⊂ (ℤ/3)⁵ is a bijection", run: e6_bijection },
    Check { id: "e6:top-stratum", about: "Γ₆⁺ = {Πxᵢ = 1} and its symmetries", run: e6_top },
    Check { id: "thm:T-graph6", about: "T-graph = O-graph on each Γₛ⁺ of E6", run: t_graph6 },
    Check { id: "thm:order6", about: "order steps and Hasse diagrams from + on images (E6)", run: order6 },
    Check { id: "eqn:orderidealrelation", about: "ψₛ: 𝒥(Δₛ⁺) ≅ Δₛ′⁺", run: ideal_relation },
    Check { id: "prop:uniqueopenmap", about: "hₛ unique for s ≤ 7, absent for s = 8", run: unique_open_map },
    Check { id: "fig:openmap7", about: "μ, ρ, ν, σ and the symmetries of h₇", run: openmap7 },
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

pub fn find(id: &str) -> Result<&'static Check> {
    CHECKS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check, or all of them for `None` / `"all"`.
pub fn run(scope: Option<&str>) -> Result<Vec<CheckResult>> {
    let cx = Context::new();
    match scope {
        None | Some("all") => Ok(CHECKS.iter().map(|c| c.run(&cx)).collect()),
        Some(id) => Ok(vec![find(id)?.run(&cx)]),
    }
}

fn st(s: usize) -> Stratum {
    Stratum::new(s).expect("valid stratum")
}

fn roots_enumeration(_: &Context) -> (bool, String) {
    let cases = [
        (Family::A, 2, 3),
        (Family::A, 5, 15),
        (Family::D, 4, 12),
        (Family::D, 6, 30),
        (Family::E, 3, 4),
        (Family::E, 4, 10),
        (Family::E, 5, 20),
        (Family::E, 6, 36),
        (Family::E, 7, 63),
        (Family::E, 8, 120),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (family, rank, want) in cases {
        let sys = RootSystem::build(family, rank).expect("supported");
        let got = sys.positive_roots().len();
        ok &= got == want && sys.roots().iter().all(|r| sys.norm(r) == 2);
        parts.push(format!("{}:{got}", sys.name()));
    }
    (ok, parts.join(" "))
}

fn roots_comparability(cx: &Context) -> (bool, String) {
    let sys = cx.e7().system();
    let pos = sys.positive_roots();
    let mut literal_bad = 0;
    for (i, a) in pos.iter().enumerate() {
        for b in &pos[i + 1..] {
            let comparable = sys.differs_by_positive_root(a, b) || sys.differs_by_positive_root(b, a);
            if comparable != (sys.inner(a, b) > 0) {
                literal_bad += 1;
            }
        }
    }
    let poset_bad = sys.comparability_exceptions().len();
    (
        literal_bad == 0,
        format!("one-step relation: {literal_bad} exceptions; root-poset order: {poset_bad} exceptions of 1953 pairs"),
    )
}

fn strata(cx: &Context) -> (bool, String) {
    let e8 = cx.e8();
    let sizes: Vec<usize> = Stratum::ALL.iter().map(|&s| e8.stratum_roots(s).expect("E8").len()).collect();
    let mut seen = BTreeSet::new();
    let mut disjoint = true;
    for &s in &Stratum::ALL {
        for r in e8.stratum_roots(s).expect("E8") {
            disjoint &= seen.insert(r.clone());
            disjoint &= seen.insert(-&r);
        }
    }
    let ok = sizes == [1, 3, 6, 10, 16, 27, 57] && disjoint && seen.len() == 240;
    (ok, format!("sizes {sizes:?}, union {} of 240", seen.len()))
}

fn twists(cx: &Context) -> (bool, String) {
    let mut count = 0;
    let mut ok = true;
    for n in 6..=8 {
        let sys = if n == 8 { cx.e8().clone() } else { RootSystem::e(n).expect("E") };
        for v in (3..=n).filter(|&v| v != 8) {
            let t = sys.dynkin_twist(v).expect("valid vertex");
            let images: BTreeSet<Root> = sys.roots().iter().map(|r| t.apply(r)).collect();
            ok &= images.len() == sys.roots().len() && images.iter().all(|r| sys.is_root(r));
            let rs = sys.roots();
            for a in rs.iter().step_by(7) {
                for b in rs {
                    ok &= sys.inner(&t.apply(a), &t.apply(b)) == sys.inner(a, b);
                }
            }
            count += 1;
        }
    }
    (ok, format!("{count} twists"))
}

fn tilde(cx: &Context) -> (bool, String) {
    let sys = cx.e7().system();
    let mut ok = true;
    for s in Stratum::up_to(7) {
        let roots = sys.stratum_roots(s).expect("E7");
        let lifts: BTreeSet<Root> = roots.iter().map(|b| sys.tilde(b).expect("positive")).collect();
        ok &= lifts.len() == roots.len() && lifts.iter().all(|l| sys.stratum(l).ok() == Some(st(7)));
    }
    (ok, "strata 1…7 of E7".into())
}

fn fp_forms(_: &Context) -> (bool, String) {
    let f3 = FpSpace::f_cubed();
    let vs = f3.vectors();
    let mut ok = vs.iter().all(|x| f3.eval(x, x) == Ok(0));
    ok &= vs.iter().all(|x| vs.iter().all(|y| f3.eval(x, y) == f3.eval(y, x)));
    let g2 = f3.gamma().len();
    let mut sizes = Vec::new();
    for m in 1..=6 {
        let v = FpSpace::standard(3, m).expect("space");
        let gamma = v.gamma();
        ok &= gamma.members().iter().all(|x| x.entries().iter().filter(|&&e| e != 0).count() % 3 == 2);
        ok &= v.vectors().iter().filter(|x| x.entries().iter().filter(|&&e| e != 0).count() % 3 == 2).count()
            == gamma.len();
        sizes.push(gamma.len());
    }
    ok &= g2 == 63;
    (ok, format!("|Γ(F³)| = {g2}; |Γ((ℤ/3)^m)| = {sizes:?}"))
}

fn fp_det(_: &Context) -> (bool, String) {
    let mut ok = true;
    let mut dets = Vec::new();
    for n in 3..=8 {
        let sys = RootSystem::e(n).expect("E");
        let a: Vec<Vec<i64>> = sys.cartan().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let d = det_int(&a);
        for p in [2u32, 3, 5, 7] {
            ok &= det_mod(&a, p) == Ok(d.rem_euclid(p as i64) as u32);
        }
        dets.push(d);
    }
    ok &= dets == [6, 5, 4, 3, 2, 1];
    (ok, format!("det A(E3…E8) = {dets:?}"))
}

fn p_divides(_: &Context) -> (bool, String) {
    let e8 = RootSystem::e(8).expect("E8");
    let rejected = matches!(canonical_compression(&e8, 2), Err(Error::NoCompression { p: 2, det: 1 }));
    let e7 = RootSystem::e(7).expect("E7");
    let e6 = RootSystem::e(6).expect("E6");
    let ok = rejected && e7.cartan_det() % 2 == 0 && e6.cartan_det() % 3 == 0;
    (ok, format!("E8 mod 2 rejected: {rejected}; det E7 = {}, det E6 = {}", e7.cartan_det(), e6.cartan_det()))
}

fn nine_fold_e6() -> CompressionMap {
    let e6 = RootSystem::e(6).expect("E6");
    let a: Vec<Vec<i64>> = e6.cartan().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let space = FpSpace::new(FpForm::from_gram(9, &a).expect("symmetric"), Notation::Digits).expect("space");
    let s =
        (0..6).map(|i| space.vector(&(0..6).map(|k| i64::from(k == i)).collect::<Vec<_>>()).expect("unit")).collect();
    CompressionMap::new(e6, space, s).expect("Cartan images")
}

fn injective(cx: &Context) -> (bool, String) {
    let e7c = canonical_compression(&RootSystem::e(7).expect("E7"), 2).expect("E7 mod 2");
    let e6c = canonical_compression(&RootSystem::e(6).expect("E6"), 3).expect("E6 mod 3");
    let reduced = reduce_composite(&nine_fold_e6(), 3).expect("9 → 3");
    let maps = [
        ("E7 standard", cx.e7().map()),
        ("E6 standard", cx.e6().map()),
        ("E7 canonical", &e7c),
        ("E6 canonical", &e6c),
        ("E6 via ℤ/9", &reduced),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, m) in maps {
        let r = m.verify_injective();
        ok &= r.ok();
        parts.push(format!("{name}: {} checked", r.checked));
    }
    (ok, parts.join("; "))
}

fn injective_a2(_: &Context) -> (bool, String) {
    let a2 = RootSystem::build(Family::A, 2).expect("A2");
    let v = FpSpace::new(FpForm::from_gram(3, &[vec![2]]).expect("form"), Notation::Digits).expect("space");
    let one = v.vector(&[1]).expect("vector");
    let f = CompressionMap::new(a2, v, vec![one.clone(), one]).expect("Cartan relations hold");
    let r = f.verify_injective();
    let detail = match &r.collision {
        Some((a, b)) => format!("f({a}) = f({b})"),
        None => "injective".into(),
    };
    (r.ok(), detail)
}

fn compression_form(cx: &Context) -> (bool, String) {
    let maps = [cx.e7().map(), cx.e6().map()];
    let ok = maps.iter().all(|m| m.inner_product_violation().is_none() && m.orthogonality_violation().is_none());
    (ok, "E7 over F³, E6 over (ℤ/3)⁵".into())
}

fn e7_bijection(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let images: BTreeSet<&FpVector> = m.map().table().map(|(_, x)| x).collect();
    (images.len() == 64 && m.space().size() == 64, format!("{} images in {} vectors", images.len(), m.space().size()))
}

fn e7_t_graph(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let p = m.t_graph().srg_parameters();
    let ok = m.t_graph_translation_invariant() && p.is_some();
    (ok, p.map_or("not strongly regular".into(), |p| p.to_string()))
}

fn lemma27(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let preserved = m.twist_checks().expect("twists").iter().all(|c| c.preserves_gamma7);
    (m.lemma27() && preserved, "27 elements, preserved by the four symmetries".into())
}

fn symmetries27(cx: &Context) -> (bool, String) {
    let checks = cx.e7().twist_checks().expect("twists");
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.matches_twist)
        .map(|c| match &c.first_mismatch {
            Some((x, t, s)) => format!("v{}: {x} ↦ {t} by the twist, {s} by {}", c.vertex, c.symmetry),
            None => format!("v{}", c.vertex),
        })
        .collect();
    (bad.is_empty(), if bad.is_empty() { "v7, v6, v4, v3 match".into() } else { bad.join("; ") })
}

fn t_graph7(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let checks: Vec<_> = Stratum::up_to(7).map(|s| m.t_equals_o(s)).collect();
    let pairs: Vec<usize> = checks.iter().map(|c| c.pairs).collect();
    (checks.iter().all(|c| c.ok()), format!("pairs per stratum {pairs:?}"))
}

fn other_strata(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let ok = Stratum::up_to(6).all(|s| m.otherstrata_first(s) && m.otherstrata_second(s));
    (ok, "s = 1, 3, 4, 5, 6".into())
}

fn orth_seq(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let g7 = m.gamma_plus(st(7));
    let set: BTreeSet<&FpVector> = g7.iter().collect();
    let (mut pairs, mut ok) = (0, true);
    for (i, x1) in g7.iter().enumerate() {
        for x2 in &g7[i + 1..] {
            if m.space().eval(x1, x2) != Ok(0) {
                ok &= m.orth_triple(x1, x2).is_err();
                continue;
            }
            pairs += 1;
            let x3 = m.orth_triple(x1, x2).expect("orthogonal");
            let completions = g7
                .iter()
                .filter(|c| *c != x1 && *c != x2)
                .filter(|c| m.space().eval(c, x1) == Ok(0) && m.space().eval(c, x2) == Ok(0))
                .filter(|c| (&(x1 + x2) + *c).is_zero())
                .count();
            ok &= completions == 1 && set.contains(&x3);
            let b3 = m.beta3(m.f_inv(x1).expect("image"), m.f_inv(x2).expect("image"));
            ok &= b3.as_ref().ok() == m.f_inv(&x3).ok();
        }
    }
    (ok, format!("{pairs} orthogonal pairs"))
}

fn orth_seq_cor(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let g7: BTreeSet<FpVector> = m.gamma_plus(st(7)).into_iter().collect();
    let mut checked = 0;
    let mut ok = true;
    for s in Stratum::up_to(7) {
        let gs = m.gamma_plus(s);
        for (i, x) in gs.iter().enumerate() {
            for y in &gs[i + 1..] {
                checked += 1;
                ok &= (m.space().eval(x, y) == Ok(0)) == g7.contains(&(x + y));
            }
        }
    }
    (ok, format!("{checked} pairs"))
}

fn order7(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let ok = Stratum::up_to(7).all(|s| {
        let from_roots = m.system().stratum_hasse(s).expect("E7").map_labels(|b| m.f(b));
        m.hasse_from_images(s).same_as(&from_roots)
    });
    (ok, "strata 1…7".into())
}

fn cross_stratum(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let sys = m.system();
    let mut ok = true;
    for a in sys.positive_roots() {
        for b in sys.positive_roots() {
            if sys.stratum(a).ok() > sys.stratum(b).ok() {
                continue;
            }
            let c = m.cross_stratum(a, b).expect("positive roots");
            ok &= c.less == sys.lt(a, b) && c.orthogonal == (sys.inner(a, b) == 0);
        }
    }
    (ok, format!("strict-lift exceptions: {}", m.strict_lift_exceptions().len()))
}

fn cube_corner(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let g7 = m.gamma_plus(st(7));
    let cells: BTreeSet<_> = g7.iter().map(|x| m.cube_layout(x).expect("Γ₇⁺")).collect();
    let mut ok = cells.len() == 27;
    for x in &g7 {
        for y in &g7 {
            if x != y {
                ok &= m.cube_orthogonal(x, y) == Ok(m.space().eval(x, y) == Ok(0));
            }
        }
    }
    let x = m.vector("021").expect("literal");
    let lit = m.link(&x).iter().filter(|y| g7.contains(y)).count();
    (ok, format!("|𝓛(021) ∩ Γ₇⁺| = {lit}"))
}

fn half_indices(cx: &Context) -> (crate::graph::Graph<FpVector>, Vec<Vec<usize>>) {
    let m = cx.e7();
    let o = m.space().o_graph_on(&m.gamma_plus(st(7)));
    let halves = m
        .double_sixes()
        .iter()
        .flat_map(|d| d.halves.clone())
        .map(|h| h.iter().map(|x| o.position(&m.vector(x).expect("literal")).expect("Γ₇⁺")).collect())
        .collect();
    (o, halves)
}

fn double_six(cx: &Context) -> (bool, String) {
    let (o, halves) = half_indices(cx);
    let n = o.complement();
    let count = halves.len() / 2;
    let ok = count == 36 && halves.iter().all(|h| h.len() == 6 && o.is_independent(h) && n.is_maximal_clique(h));
    (ok, format!("{count} double sixes; O-graph {}", o.srg_parameters().map_or("-".into(), |p| p.to_string())))
}

fn double_six_o(cx: &Context) -> (bool, String) {
    let (o, halves) = half_indices(cx);
    let cliques = halves.iter().filter(|h| o.is_maximal_clique(h)).count();
    (cliques == halves.len(), format!("{cliques} of {} halves are maximal O-cliques", halves.len()))
}

fn automorphisms(cx: &Context) -> (bool, String) {
    let m = cx.e7();
    let w = m.weyl_e6_closure();
    let ok = w.order() == 51840
        && m.coordinate_permutations().iter().all(|p| w.contains(p))
        && m.coordinate_automorphisms_from_reflections().iter().all(|&(_, ok)| ok)
        && m.coordinate_permutations_match_affine_s3();
    (ok, format!("|closure| = {}", w.order()))
}

fn e6_bijection(cx: &Context) -> (bool, String) {
    let m = cx.e6();
    let images: BTreeSet<&FpVector> = m.map().table().map(|(_, x)| x).collect();
    let gamma = m.space().gamma();
    let ok = images.len() == 72 && gamma.len() == 72 && gamma.members().iter().all(|x| images.contains(x));
    (ok, format!("|Δ| = {}, |Γ| = {}", images.len(), gamma.len()))
}

fn e6_top(cx: &Context) -> (bool, String) {
    let m = cx.e6();
    let actions = m.twist_actions().expect("twists");
    let six = actions.iter().find(|t| t.vertex == 6).and_then(|t| t.monomial);
    let order = m.twist_permutation_group_order().unwrap_or(0);
    let ok = m.top_stratum()
        && m.top_closed_under_symmetries()
        && actions.iter().all(|t| t.preserves_top)
        && six == Some(E6Model::SIGN_FLIP)
        && order == 120;
    (ok, format!("|Γ₆⁺| = {}, twist group order {order}", m.product_one().len()))
}

fn t_graph6(cx: &Context) -> (bool, String) {
    let m = cx.e6();
    let checks: Vec<_> = Stratum::up_to(6).map(|s| m.t_equals_o(s)).collect();
    let pairs: Vec<usize> = checks.iter().map(|c| c.pairs).collect();
    let t = m.t_graph();
    let ok = checks.iter().all(|c| c.ok()) && t.regular_degree().is_some();
    (ok, format!("pairs per stratum {pairs:?}; T-graph degree {:?}", t.regular_degree()))
}

fn order6(cx: &Context) -> (bool, String) {
    let m = cx.e6();
    let sys = m.system();
    let mut ok = true;
    let mut steps = 0;
    for s in Stratum::up_to(6) {
        let from_roots = sys.stratum_hasse(s).expect("E6").map_labels(|b| m.f(b));
        ok &= m.hasse_from_images(s).same_as(&from_roots);
        for beta in sys.stratum_roots(s).expect("E6") {
            for alpha in sys.positive_roots() {
                let sum = &beta + alpha;
                let want = sys.is_positive_root(&sum) && sys.stratum(&sum).ok() == Some(s);
                ok &= m.order_step6(&m.f(&beta), alpha) == Ok(want);
                steps += 1;
            }
        }
    }
    (ok, format!("{steps} steps"))
}

fn ideal_relation(_: &Context) -> (bool, String) {
    let mut ok = true;
    let mut counts = Vec::new();
    for s in 3..=7 {
        let l = IdealLattice::new(st(s)).expect("3 ≤ s ≤ 7");
        let r = l.psi_report();
        ok &= r.bijective && r.order_isomorphism && l.is_lattice();
        counts.push(r.ideals);
    }
    ok &= counts == [6, 10, 16, 27, 56];
    (ok, format!("|𝒥(Δₛ⁺)| = {counts:?}"))
}

fn unique_open_map(cx: &Context) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for s in 3..=8 {
        let poset = StratumPoset::new(cx.e8(), st(s)).expect("E8");
        let search = find_open_map(&poset).expect("s ≥ 3");
        ok &= if s == 8 { !search.exists() } else { search.unique().is_some_and(|h| h.is_open(&poset)) };
        parts.push(format!("s={s}: {} solutions", search.solutions.len()));
    }
    (ok, parts.join(", "))
}

fn openmap7(cx: &Context) -> (bool, String) {
    let r = cx.symmetries().report();
    let detail = format!(
        "parts {:?}; h₇∘ρ = ε∘h₇ on {} roots ({} mismatches overall)",
        r.part_sizes, r.h7_rho_domain, r.h7_rho_mismatches_overall
    );
    (r.ok(), detail)
}
