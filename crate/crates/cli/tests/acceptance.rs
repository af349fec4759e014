//! Acceptance criteria 1–12, one PASS/FAIL line each.
//!
//! Every criterion is an exact statement; there are no numeric tolerances.
//! Runs without the libtest harness so the report reads top to bottom.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};

use root_compress::export::parse_system;
use root_compress::{
    canonical_compression, find_open_map, E6Model, E7Model, E7Symmetries, Error, FpSpace, IdealLattice, RootSystem,
    Stratum, StratumPoset,
};

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn st(s: usize) -> Stratum {
    Stratum::new(s).unwrap()
}

/// Joins failing sub-claims; passes only when there are none.
fn verdict(failures: Vec<String>, ok_detail: String) -> Outcome {
    if failures.is_empty() {
        (true, ok_detail)
    } else {
        (false, failures.join("; "))
    }
}

fn c1_cardinalities() -> Outcome {
    let mut bad = Vec::new();
    let e7 = E7Model::standard();
    let n7 = e7.system().positive_roots().len() + 1;
    let images: BTreeSet<_> = e7.system().positive_roots().iter().map(|r| e7.f(r)).chain([e7.space().zero()]).collect();
    if n7 != 64 || e7.space().size() != 64 || images.len() != 64 {
        bad.push(format!("E7: |Δ⁺∪{{0}}| = {n7}, |F³| = {}, images {}", e7.space().size(), images.len()));
    }
    let e6 = E6Model::standard();
    let gamma = FpSpace::standard(3, 5).unwrap().gamma();
    let images: BTreeSet<_> = e6.system().roots().iter().map(|r| e6.f(r)).collect();
    let onto = images.iter().all(|x| gamma.contains(x));
    if e6.system().roots().len() != 72 || gamma.len() != 72 || images.len() != 72 || !onto {
        bad.push(format!("E6: |Δ| = {}, |Γ| = {}, images {}", e6.system().roots().len(), gamma.len(), images.len()));
    }
    verdict(bad, "64 = 64 bijective; 72 = 72 bijective onto Γ".into())
}

fn c2_strata() -> Outcome {
    let e8 = RootSystem::e(8).unwrap();
    let sizes: Vec<usize> = Stratum::up_to(8).map(|s| e8.stratum_roots(s).unwrap().len()).collect();
    let ok = sizes == [1, 3, 6, 10, 16, 27, 57];
    (ok, format!("{sizes:?}"))
}

fn c3_injectivity() -> Outcome {
    let mut bad = Vec::new();
    let mut good = Vec::new();
    let mut record = |name: &str, r: Result<root_compress::CompressionMap, Error>| match r {
        Ok(map) => {
            let rep = map.verify_injective();
            if rep.ok() {
                good.push(format!("{name} ({})", rep.checked));
            } else {
                bad.push(format!("{name}: collision {:?}", rep.collision));
            }
        }
        Err(e) => bad.push(format!("{name}: {e}")),
    };
    record("paper E7", Ok(E7Model::standard().map().clone()));
    record("paper E6", Ok(E6Model::standard().map().clone()));
    for (sys, p) in [("E7", 2), ("E6", 3), ("D4", 2), ("A2", 3)] {
        record(&format!("canonical ({sys},{p})"), canonical_compression(&parse_system(sys).unwrap(), p));
    }
    match canonical_compression(&RootSystem::e(8).unwrap(), 2) {
        Err(Error::NoCompression { .. }) => good.push("(E8,2) rejected".into()),
        other => bad.push(format!("(E8,2) not rejected: {:?}", other.map(|_| ()))),
    }
    verdict(bad, good.join(", "))
}

fn c4_lemma27() -> Outcome {
    let m = E7Model::standard();
    let mut bad = Vec::new();
    if !m.lemma27() {
        bad.push("Γ₇⁺ ≠ 𝓛(0) or ≠ one-zero set".into());
    }
    for c in m.twist_checks().unwrap() {
        if !c.preserves_gamma7 {
            bad.push(format!("{} does not preserve Γ₇⁺", c.symmetry));
        }
        if let Some((x, twist, sym)) = c.first_mismatch {
            bad.push(format!("twist v{} ≠ {}: {x} ↦ {twist}, symmetry gives {sym}", c.vertex, c.symmetry));
        }
    }
    verdict(bad, "27 elements; four symmetries preserve Γ₇⁺ and match their twists".into())
}

fn c5_t_graphs() -> Outcome {
    let e7 = E7Model::standard();
    let e6 = E6Model::standard();
    let p7: Vec<_> = Stratum::up_to(7).map(|s| e7.t_equals_o(s)).collect();
    let p6: Vec<_> = Stratum::up_to(6).map(|s| e6.t_equals_o(s)).collect();
    let ok = p7.iter().chain(&p6).all(|c| c.ok()) && p7.last().unwrap().pairs == 351 && p6.last().unwrap().pairs == 120;
    let pairs = |v: &[root_compress::e7::PairCheck]| v.iter().map(|c| c.pairs).collect::<Vec<_>>();
    (ok, format!("E7 pairs {:?}, E6 pairs {:?}, mismatches 0", pairs(&p7), pairs(&p6)))
}

fn c6_other_strata() -> Outcome {
    let m = E7Model::standard();
    let bad: Vec<String> = [1, 3, 4, 5, 6]
        .into_iter()
        .flat_map(|s| {
            let mut v = Vec::new();
            if !m.otherstrata_first(st(s)) {
                v.push(format!("identity (1) fails at s = {s}"));
            }
            if !m.otherstrata_second(st(s)) {
                v.push(format!("identity (2) fails at s = {s}"));
            }
            v
        })
        .collect();
    verdict(bad, "(1) and (2) for s = 1, 3, 4, 5, 6".into())
}

fn c7_orthogonal_triples() -> Outcome {
    let m = E7Model::standard();
    let top = m.gamma_plus(st(7));
    let set: BTreeSet<_> = top.iter().cloned().collect();
    let o = m.space().o_graph_on(&top);
    let mut bad = Vec::new();
    let (mut orth, mut non) = (0, 0);
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            let (x1, x2) = (&top[i], &top[j]);
            let x3 = x1 + x2;
            if o.has_edge(i, j) {
                orth += 1;
                let completions: Vec<usize> =
                    (0..top.len()).filter(|&k| o.has_edge(i, k) && o.has_edge(j, k)).collect();
                if completions.len() != 1 || top[completions[0]] != x3 {
                    bad.push(format!("{x1},{x2}: completion not unique xor"));
                }
                let b1 = m.f_inv(x1).unwrap();
                let b2 = m.f_inv(x2).unwrap();
                match (m.beta3(b1, b2), m.f_inv(&x3)) {
                    (Ok(b3), Ok(want)) if &b3 == want => {}
                    _ => bad.push(format!("{x1},{x2}: β₃ does not match f⁻¹(x₃)")),
                }
            } else {
                non += 1;
                if set.contains(&x3) {
                    bad.push(format!("{x1},{x2}: non-orthogonal pair closes up"));
                }
            }
        }
    }
    verdict(bad, format!("{orth} orthogonal pairs complete uniquely, {non} non-orthogonal pairs do not"))
}

fn c8_order() -> Outcome {
    let e7 = E7Model::standard();
    let e6 = E6Model::standard();
    let mut bad = Vec::new();
    for s in Stratum::up_to(7) {
        let direct = e7.system().stratum_hasse(s).unwrap().map_labels(|r| e7.f(r));
        if !e7.hasse_from_images(s).same_as(&direct) {
            bad.push(format!("E7 stratum {}", s.value()));
        }
    }
    for s in Stratum::up_to(6) {
        let direct = e6.system().stratum_hasse(s).unwrap().map_labels(|r| e6.f(r));
        if !e6.hasse_from_images(s).same_as(&direct) {
            bad.push(format!("E6 stratum {}", s.value()));
        }
    }
    verdict(bad, "Hₛ from image arithmetic equals the root Hasse diagram for all strata of E7 and E6".into())
}

fn c9_double_sixes() -> Outcome {
    let m = E7Model::standard();
    let top = m.gamma_plus(st(7));
    let o = m.space().o_graph_on(&top);
    let n = m.space().n_graph_on(&top);
    let sixes = m.double_sixes();
    let mut o_cliques = 0;
    let mut n_cliques = 0;
    for d in &sixes {
        for half in &d.halves {
            let idx: Vec<usize> =
                half.iter().map(|x| top.iter().position(|y| y.to_string() == *x).expect("in Γ₇⁺")).collect();
            o_cliques += usize::from(idx.len() == 6 && o.is_maximal_clique(&idx));
            n_cliques += usize::from(idx.len() == 6 && n.is_maximal_clique(&idx));
        }
    }
    let order = m.weyl_e6_closure().order();
    let mut bad = Vec::new();
    if sixes.len() != 36 {
        bad.push(format!("{} double sixes", sixes.len()));
    }
    if o_cliques != 2 * sixes.len() {
        bad.push(format!(
            "{o_cliques} of {} halves are maximal 6-cliques of the O-graph ({n_cliques} are of its complement)",
            2 * sixes.len()
        ));
    }
    if order != 51840 {
        bad.push(format!("closure order {order}"));
    }
    verdict(bad, format!("36 double sixes, halves maximal O-cliques, closure {order}"))
}

fn c10_ideals() -> Outcome {
    let mut bad = Vec::new();
    let e8 = RootSystem::e(8).unwrap();
    let mut counts = Vec::new();
    for s in 3..=7 {
        let lattice = IdealLattice::new(st(s)).unwrap();
        let want = if s == 7 { 56 } else { e8.stratum_roots(st(st(s).prime())).unwrap().len() };
        counts.push(lattice.ideals().len());
        if lattice.ideals().len() != want {
            bad.push(format!("s = {s}: {} ideals, expected {want}", lattice.ideals().len()));
        }
        let r = lattice.psi_report();
        if !(r.bijective && r.order_isomorphism) {
            bad.push(format!("ψ{s} is not an order isomorphism"));
        }
    }
    for s in 3..=8 {
        let search = find_open_map(&StratumPoset::new(&e8, st(s)).unwrap()).unwrap();
        let expected = if s == 8 { 0 } else { 1 };
        if search.solutions.len() != expected {
            bad.push(format!("s = {s}: {} open maps", search.solutions.len()));
        }
    }
    let r = E7Symmetries::new().unwrap().report();
    let claims = [
        ("ψ₇∘μ̃ = ν∘ψ₇", r.psi_mu_nu),
        ("ψ₇∘ρ̃ = σ∘ψ₇", r.psi_rho_sigma),
        ("ψ₇(𝒥ᵢ) = {β : β⁷ = i}", r.psi_parts),
        ("h₇∘μ = h₇", r.h7_mu),
        ("h₇∘ρ = ε∘h₇", r.h7_rho_on_domain),
    ];
    for (name, ok) in claims {
        if !ok {
            bad.push(format!("{name} fails"));
        }
    }
    verdict(
        bad,
        format!(
            "ideals {counts:?}; open maps unique for s ≤ 7, none for s = 8; commutation identities hold \
             (printed ν/σ mismatches {}/{}, h₇∘ρ checked on its {} roots)",
            r.printed_nu_mismatches, r.printed_sigma_mismatches, r.h7_rho_domain
        ),
    )
}

fn c11_gamma6() -> Outcome {
    let m = E6Model::standard();
    let top: BTreeSet<_> = m.gamma_plus(st(6)).into_iter().collect();
    let prod: BTreeSet<_> = m.product_one().into_iter().collect();
    let mut bad = Vec::new();
    if top != prod || top.len() != 16 {
        bad.push(format!("|Γ₆⁺| = {}, product-one set {}", top.len(), prod.len()));
    }
    if !m.top_closed_under_symmetries() {
        bad.push("not closed under S₅ and the sign flip".into());
    }
    let order = m.twist_permutation_group_order().unwrap();
    if order != 120 {
        bad.push(format!("twist permutations generate order {order}"));
    }
    verdict(bad, "16 elements, Πxᵢ = 1, closed under S₅ (order 120) and the sign flip".into())
}

fn rootc(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out =
        Command::new(env!("CARGO_BIN_EXE_rootc")).args(args).env_remove("ROOTC_OUT_DIR").output().expect("run rootc");
    (out.status.code(), out.stdout)
}

fn c12_determinism() -> Outcome {
    let mut runs: Vec<Vec<String>> = vec![vec!["verify".into(), "all".into()]];
    for target in ["cube_corner", "square", "hasse", "openmap7", "dynkin", "tgraph"] {
        for format in ["svg", "ascii", "dot", "json"] {
            runs.push(vec!["render".into(), target.into(), "--format".into(), format.into()]);
        }
    }
    for kind in ["roots", "map", "strata", "ideals", "group"] {
        for sys in ["e7", "e6"] {
            runs.push(vec!["export".into(), kind.into(), "--system".into(), sys.into()]);
        }
    }
    let mut bad = Vec::new();
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (c1, o1) = rootc(&args);
        let (c2, o2) = rootc(&args);
        if o1.is_empty() || o1 != o2 || c1 != c2 {
            bad.push(format!("`rootc {}` differs between runs", args.join(" ")));
        }
    }
    verdict(bad, format!("{} commands byte-identical across two runs", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("cardinalities", c1_cardinalities),
        ("stratum sizes", c2_strata),
        ("injectivity", c3_injectivity),
        ("Γ₇⁺ and its symmetries", c4_lemma27),
        ("T-graph = O-graph", c5_t_graphs),
        ("other strata", c6_other_strata),
        ("orthogonal triples", c7_orthogonal_triples),
        ("order from images", c8_order),
        ("double sixes", c9_double_sixes),
        ("order ideals and open maps", c10_ideals),
        ("Γ₆⁺", c11_gamma6),
        ("determinism", c12_determinism),
    ];
    println!("acceptance: tolerance exact for every criterion");
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        println!("{} {:>2} {name}: {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
        if !ok {
            failed.push(i + 1);
        }
    }
    println!("acceptance: {} passed, {} failed {:?}", 12 - failed.len(), failed.len(), failed);
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
