mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use root_compress::{Family, Root, RootSystem, Stratum};

fn coeff_set(roots: &[Root]) -> BTreeSet<Vec<i32>> {
    roots.iter().map(|r| r.coeffs().to_vec()).collect()
}

#[test]
fn e_series_matches_exhaustive_box_search() {
    for (n, count) in [(3, 4), (4, 10), (5, 20), (6, 36), (7, 63), (8, 120)] {
        let a = common::cartan_e(n);
        let brute = common::brute_positive_roots(&a, &common::THETA_E8[..n]);
        assert_eq!(brute.len(), count, "E{n}");
        let sys = RootSystem::e(n).unwrap();
        assert_eq!(coeff_set(sys.positive_roots()), brute.into_iter().collect(), "E{n}");
        assert_eq!(sys.roots().len(), 2 * count);
        let cartan: Vec<Vec<i32>> = sys.cartan().to_vec();
        assert_eq!(cartan, a);
    }
}

#[test]
fn classical_counts() {
    for (f, n, pos) in
        [(Family::A, 1, 1), (Family::A, 4, 10), (Family::D, 4, 12), (Family::D, 5, 20), (Family::D, 7, 42)]
    {
        let sys = RootSystem::build(f, n).unwrap();
        assert_eq!(sys.positive_roots().len(), pos, "{f:?}{n}");
        for r in sys.roots() {
            assert_eq!(sys.inner(r, r), 2);
        }
    }
    assert!(RootSystem::build(Family::E, 9).is_err());
    assert!(RootSystem::build(Family::D, 2).is_err());
    let a1 = RootSystem::build(Family::A, 1).unwrap();
    assert_eq!(coeff_set(a1.roots()), [vec![-1], vec![1]].into_iter().collect());
    assert_eq!(a1.lowest_root().unwrap().coeffs(), &[-1]);
}

#[test]
fn enumeration_order_is_height_then_lex() {
    let sys = RootSystem::e(7).unwrap();
    let keys: Vec<(i32, Vec<i32>)> = sys.positive_roots().iter().map(|r| (r.height(), r.coeffs().to_vec())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn strata_sizes_from_coefficients() {
    let a = common::cartan_e(8);
    let brute = common::brute_positive_roots(&a, &common::THETA_E8);
    let mut sizes = std::collections::BTreeMap::new();
    for v in &brute {
        *sizes.entry(common::stratum(v)).or_insert(0) += 1;
    }
    let want: Vec<(usize, usize)> = vec![(1, 1), (3, 3), (4, 6), (5, 10), (6, 16), (7, 27), (8, 57)];
    assert_eq!(sizes.into_iter().collect::<Vec<_>>(), want);

    let e8 = RootSystem::e(8).unwrap();
    for r in e8.positive_roots() {
        assert_eq!(e8.stratum(r).unwrap().value(), common::stratum(r.coeffs()));
    }
    let total: usize = Stratum::up_to(8).map(|s| e8.stratum_roots(s).unwrap().len()).sum();
    assert_eq!(total, 120);
}

#[test]
fn inner_products_on_the_diagram() {
    let e8 = RootSystem::e(8).unwrap();
    let a = |i| e8.simple_root(i);
    assert_eq!(e8.inner(&a(3), &a(4)), -1);
    assert_eq!(e8.inner(&a(2), &a(4)), -1);
    assert_eq!(e8.inner(&a(2), &a(3)), 0);
    for i in 1..=8 {
        assert_eq!(e8.inner(&a(i), &a(i)), 2);
    }
}

#[test]
fn lowest_root_of_e8_is_orthogonal_to_e7() {
    let e8 = RootSystem::e(8).unwrap();
    let low = e8.lowest_root().unwrap();
    let a = common::cartan_e(8);
    let e7 = common::brute_positive_roots(&common::cartan_e(7), &common::THETA_E8[..7]);
    for g in &e7 {
        assert_eq!(common::form(&a, low.coeffs(), &common::pad(g, 8)), 0);
    }
    let theta: Vec<i32> = low.coeffs().iter().map(|c| -c).collect();
    assert_eq!(theta, common::THETA_E8.to_vec());
    for r in e8.positive_roots() {
        assert!(common::le(r.coeffs(), &theta));
    }
}

#[test]
fn hasse_of_small_strata() {
    let e8 = RootSystem::e(8).unwrap();
    for s in Stratum::up_to(8) {
        let roots = e8.stratum_roots(s).unwrap();
        let g = e8.stratum_hasse(s).unwrap();
        // covering pairs straight from coefficient vectors
        let mut covers = BTreeSet::new();
        for (i, x) in roots.iter().enumerate() {
            for (j, y) in roots.iter().enumerate() {
                if i == j || !common::le(x.coeffs(), y.coeffs()) {
                    continue;
                }
                let between = roots.iter().any(|z| {
                    z != x && z != y && common::le(x.coeffs(), z.coeffs()) && common::le(z.coeffs(), y.coeffs())
                });
                if !between {
                    covers.insert((x.to_string(), y.to_string()));
                }
            }
        }
        let mut got = BTreeSet::new();
        for (u, v) in g.edges() {
            let (x, y) = (g.label(u), g.label(v));
            let (lo, hi) = if x.height() < y.height() { (x, y) } else { (y, x) };
            got.insert((lo.to_string(), hi.to_string()));
            let diff = hi - lo;
            assert_eq!(diff.height(), 1, "edge {lo} {hi}");
        }
        assert_eq!(got, covers, "stratum {}", s.value());
    }
    let h1 = e8.stratum_hasse(Stratum::new(1).unwrap()).unwrap();
    assert_eq!((h1.len(), h1.edge_count()), (1, 0));
    let h3 = e8.stratum_hasse(Stratum::new(3).unwrap()).unwrap();
    // α₃ < α₁+α₃, α₂ isolated
    assert_eq!((h3.len(), h3.edge_count()), (3, 1));
    assert_eq!(e8.stratum_hasse(Stratum::new(7).unwrap()).unwrap().len(), 27);
}

#[test]
fn twists_are_isometries_of_the_whole_root_set() {
    for n in [6, 7] {
        let sys = RootSystem::e(n).unwrap();
        for i in 3..=n {
            let t = sys.dynkin_twist(i).unwrap();
            let perm = t.permutation();
            let mut seen = perm.to_vec();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), sys.roots().len(), "E{n} v{i} not a bijection");
            for (a, &pa) in sys.roots().iter().zip(perm) {
                assert_eq!(t.apply(a), sys.roots()[pa]);
                for (b, &pb) in sys.roots().iter().zip(perm) {
                    assert_eq!(sys.inner(&sys.roots()[pa], &sys.roots()[pb]), sys.inner(a, b));
                }
            }
        }
        assert!(sys.dynkin_twist(2).is_err());
        assert!(sys.dynkin_twist(1).is_err());
    }
}

#[test]
fn tilde_lands_in_the_top_stratum_of_e7() {
    let e7 = RootSystem::e(7).unwrap();
    let top: BTreeSet<Root> = e7.stratum_roots(Stratum::new(7).unwrap()).unwrap().into_iter().collect();
    for s in Stratum::up_to(7) {
        let roots = e7.stratum_roots(s).unwrap();
        let lifted: BTreeSet<Root> = roots.iter().map(|b| e7.tilde(b).unwrap()).collect();
        assert_eq!(lifted.len(), roots.len(), "tilde not injective on stratum {}", s.value());
        assert!(lifted.is_subset(&top));
    }
    let a1 = e7.simple_root(1);
    let t = e7.tilde(&a1).unwrap();
    assert_eq!(t.to_string(), "1011111");
    assert_eq!(e7.stratum(&t).unwrap().value(), 7);
    assert_eq!(e7.tilde(&e7.simple_root(6)).unwrap().to_string(), "0000011");
}

#[test]
fn literal_comparability_criterion() {
    // one-step relation: β′ − β a positive root
    let e7 = RootSystem::e(7).unwrap();
    let pos = e7.positive_roots();
    for (i, a) in pos.iter().enumerate() {
        for b in &pos[i + 1..] {
            let related = e7.differs_by_positive_root(a, b) || e7.differs_by_positive_root(b, a);
            assert_eq!(related, e7.inner(a, b) > 0, "{a} {b}");
        }
    }
}

fn e8() -> &'static RootSystem {
    use std::sync::OnceLock;
    static E8: OnceLock<RootSystem> = OnceLock::new();
    E8.get_or_init(|| RootSystem::e(8).unwrap())
}

proptest! {
    #[test]
    fn inner_is_symmetric_and_bilinear(
        x in prop::collection::vec(-4i32..5, 8),
        y in prop::collection::vec(-4i32..5, 8),
        z in prop::collection::vec(-4i32..5, 8),
        k in -3i32..4,
    ) {
        let sys = e8();
        let (x, y, z) = (Root::new(x), Root::new(y), Root::new(z));
        prop_assert_eq!(sys.inner(&x, &y), sys.inner(&y, &x));
        let kx_z = Root::new(x.coeffs().iter().zip(z.coeffs()).map(|(a, b)| k * a + b).collect());
        prop_assert_eq!(sys.inner(&kx_z, &y), k * sys.inner(&x, &y) + sys.inner(&z, &y));
    }

    #[test]
    fn leq_is_a_partial_order(i in 0usize..120, j in 0usize..120, k in 0usize..120) {
        let sys = e8();
        let p = sys.positive_roots();
        let (a, b, c) = (&p[i], &p[j], &p[k]);
        prop_assert!(sys.leq(a, a));
        if sys.leq(a, b) && sys.leq(b, a) {
            prop_assert_eq!(a, b);
        }
        if sys.leq(a, b) && sys.leq(b, c) {
            prop_assert!(sys.leq(a, c));
        }
        prop_assert_eq!(sys.leq(a, b), common::le(a.coeffs(), b.coeffs()));
    }

    #[test]
    fn root_text_round_trips(i in 0usize..240) {
        let r = &e8().roots()[i];
        let back: Root = r.to_string().parse().unwrap();
        prop_assert_eq!(&back, r);
    }

    #[test]
    fn reflections_permute_roots(i in 0usize..240, j in 0usize..240) {
        let sys = e8();
        let (a, b) = (&sys.roots()[i], &sys.roots()[j]);
        let r = sys.reflect(a, b);
        prop_assert!(sys.is_root(&r));
        prop_assert_eq!(sys.reflect(a, &r), b.clone());
    }
}
