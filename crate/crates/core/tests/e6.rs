mod common;

use std::collections::BTreeSet;

use root_compress::e6::{E6Model, PAPER_S};
use root_compress::{Root, Stratum};

type V = [i32; 5];

fn parse(s: &str) -> V {
    let d = common::digits(s);
    [d[0], d[1], d[2], d[3], d[4]]
}

fn name(x: V) -> String {
    x.iter().map(|d| char::from_digit(d.rem_euclid(3) as u32, 3).unwrap()).collect()
}

fn f(beta: &[i32]) -> V {
    let mut out = [0; 5];
    for (c, s) in beta.iter().zip(PAPER_S) {
        let s = parse(s);
        for k in 0..5 {
            out[k] = (out[k] + c * s[k]).rem_euclid(3);
        }
    }
    out
}

fn dot(x: V, y: V) -> i32 {
    (0..5).map(|k| x[k] * y[k]).sum::<i32>().rem_euclid(3)
}

fn all_roots() -> Vec<Vec<i32>> {
    let pos = common::brute_positive_roots(&common::cartan_e(6), &common::THETA_E8[..6]);
    let neg: Vec<Vec<i32>> = pos.iter().map(|r| r.iter().map(|c| -c).collect()).collect();
    pos.into_iter().chain(neg).collect()
}

fn space() -> Vec<V> {
    (0..243).map(|i| [i / 81, (i / 27) % 3, (i / 9) % 3, (i / 3) % 3, i % 3]).collect()
}

#[test]
fn s_realises_the_cartan_matrix_mod_3() {
    let a = common::cartan_e(6);
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(dot(parse(PAPER_S[i]), parse(PAPER_S[j])), a[i][j].rem_euclid(3));
        }
    }
}

#[test]
fn roots_biject_onto_gamma() {
    let gamma: BTreeSet<V> = space().into_iter().filter(|&x| x != [0; 5] && dot(x, x) == 2).collect();
    assert_eq!(gamma.len(), 72);
    let images: BTreeSet<V> = all_roots().iter().map(|r| f(r)).collect();
    assert_eq!(images, gamma);
    let m = E6Model::standard();
    for r in m.system().roots() {
        assert_eq!(m.f(r).to_string(), name(f(r.coeffs())));
        assert_eq!(m.f_inv(&m.f(r)).unwrap(), r);
    }
}

#[test]
fn top_stratum_is_product_one() {
    let oracle: BTreeSet<V> =
        all_roots().iter().filter(|r| r.iter().rposition(|&c| c != 0) == Some(5) && r[5] > 0).map(|r| f(r)).collect();
    let product_one: BTreeSet<V> =
        space().into_iter().filter(|x| x.iter().product::<i32>().rem_euclid(3) == 1).collect();
    assert_eq!(oracle.len(), 16);
    assert_eq!(oracle, product_one);
    let m = E6Model::standard();
    let got: BTreeSet<String> = m.gamma_plus(Stratum::new(6).unwrap()).iter().map(|x| x.to_string()).collect();
    assert_eq!(got, oracle.iter().map(|&x| name(x)).collect());
    assert!(m.top_stratum());
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn symmetries_of_the_top_stratum() {
    let top: BTreeSet<V> = space().into_iter().filter(|x| x.iter().product::<i32>().rem_euclid(3) == 1).collect();
    let perms = permutations(5);
    assert_eq!(perms.len(), 120);
    for p in &perms {
        let image: BTreeSet<V> = top.iter().map(|x| [x[p[0]], x[p[1]], x[p[2]], x[p[3]], x[p[4]]]).collect();
        assert_eq!(image, top);
    }
    let flip = E6Model::SIGN_FLIP;
    let image: BTreeSet<V> = top
        .iter()
        .map(|x| {
            let v = flip.apply(&x.map(|d| d as u32));
            [0, 1, 2, 3, 4].map(|k| v[k].rem_euclid(3) as i32)
        })
        .collect();
    assert_eq!(image, top);
    let m = E6Model::standard();
    assert!(m.top_closed_under_symmetries());
    assert_eq!(m.twist_permutation_group_order().unwrap(), 120);
    let actions = m.twist_actions().unwrap();
    for a in &actions {
        assert!(a.preserves_top, "v{}", a.vertex);
        let mono = a.monomial.expect("signed permutation");
        assert_eq!(mono.is_permutation(), a.vertex != 6, "v{}", a.vertex);
    }
    assert_eq!(actions.iter().find(|a| a.vertex == 6).unwrap().monomial, Some(E6Model::SIGN_FLIP));
}

#[test]
fn t_graph_and_t_equals_o() {
    let pts = space();
    let t = |x: V, y: V| (0..5).filter(|&k| x[k] == y[k]).count() == 1;
    for &x in &pts {
        assert_eq!(pts.iter().filter(|&&y| t(x, y)).count(), 80);
    }
    let m = E6Model::standard();
    assert_eq!(m.t_graph().regular_degree(), Some(80));
    let a = common::cartan_e(6);
    let pos = common::brute_positive_roots(&a, &common::THETA_E8[..6]);
    let mut pairs = Vec::new();
    for s in [1, 3, 4, 5, 6] {
        let st: Vec<&Vec<i32>> = pos.iter().filter(|r| common::stratum(r) == s).collect();
        let mut n = 0;
        for i in 0..st.len() {
            for j in i + 1..st.len() {
                let orth = common::form(&a, st[i], st[j]) == 0;
                assert_eq!(t(f(st[i]), f(st[j])), orth);
                n += 1;
            }
        }
        let check = m.t_equals_o(Stratum::new(s).unwrap());
        assert_eq!((check.pairs, check.mismatches), (n, 0));
        pairs.push(n);
    }
    assert_eq!(pairs, vec![0, 3, 15, 45, 120]);
}

#[test]
fn link_in_the_square_example() {
    let m = E6Model::standard();
    let v = m.vector("11122").unwrap();
    let top = m.gamma_plus(Stratum::new(6).unwrap());
    let link: BTreeSet<String> = m.link(&v).iter().filter(|x| top.contains(x)).map(|x| x.to_string()).collect();
    let oracle: BTreeSet<String> = top
        .iter()
        .map(|x| x.to_string())
        .filter(|x| x.chars().zip("11122".chars()).filter(|(a, b)| a == b).count() == 1)
        .collect();
    assert_eq!(link, oracle);
    assert_eq!(link.len(), 5);
}

#[test]
fn hasse_from_arithmetic() {
    let m = E6Model::standard();
    for s in Stratum::up_to(6) {
        let direct = m.system().stratum_hasse(s).unwrap().map_labels(|r: &Root| m.f(r));
        assert!(m.hasse_from_images(s).same_as(&direct), "stratum {}", s.value());
    }
}

#[test]
fn square_layout_fills_the_grid() {
    let m = E6Model::standard();
    let cells: BTreeSet<(usize, usize)> = m
        .gamma_plus(Stratum::new(6).unwrap())
        .iter()
        .map(|x| {
            let c = m.square_layout(x).unwrap();
            (c.row, c.col)
        })
        .collect();
    assert_eq!(cells.len(), 16);
    assert!(cells.iter().all(|&(r, c)| r < 4 && c < 4));
    assert!(m.square_layout(&m.vector("00000").unwrap()).is_err());
}
