use proptest::prelude::*;
use root_compress::export::parse_system;
use root_compress::{canonical_compression, check_s, reduce_composite, E6Model, E7Model, Error, FpSpace, RootSystem};

#[test]
fn paper_maps_are_valid_and_injective() {
    let e7 = E7Model::standard();
    let r = e7.map().verify_injective();
    assert!(r.ok());
    assert_eq!(r.checked, 64);
    let e6 = E6Model::standard();
    let r = e6.map().verify_injective();
    assert!(r.ok());
    assert_eq!(r.checked, 72);
    assert!(check_s(e7.system(), e7.space(), e7.map().s()).unwrap().ok());
    assert!(check_s(e6.system(), e6.space(), e6.map().s()).unwrap().ok());
}

#[test]
fn canonical_quotients() {
    for (sys, p, size) in [("E7", 2, 64), ("E6", 3, 72)] {
        let sys = parse_system(sys).unwrap();
        let map = canonical_compression(&sys, p).unwrap();
        let r = map.verify_injective();
        assert!(r.ok(), "{} mod {p}", sys.name());
        assert_eq!(r.checked, size);
        assert_eq!(map.space().dim(), sys.rank() - 1);
    }
    let e8 = RootSystem::e(8).unwrap();
    assert_eq!(canonical_compression(&e8, 2).unwrap_err(), Error::NoCompression { p: 2, det: 1 });
    let e7 = RootSystem::e(7).unwrap();
    assert_eq!(canonical_compression(&e7, 4).unwrap_err(), Error::NotPrime(4));
    assert!(matches!(canonical_compression(&e7, 3), Err(Error::NoCompression { .. })));
    for (name, p) in [("D4", 2), ("A2", 3)] {
        let sys = parse_system(name).unwrap();
        assert_eq!(canonical_compression(&sys, p).unwrap_err(), Error::DegenerateImages, "{name}");
    }
}

#[test]
fn wrong_s_is_reported() {
    let e7 = E7Model::standard();
    let space = FpSpace::f_cubed();
    let mut s = e7.map().s().to_vec();
    s[0] = s[1].clone();
    let report = check_s(e7.system(), &space, &s).unwrap();
    assert!(!report.ok());
}

#[test]
fn composite_reduction() {
    let e6 = RootSystem::e(6).unwrap();
    let gram: Vec<Vec<i64>> = e6.cartan().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let space =
        FpSpace::new(root_compress::FpForm::from_gram(9, &gram).unwrap(), root_compress::Notation::Digits).unwrap();
    let s = (0..6).map(|i| space.vector(&(0..6).map(|k| i64::from(k == i)).collect::<Vec<_>>()).unwrap()).collect();
    let lift = root_compress::CompressionMap::new(e6, space, s).unwrap();
    assert!(lift.verify_injective().ok());
    let down = reduce_composite(&lift, 3).unwrap();
    assert_eq!(down.p(), 3);
    assert!(down.verify_injective().ok());
    assert!(reduce_composite(&lift, 2).is_err());
    assert!(reduce_composite(&lift, 5).is_err());
}

proptest! {
    #[test]
    fn e6_map_is_an_isometry_mod_3(i in 0usize..72, j in 0usize..72) {
        let m = E6Model::standard();
        let sys = m.system();
        let (a, b) = (&sys.roots()[i], &sys.roots()[j]);
        let lhs = m.space().eval(&m.f(a), &m.f(b)).unwrap() as i32;
        prop_assert_eq!(lhs, sys.inner(a, b).rem_euclid(3));
        let sum = a + b;
        if sys.is_root(&sum) {
            prop_assert_eq!(m.f(&sum), m.f(a).checked_add(&m.f(b)).unwrap());
        }
    }

    #[test]
    fn e7_map_is_an_isometry_mod_2(i in 0usize..63, j in 0usize..63) {
        let m = E7Model::standard();
        let sys = m.system();
        let (a, b) = (&sys.positive_roots()[i], &sys.positive_roots()[j]);
        let lhs = m.space().eval(&m.f(a), &m.f(b)).unwrap() as i32;
        prop_assert_eq!(lhs, sys.inner(a, b).rem_euclid(2));
    }
}
