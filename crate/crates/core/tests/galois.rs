use bigal::comodule::{coinvariants, right_coinvariants, trivial_left};
use bigal::families::{Family, FamilySpec};
use bigal::galois::*;
use bigal::group::AbelianGroup;
use bigal::twist::Cocycle2;
use bigal::Field;

fn setting(n: u32) -> Setting {
    Setting::new(&Field::new(n).unwrap(), n).unwrap()
}

#[test]
fn ell_is_bigalois_n2() {
    let s = setting(2);
    let f = &s.field;
    for (xi, mu) in [(f.one(), f.zero()), (f.one(), f.one()), (f.int(3), f.int(-2))] {
        let a = to_bicomodule(&s, &ell(&s, &BiGal::new(xi, mu).unwrap()).unwrap()).unwrap();
        let g = is_bigalois(&a).unwrap();
        assert!(g.passed(), "{}", g.report);
    }
}

#[test]
fn regular_taft_is_bigalois() {
    for n in [2, 3] {
        let s = setting(n);
        let g = is_bigalois(&s.regular_bicomodule()).unwrap();
        assert!(g.passed(), "{}", g.report);
    }
}

#[test]
fn right_coaction_of_w() {
    // ρ(w) = w⊗1 + e_(g,g)⊗x
    let s = setting(2);
    let a = to_bicomodule(&s, &ell(&s, &BiGal::neutral(&s.field)).unwrap()).unwrap();
    let w = a.algebra.index_of("w").unwrap();
    let e = a.algebra.index_of("(g,g)").unwrap();
    let x = s.t.algebra.index_of("x").unwrap();
    let one_t = s.t.algebra.unit().first().unwrap().0;
    let rho = a.apply_right(&a.basis_vector(w));
    let keys: Vec<_> = rho.keys().collect();
    let mut expect = vec![(w, one_t), (e, x)];
    expect.sort();
    assert_eq!(keys, expect);
}

#[test]
fn k01_is_not_bigalois() {
    let s = setting(2);
    let f = &s.field;
    let g = AbelianGroup::square(2);
    let spec = FamilySpec::new(2, Family::K01 { a: f.zero() }, Cocycle2::trivial(f, g.whole()));
    let k = bigal::families::build_family(&spec, s.h.clone()).unwrap();
    let b = to_bicomodule(&s, &k).unwrap();
    let r = is_bigalois(&b).unwrap();
    assert!(!r.passed());
    assert!(!r.report.get("dim A = dim T_q").unwrap().passed);
}

#[test]
fn cotensor_with_base_field_is_coinvariants() {
    let s = setting(2);
    let a = to_bicomodule(&s, &ell(&s, &BiGal::new(s.field.int(2), s.field.one()).unwrap()).unwrap()).unwrap();
    let k = bigal::algebra::Algebra::from_table(
        s.field.clone(),
        vec!["1".into()],
        vec![bigal::linalg::Vector::single(0, s.field.one())],
        bigal::linalg::Vector::single(0, s.field.one()),
    )
    .unwrap();
    let k = trivial_left("k", k, s.t.clone()).unwrap();
    let e = equalizer(&a, &k).unwrap();
    let c = right_coinvariants(&a).unwrap();
    assert_eq!(e.dim(), c.dim());
    assert_eq!(e.dim(), 1);
}

#[test]
fn taft_cotensor_taft() {
    let s = setting(3);
    let t = s.regular_bicomodule();
    assert_eq!(equalizer(&t, &t).unwrap().dim(), 9);
}

#[test]
fn group_law_n2_example() {
    let s = setting(2);
    let f = &s.field;
    let l = BiGal::new(f.int(2), f.one()).unwrap();
    let r = BiGal::new(f.int(3), f.int(5)).unwrap();
    let g = verify_group_law(&s, &l, &r).unwrap();
    assert_eq!(g.product, BiGal::new(f.int(6), f.int(14)).unwrap());
    assert!(g.passed(), "{}", g.report);
    assert_eq!(g.cotensor_dim, 4);
    assert!(coinvariants(&ell(&s, &g.product).unwrap()).unwrap().trivial);
}

#[test]
fn group_law_grid() {
    for n in [2u32, 3] {
        let s = setting(n);
        let grid = default_grid(&s.field);
        for (i, (a, b)) in grid.iter().enumerate() {
            let (c, d) = &grid[(i + 2) % grid.len()];
            let l = BiGal::new(a.clone(), b.clone()).unwrap();
            let r = BiGal::new(c.clone(), d.clone()).unwrap();
            let g = verify_group_law(&s, &l, &r).unwrap();
            assert!(g.passed(), "n={n}: {}", g.report);
        }
    }
}

#[test]
fn left_neutrality() {
    let s = setting(2);
    let p = BiGal::new(s.field.int(7), s.field.int(-3)).unwrap();
    let g = verify_group_law(&s, &BiGal::neutral(&s.field), &p).unwrap();
    assert!(g.passed());
    assert_eq!(g.product, p);
}

#[test]
fn neutral_object() {
    for n in [2, 3] {
        let s = setting(n);
        let (r, search) = neutral_check(&s).unwrap();
        assert!(r.passed(), "{r}");
        assert!(search.found());
    }
}

#[test]
fn equivalence_decisions() {
    let s = setting(3);
    let f = &s.field;
    let a = BiGal::new(f.int(2), f.one()).unwrap();
    let qa = BiGal::new(&f.int(2) * &s.q, f.one()).unwrap();
    let e = bigal_equivalence(&s, &a, &qa).unwrap();
    assert!(e.equivalent && e.report.passed(), "{}", e.report);
    assert!(e.witness.is_some());

    let refl = bigal_equivalence(&s, &a, &a).unwrap();
    assert!(refl.equivalent && refl.report.passed());
    assert_eq!(refl.witness.as_deref(), Some("(1,1)"));

    let b = BiGal::new(f.one(), f.zero()).unwrap();
    let c = BiGal::new(f.one(), f.one()).unwrap();
    let e = bigal_equivalence(&s, &b, &c).unwrap();
    assert!(!e.equivalent && e.report.passed(), "{}", e.report);
    assert!(e.reason.contains("μ"));

    let d = BiGal::new(f.int(2), f.zero()).unwrap();
    let e = bigal_equivalence(&s, &b, &d).unwrap();
    assert!(!e.equivalent && e.report.passed(), "{}", e.report);
}

#[test]
fn group_structure() {
    for n in [2, 3] {
        let f = Field::new(n).unwrap();
        let r = phi_check(&f, n, &default_grid(&f)).unwrap();
        assert!(r.passed(), "{r}");
    }
}
