use bigal::comodule::{regular_left, ComoduleAlgebra};
use bigal::group::AbelianGroup;
use bigal::hopf::{h_double, verify_hopf};
use bigal::twist::*;
use bigal::Field;
use std::sync::Arc;

fn samples(n: u32) -> Vec<Exponents> {
    match n {
        2 => vec![[[0, 0], [0, 0]], [[0, 1], [0, 0]], [[1, 0], [0, 1]], [[1, 1], [1, 0]]],
        _ => vec![[[0, 0], [0, 0]], [[0, 1], [0, 0]], [[1, 2], [0, 1]], [[2, 0], [1, 1]]],
    }
}

#[test]
fn twisted_presentation_n2() {
    let f = Field::new(2).unwrap();
    for m in samples(2) {
        let psi = Cocycle2::bicharacter(&f, AbelianGroup::square(2).whole(), m).unwrap();
        let t = verify_twist_presentation(&f, 2, &psi).unwrap();
        assert!(t.passed(), "{m:?}: {}", t.report);
    }
}

#[test]
fn twisted_presentation_n3() {
    let f = Field::new(3).unwrap();
    for m in samples(3) {
        let start = std::time::Instant::now();
        let psi = Cocycle2::bicharacter(&f, AbelianGroup::square(3).whole(), m).unwrap();
        let t = verify_twist_presentation(&f, 3, &psi).unwrap();
        assert!(t.passed(), "{m:?}: {}", t.report);
        eprintln!("{m:?}: {:?}", start.elapsed());
    }
}

#[test]
fn non_bicharacter_cocycle_twists() {
    let f = Field::new(4).unwrap();
    let g = AbelianGroup::square(2);
    let c: Vec<_> = (0..4).map(|k| f.int(k + 2)).collect();
    let cob = Cocycle2::coboundary(g.whole(), &c).unwrap();
    let psi = Cocycle2::bicharacter(&f, g.whole(), [[0, 1], [0, 0]]).unwrap().product(&cob).unwrap();
    assert!(!psi.is_normalized());
    let t = verify_twist_presentation(&f, 2, &psi.normalized()).unwrap();
    assert!(t.passed(), "{}", t.report);
}

#[test]
fn inverse_is_pointwise_inverse() {
    let f = Field::new(2).unwrap();
    let h = Arc::new(h_double(&f, 2).unwrap());
    let psi = Cocycle2::bicharacter(&f, AbelianGroup::square(2).whole(), [[0, 1], [1, 1]]).unwrap();
    let s = lift_hopf_cocycle(h.clone(), &psi).unwrap();
    let si = lift_hopf_cocycle(h.clone(), &psi.inverse()).unwrap();
    assert_eq!(s.inverse, si.sigma);
    assert_eq!(s.report.get("cocycle identity").unwrap().evaluated, 16 * 16 * 16);
}

#[test]
fn trivial_twist_is_identity() {
    let f = Field::new(2).unwrap();
    let h = Arc::new(h_double(&f, 2).unwrap());
    let s = lift_hopf_cocycle(h.clone(), &Cocycle2::trivial(&f, AbelianGroup::square(2).whole())).unwrap();
    assert_eq!(s.sigma, counit_form(&h));
    let t = twist_hopf(&s).unwrap();
    assert_eq!(t.algebra, h.algebra);
    for b in 0..h.dim() {
        assert_eq!(t.antipode(b), h.antipode(b));
    }
}

#[test]
fn twists_compose_on_group_part() {
    let f = Field::new(2).unwrap();
    let g = AbelianGroup::square(2);
    let h = Arc::new(h_double(&f, 2).unwrap());
    let p1 = Cocycle2::bicharacter(&f, g.whole(), [[0, 1], [0, 0]]).unwrap();
    let p2 = Cocycle2::bicharacter(&f, g.whole(), [[1, 0], [1, 1]]).unwrap();
    let once = Arc::new(twist_hopf(&lift_hopf_cocycle(h.clone(), &p1).unwrap()).unwrap());
    assert!(verify_hopf(&once).passed());
    let twice = twist_hopf(&lift_hopf_cocycle(once, &p2).unwrap()).unwrap();
    let both = twist_hopf(&lift_hopf_cocycle(h, &p1.product(&p2).unwrap()).unwrap()).unwrap();
    assert_eq!(twice.algebra, both.algebra);
}

#[test]
fn comodule_twist_round_trip() {
    let f = Field::new(2).unwrap();
    let g = AbelianGroup::square(2);
    let h = Arc::new(h_double(&f, 2).unwrap());
    let psi = Cocycle2::bicharacter(&f, g.whole(), [[0, 1], [0, 0]]).unwrap();
    let s = lift_hopf_cocycle(h.clone(), &psi).unwrap();
    let ht = Arc::new(twist_hopf(&s).unwrap());
    let a: ComoduleAlgebra = regular_left(h.clone());
    let at = twist_comodule(&a, &s, ht.clone()).unwrap();
    let back_c = lift_hopf_cocycle(ht.clone(), &psi.inverse()).unwrap();
    let hb = Arc::new(twist_hopf(&back_c).unwrap());
    assert_eq!(hb.algebra, h.algebra);
    let back = twist_comodule(&at, &back_c, hb).unwrap();
    assert_eq!(back.algebra, a.algebra);
}
