use bigal::hopf::{h_chi, h_double, taft, taft_inverse, verify_consequences, verify_hopf, Character};
use bigal::group::AbelianGroup;
use bigal::Field;

#[test]
fn taft_algebras_pass_axioms() {
    for n in 2..=5 {
        let f = Field::new(n).unwrap();
        for h in [taft(&f, n).unwrap(), taft_inverse(&f, n).unwrap()] {
            let r = verify_hopf(&h);
            assert!(r.passed(), "{r}");
            assert!(verify_consequences(&h).passed());
            assert_eq!(h.dim(), (n * n) as usize);
        }
    }
}

#[test]
fn doubled_taft_passes_axioms() {
    for n in 2..=3 {
        let f = Field::new(n).unwrap();
        let h = h_double(&f, n).unwrap();
        let r = verify_hopf(&h);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn trivial_characters_reproduce_h() {
    for n in 2..=3 {
        let f = Field::new(n).unwrap();
        let g = AbelianGroup::square(n);
        let t = Character::trivial(&f, g);
        let a = h_chi(&f, n, &t, &t).unwrap();
        let b = h_double(&f, n).unwrap();
        assert_eq!(a.algebra.labels(), b.algebra.labels());
        assert!(a.algebra == b.algebra);
        for k in 0..a.dim() {
            assert_eq!(a.comult(k), b.comult(k));
            assert_eq!(a.antipode(k), b.antipode(k));
        }
    }
}

#[test]
fn inverse_taft_is_cop() {
    for n in 2..=5 {
        let f = Field::new(n).unwrap();
        let (_, _, m) = bigal::morphism::iso_cop(&f, n).unwrap();
        assert!(m.passed(), "{}", m.report);
    }
}
