use bigal::galois::{verify_group_law, BiGal, KxK, KxKn, Setting};
use bigal::group::AbelianGroup;
use bigal::hopf::{h_double, taft};
use bigal::json::{hopf_from_str, hopf_to_string};
use bigal::twist::{characters_admissible, characters_from_cocycle, Cocycle2};
use bigal::{Field, Scalar};
use proptest::prelude::*;

fn scalar(f: Field) -> impl Strategy<Value = Scalar> + Clone {
    let d = f.degree();
    (prop::collection::vec(-6i64..=6, d), 1i64..=4).prop_map(move |(c, den)| {
        let mut s = f.zero();
        for (k, c) in c.iter().enumerate() {
            s = &s + &(&f.zeta_pow(k as i64) * &f.int(*c));
        }
        &s * &f.int(den).inv().unwrap()
    })
}

fn nonzero(f: Field) -> impl Strategy<Value = Scalar> + Clone {
    scalar(f).prop_filter("nonzero", |s| !s.is_zero())
}

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![1u32, 3, 4, 5, 6, 8, 12]).prop_map(|n| Field::new(n).unwrap())
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in field().prop_flat_map(|f| (scalar(f.clone()), scalar(f.clone()), scalar(f)))) {
        let f = a.field().clone();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, f.zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
        }
    }

    #[test]
    fn display_parses_back(a in field().prop_flat_map(scalar)) {
        let f = a.field().clone();
        prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn zeta_has_exact_order(n in prop::sample::select(vec![2u32, 3, 4, 5, 6, 9, 10])) {
        let f = Field::new(n).unwrap();
        let z = f.zeta();
        for k in 1..n as i64 {
            prop_assert!(!z.pow(k).unwrap().is_one());
        }
        prop_assert!(z.pow(n as i64).unwrap().is_one());
    }

    #[test]
    fn bicharacters_are_cocycles(n in 2u32..=4, m in prop::array::uniform2(prop::array::uniform2(0i64..4))) {
        let f = Field::new(n).unwrap();
        let g = AbelianGroup::square(n);
        let psi = Cocycle2::bicharacter(&f, g.whole(), m).unwrap();
        prop_assert!(psi.check_identity().passed);
        prop_assert!(psi.product(&psi.inverse()).unwrap() == Cocycle2::trivial(&f, g.whole()));
        let (c1, c2) = characters_from_cocycle(&psi).unwrap();
        prop_assert!(characters_admissible(&c1, &c2));
        // the self-braiding of x and y is untouched by a cocycle twist
        prop_assert!(c1.at(g.elem(1, 0)).is_one() && c2.at(g.elem(0, 1)).is_one());
    }

    #[test]
    fn kxk_group_axioms((x, y, z) in {
        let f = Field::new(6).unwrap();
        let e = (nonzero(f.clone()), scalar(f)).prop_map(|(a, b)| KxK::new(a, b).unwrap());
        (e.clone(), e.clone(), e)
    }) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.inv().unwrap().mul(&x), KxK::one(x.a.field()));
    }

    #[test]
    fn phi_is_a_homomorphism(n in 2u32..=3, (a, b, c, d) in {
        let f = Field::new(6).unwrap();
        (nonzero(f.clone()), scalar(f.clone()), nonzero(f.clone()), scalar(f))
    }) {
        let x = KxKn::new(n, a.clone(), b.clone()).unwrap();
        let y = KxKn::new(n, c.clone(), d.clone()).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().phi().unwrap(), x.phi().unwrap().mul(&y.phi().unwrap()));
        let p = BiGal::new(a, b).unwrap().compose(&BiGal::new(c, d).unwrap(), n).unwrap();
        prop_assert!(KxKn::from_bigal(n, &p) == x.mul(&y).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn group_law_random_pairs((xi1, mu1, xi2, mu2) in {
        let f = Field::new(2).unwrap();
        (nonzero(f.clone()), scalar(f.clone()), nonzero(f.clone()), scalar(f))
    }) {
        let f = xi1.field().clone();
        let s = Setting::new(&f, 2).unwrap();
        let law = verify_group_law(&s, &BiGal::new(xi1, mu1).unwrap(), &BiGal::new(xi2, mu2).unwrap()).unwrap();
        prop_assert!(law.passed(), "{}", law.report);
    }
}

#[test]
fn hopf_json_round_trip() {
    for n in 2..=3 {
        let f = Field::new(n).unwrap();
        for h in [taft(&f, n).unwrap(), h_double(&f, n).unwrap()] {
            let text = hopf_to_string(&h);
            let back = hopf_from_str(&text).unwrap();
            assert!(back.algebra == h.algebra);
            assert_eq!(hopf_to_string(&back), text);
        }
    }
}
