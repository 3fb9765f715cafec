//! The ten acceptance criteria, exact throughout. One line per criterion.

use bigal::algebra::{tensor_of, Algebra, Generator};
use bigal::comodule::{regular_left, trivial_left, ComoduleAlgebra};
use bigal::families::*;
use bigal::galois::*;
use bigal::group::{AbelianGroup, Subgroup};
use bigal::hopf::{h_chi, h_double, taft, taft_inverse, verify_hopf, Character, HopfAlgebra};
use bigal::linalg::Vector;
use bigal::morphism::iso_cop;
use bigal::simple::is_h_simple;
use bigal::twist::{characters_from_cocycle, is_compatible, verify_twist_presentation, Cocycle2, Exponents};
use bigal::{Field, Scalar};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: bigal::Error) -> String {
    err.to_string()
}

fn host(n: u32) -> (Field, Arc<HopfAlgebra>, AbelianGroup) {
    let f = Field::new(n).unwrap();
    let h = Arc::new(h_double(&f, n).unwrap());
    (f, h, AbelianGroup::square(n))
}

fn all_exponents(n: i64) -> Vec<Exponents> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    out.push([[a, b], [c, d]]);
                }
            }
        }
    }
    out
}

fn c1_hopf_axioms() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let f = Field::new(n).map_err(e)?;
        let q = f.primitive_root(n).map_err(e)?;
        let g = AbelianGroup::square(n);
        // χ1 = (1, q), χ2 = (q, 1) satisfies χ1(1,g⁻¹)χ2(g,1) = 1
        let chi1 = Character::from_generators(g, &f.one(), &q).map_err(e)?;
        let chi2 = Character::from_generators(g, &q, &f.one()).map_err(e)?;
        let hs = [
            taft(&f, n).map_err(e)?,
            taft_inverse(&f, n).map_err(e)?,
            h_double(&f, n).map_err(e)?,
            h_chi(&f, n, &chi1, &chi2).map_err(e)?,
        ];
        for h in &hs {
            let r = verify_hopf(h);
            ensure(r.passed(), || format!("{r}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} Hopf algebras, n = 2..5"))
}

fn c2_iso_cop() -> Outcome {
    for n in 2..=5 {
        let f = Field::new(n).map_err(e)?;
        let (_, _, m) = iso_cop(&f, n).map_err(e)?;
        ensure(m.passed(), || format!("n={n}: {}", m.report))?;
    }
    Ok("T_q^-1 ≅ T_q^cop for n = 2..5".into())
}

fn c3_twist() -> Outcome {
    let mut count = 0;
    for n in 2..=3u32 {
        let (f, _, g) = host(n);
        let k = n as i64 - 1;
        for m in [[[0, 0], [0, 0]], [[1, 0], [0, 0]], [[0, 1], [k, 0]], [[1, 1], [0, k]]] {
            let psi = Cocycle2::bicharacter(&f, g.whole(), m).map_err(e)?;
            let t = verify_twist_presentation(&f, n, &psi).map_err(e)?;
            ensure(t.passed(), || format!("n={n} ψ={m:?}: {}", t.report))?;
            count += 1;
        }
    }
    Ok(format!("{count} cocycles with witnesses"))
}

fn c4_families() -> Outcome {
    let mut count = 0;
    for n in 2..=3u32 {
        let (f, h, g) = host(n);
        let q = f.primitive_root(n).map_err(e)?;
        let subs: Vec<Subgroup> = g.subgroups();
        let mut per_family = std::collections::BTreeMap::<&str, (usize, std::collections::BTreeSet<String>)>::new();
        let mut specs = Vec::new();
        for sub in &subs {
            let triv = Cocycle2::trivial(&f, sub.clone());
            let anti = sub.contains(g.elem(1, -1));
            for (a, b) in [(f.zero(), f.zero()), (f.one(), f.int(-2))] {
                specs.push(FamilySpec::new(n, Family::K01 { a: a.clone() }, triv.clone()));
                specs.push(FamilySpec::new(n, Family::K10 { b: b.clone() }, triv.clone()));
                let xi = if anti { q.clone() } else { f.zero() };
                specs.push(FamilySpec::new(n, Family::K11 { a, b, xi }, triv.clone()));
            }
            specs.push(FamilySpec::new(n, Family::Tga, triv.clone()));
            if sub.contains(g.elem(1, 1)) {
                let mut compatible = None;
                for m in all_exponents(n as i64) {
                    let psi = Cocycle2::bicharacter(&f, sub.clone(), m).map_err(e)?;
                    if is_compatible(&psi, sub).map_err(e)? {
                        compatible = Some(psi);
                        break;
                    }
                }
                let psi = compatible.ok_or_else(|| format!("n={n}: no compatible ψ on {sub}"))?;
                specs.push(FamilySpec::new(n, Family::L { xi: f.one(), mu: f.zero() }, psi.clone()));
                specs.push(FamilySpec::new(n, Family::L { xi: q.clone(), mu: f.int(3) }, psi));
            }
        }
        // TGA with a genuine cocycle
        let whole = g.whole();
        specs.push(FamilySpec::new(n, Family::Tga, Cocycle2::bicharacter(&f, whole, [[1, 0], [0, 0]]).map_err(e)?));
        for s in specs.into_iter().filter(|s| s.expected_dim() <= 27) {
            let r = verify_family_simple(&s, h.clone()).map_err(e)?;
            ensure(r.report.passed() && r.simplicity.simple && r.coinvariant_dim == 1, || format!("{s}: {}", r.report))?;
            ensure(r.simplicity.span_dim == r.dim * r.dim, || format!("{s}: span {}", r.simplicity.span_dim))?;
            let entry = per_family.entry(s.family.tag()).or_default();
            entry.0 += 1;
            entry.1.insert(s.sub().to_string());
            count += 1;
        }
        ensure(per_family.len() == 5, || format!("n={n}: only {:?}", per_family.keys()))?;
        for (tag, (k, subs)) in &per_family {
            ensure(*k >= 2 && subs.len() >= 2, || format!("n={n} {tag}: {k} samples over {} subgroups", subs.len()))?;
        }
    }
    Ok(format!("{count} members simple with trivial coinvariants"))
}

fn c5_coideals() -> Outcome {
    let mut count = 0;
    for n in 2..=3u32 {
        let (f, h, _) = host(n);
        let q = f.primitive_root(n).map_err(e)?;
        let data = enumerate_coideal_data(&f, n, &[f.one(), q, f.int(2)], None).map_err(e)?;
        for d in &data {
            let k = build_coideal(d, h.clone()).map_err(e)?;
            ensure(k.report.passed(), || format!("{}", k.report))?;
            ensure(k.algebra.dim() == d.expected_dim(), || format!("{d}: dim {}", k.algebra.dim()))?;
            if matches!(d.kind, CoidealKind::Xi(_)) {
                ensure(k.report.checks.iter().any(|c| c.name.starts_with("[w]^n")), || format!("{d}: no [w]^n check"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} data verified"))
}

fn c6_tw_coidl() -> Outcome {
    let (f, _, g) = host(2);
    let q = f.primitive_root(2).map_err(e)?;
    let (mut runs, mut absent) = (0, 0);
    for m in all_exponents(2) {
        let psi = Cocycle2::bicharacter(&f, g.whole(), m).map_err(e)?;
        let chars = characters_from_cocycle(&psi.on_group().map_err(e)?).map_err(e)?;
        let data = enumerate_coideal_data(&f, 2, &[f.one(), q.clone(), f.int(2)], Some(chars)).map_err(e)?;
        for sub in g.subgroups() {
            if sub.contains(g.elem(1, 1)) && !data.iter().any(|d| d.sub == sub && matches!(d.kind, CoidealKind::Xi(_))) {
                absent += 1;
            }
        }
        for d in data {
            let t = verify_tw_coidl(d.kind.clone(), d.sub.clone(), &psi).map_err(e)?;
            ensure(t.passed(), || format!("ψ={m:?} {} -> {}: {}", t.datum, t.target, t.report))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} twisted coideals matched; {absent} (F, ψ) pairs admit no ξ-type datum"))
}

fn grid(f: &Field, n: u32) -> Vec<BiGal> {
    let q = f.primitive_root(n).unwrap();
    let z = f.zeta();
    [
        (f.one(), f.zero()),
        (f.int(2), f.one()),
        (q.clone(), f.int(-3)),
        (&z + &f.int(2), f.int(2)),
        (f.int(-1), &z * &f.int(2)),
    ]
    .into_iter()
    .map(|(x, m)| BiGal::new(x, m).unwrap())
    .collect()
}

fn c7_group_law() -> Outcome {
    let mut count = 0;
    for n in 2..=3u32 {
        let f = Field::new(n).map_err(e)?;
        let s = Setting::new(&f, n).map_err(e)?;
        let g = grid(&f, n);
        let pairs: Vec<(&BiGal, &BiGal)> = if n == 2 {
            g.iter().flat_map(|a| g.iter().map(move |b| (a, b))).collect()
        } else {
            g.iter().zip(g.iter().rev()).chain([(&g[1], &g[1])]).collect()
        };
        for (a, b) in pairs {
            let law = verify_group_law(&s, a, b).map_err(e)?;
            ensure(law.passed(), || format!("n={n} {a}·{b}: {}", law.report))?;
            for name in ["image in equalizer", "γ.algebra map", "γ.left comodule map", "γ.bijective", "dim = n²"] {
                ensure(law.report.checks.iter().any(|c| c.name.starts_with(name) && c.passed), || format!("n={n}: missing {name}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs, all five sub-checks"))
}

fn c8_group_structure() -> Outcome {
    use proptest::prelude::*;
    use proptest::test_runner::{Config, TestRunner};
    let f = Field::new(6).map_err(e)?;
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    let scalar = |f: Field| {
        (prop::collection::vec(-5i64..=5, 2), 1i64..=3).prop_map(move |(c, d)| {
            let z = f.zeta();
            &(&f.int(c[0]) + &(&z * &f.int(c[1]))) * &f.int(d).inv().unwrap()
        })
    };
    let nonzero = scalar(f.clone()).prop_filter("nonzero", |s: &Scalar| !s.is_zero());
    let elem = (nonzero, scalar(f.clone())).prop_map(|(a, b)| KxK::new(a, b).unwrap());
    runner
        .run(&(elem.clone(), elem.clone(), elem), |(x, y, z)| {
            let one = KxK::one(x.a.field());
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&x.inv().unwrap()), one.clone());
            prop_assert_eq!(x.mul(&one), x);
            Ok(())
        })
        .map_err(|err| err.to_string())?;
    let mut checks = 0;
    for n in 2..=3u32 {
        let fl = Field::new(n).map_err(e)?;
        let r = phi_check(&fl, n, &default_grid(&fl)).map_err(e)?;
        ensure(r.passed(), || format!("{r}"))?;
        // parameter-level associativity of the □ law
        let g = grid(&fl, n);
        for a in &g {
            for b in &g {
                for c in &g {
                    let l = a.compose(b, n).map_err(e)?.compose(c, n).map_err(e)?;
                    let r = a.compose(&b.compose(c, n).map_err(e)?, n).map_err(e)?;
                    ensure(l == r, || format!("({a}·{b})·{c} ≠ {a}·({b}·{c})"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("64 random triples, φ on grids, {checks} associativity triples"))
}

fn c9_neutral_equivalence() -> Outcome {
    let mut count = 0;
    for n in 2..=3u32 {
        let f = Field::new(n).map_err(e)?;
        let s = Setting::new(&f, n).map_err(e)?;
        let q = f.primitive_root(n).map_err(e)?;
        let (r, search) = neutral_check(&s).map_err(e)?;
        ensure(r.passed() && search.found(), || format!("{r}"))?;
        for p in grid(&f, n) {
            for i in 0..n as i64 {
                let moved = BiGal::new(&q.pow(i).map_err(e)? * &p.xi, p.mu.clone()).map_err(e)?;
                let eq = bigal_equivalence(&s, &p, &moved).map_err(e)?;
                ensure(eq.equivalent && eq.witness.is_some() && eq.report.passed(), || format!("{p} vs {moved}: {}", eq.report))?;
                count += 1;
            }
            let other = BiGal::new(p.xi.clone(), &p.mu + &f.one()).map_err(e)?;
            let ne = bigal_equivalence(&s, &p, &other).map_err(e)?;
            ensure(!ne.equivalent && ne.report.passed(), || format!("{p} vs {other}: {}", ne.report))?;
            count += 1;
        }
    }
    Ok(format!("T_q ≅ ℓ(1,0) for n = 2,3; {count} equivalence decisions"))
}

fn bump(v: &Vector, k: usize, f: &Field) -> Vector {
    v.add(&Vector::single(k, f.one()))
}

fn c10_mutations() -> Outcome {
    let f = Field::new(2).map_err(e)?;
    let t = taft(&f, 2).map_err(e)?;
    ensure(verify_hopf(&t).passed(), || "T_2 itself fails".into())?;
    let d = t.dim();
    let mut mutants: Vec<(String, HopfAlgebra)> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let mut m = t.clone();
                let v = bump(t.algebra.basis_mul(a, b), c, &f);
                m.algebra.set_basis_mul(a, b, v);
                mutants.push((format!("m[{a},{b}]_{c}"), m));
            }
        }
    }
    for b in 0..d {
        for x in 0..d {
            for y in 0..d {
                let mut m = t.clone();
                m.set_comult(b, t.comult(b).add(&tensor_of(&t.algebra.basis_vector(x), &t.algebra.basis_vector(y))));
                mutants.push((format!("Δ[{b}]_{x}{y}"), m));
            }
        }
        let mut m = t.clone();
        m.set_counit(b, t.counit(b) + &f.one());
        mutants.push((format!("ε[{b}]"), m));
        for c in 0..d {
            let mut m = t.clone();
            m.set_antipode(b, bump(t.antipode(b), c, &f));
            mutants.push((format!("S[{b}]_{c}"), m));
        }
    }
    let total = mutants.len();
    let missed: Vec<&str> = mutants.iter().filter(|(_, m)| verify_hopf(m).passed()).map(|(n, _)| n.as_str()).collect();
    let caught = total - missed.len();
    ensure(caught * 100 >= 95 * total, || format!("only {caught}/{total} caught; missed {missed:?}"))?;

    // comodule algebras with a proper costable ideal
    let h = Arc::new(t.clone());
    let one = f.one();
    let nil = Algebra::from_fn(f.clone(), vec!["1".into(), "t".into()], Vector::single(0, one.clone()), |a, b| {
        if a + b < 2 {
            Vector::single(a + b, f.one())
        } else {
            Vector::zero()
        }
    })
    .map_err(e)?
    .with_words(vec![Generator { name: "t".into(), basis: 1 }], vec![vec![], vec![0]])
    .map_err(e)?;
    let kk = Algebra::from_fn(f.clone(), vec!["e1".into(), "e2".into()], Vector::single(0, one.clone()).add(&Vector::single(1, one.clone())), |a, b| {
        if a == b {
            Vector::single(a, f.one())
        } else {
            Vector::zero()
        }
    })
    .map_err(e)?;
    let counter: Vec<ComoduleAlgebra> = vec![
        trivial_left("k[t]/t²", nil, h.clone()).map_err(e)?,
        trivial_left("k×k", kk, h.clone()).map_err(e)?,
        trivial_left("T_2 with trivial coaction", t.algebra.clone(), h.clone()).map_err(e)?,
        product_with_field(&t, h.clone()).map_err(e)?,
    ];
    for a in &counter {
        let r = bigal::comodule::verify_coaction(a);
        ensure(r.passed(), || format!("{} is not a comodule algebra: {r}", a.name))?;
        let s = is_h_simple(a).map_err(e)?;
        ensure(!s.simple, || format!("{} reported simple", a.name))?;
    }
    let reg = is_h_simple(&regular_left(h)).map_err(e)?;
    ensure(reg.simple, || "regular T_2 not simple".into())?;
    Ok(format!("{caught}/{total} mutations caught; {}/{} costable counterexamples caught", counter.len(), counter.len()))
}

/// `T × k` with `Δ` on the first factor and the trivial coaction on the second.
fn product_with_field(t: &HopfAlgebra, h: Arc<HopfAlgebra>) -> bigal::Result<ComoduleAlgebra> {
    let f = t.field().clone();
    let d = t.dim();
    let mut labels: Vec<String> = t.algebra.labels().iter().map(|l| format!("({l},0)")).collect();
    labels.push("(0,1)".into());
    let unit = t.algebra.unit().add(&Vector::single(d, f.one()));
    let alg = Algebra::from_fn(f.clone(), labels, unit, |a, b| {
        if a < d && b < d {
            t.algebra.basis_mul(a, b).clone()
        } else if a == d && b == d {
            Vector::single(d, f.one())
        } else {
            Vector::zero()
        }
    })?;
    let one_h = h.algebra.unit().clone();
    let map = (0..=d)
        .map(|a| if a < d { t.comult(a).clone() } else { tensor_of(&one_h, &Vector::single(d, f.one())) })
        .collect();
    ComoduleAlgebra::left("T_2 × k", alg, h, map)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 Hopf axiom suite", c1_hopf_axioms),
        ("2 T_q^-1 ≅ T_q^cop", c2_iso_cop),
        ("3 twist presentation", c3_twist),
        ("4 families simple", c4_families),
        ("5 coideal soundness", c5_coideals),
        ("6 twisted coideals", c6_tw_coidl),
        ("7 group law", c7_group_law),
        ("8 group structure", c8_group_structure),
        ("9 neutrality and equivalence", c9_neutral_equivalence),
        ("10 mutation soundness", c10_mutations),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let out = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("PASS  [{name}] {msg} ({secs:.1}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  [{name}] {msg} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
