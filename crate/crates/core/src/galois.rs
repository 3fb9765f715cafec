//! BiGalois objects over `T_q`, cotensor products and the group law on
//! the classes `ℓ(ξ, μ) = ℓ(ξ, μ, diag G, 1)`.
//!
//! A left `H = T_q ⊗ T_{q⁻¹}`-comodule algebra becomes a `T_q`-bicomodule
//! algebra: the left coaction is `(π₁ ⊗ id)λ`, the right one is the leg flip
//! of `(φ π₂ ⊗ id)λ` with `φ: T_{q⁻¹} → T_q^cop`, `g ↦ g`, `y ↦ x g⁻¹`.

use crate::algebra::{Algebra, Tensor};
use crate::comodule::{
    check_images, coinvariants, find_iso, right_coinvariants, sub_comodule, verify_coaction, Coaction,
    ComoduleAlgebra, IsoSearch, Subalgebra,
};
use crate::error::{invalid, Error, Result};
use crate::families::{build_family, family_g_twist_relation, Family, FamilySpec};
use crate::group::AbelianGroup;
use crate::hopf::{h_double, taft, HopfAlgebra};
use crate::linalg::{self, Subspace, Vector};
use crate::morphism::{extend_algebra_map, iso_cop};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::twist::Cocycle2;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// `T_q`, `H` and `φ` for one `n`.
#[derive(Clone, Debug)]
pub struct Setting {
    pub n: u32,
    pub field: Field,
    pub q: Scalar,
    pub t: Arc<HopfAlgebra>,
    pub h: Arc<HopfAlgebra>,
    /// `φ` on the basis of `T_{q⁻¹}`
    phi: Vec<Vector>,
    /// counits of the two tensorands of `H`
    eps1: Vec<Scalar>,
    eps2: Vec<Scalar>,
}

impl Setting {
    pub fn new(field: &Field, n: u32) -> Result<Setting> {
        let (ti, _, m) = iso_cop(field, n)?;
        if !m.passed() {
            return Err(Error::Structure(format!("φ: T_q^-1 → T_q^cop fails: {}", m.report)));
        }
        let t = taft(field, n)?;
        let h = h_double(field, n)?;
        Ok(Setting {
            n,
            field: field.clone(),
            q: field.primitive_root(n)?,
            eps1: (0..t.dim()).map(|k| t.counit(k).clone()).collect(),
            eps2: (0..ti.dim()).map(|k| ti.counit(k).clone()).collect(),
            t: Arc::new(t),
            h: Arc::new(h),
            phi: m.images,
        })
    }

    fn dn(&self) -> usize {
        (self.n * self.n) as usize
    }

    /// `π₁(b) = (id ⊗ ε)(b)` for a basis element of `H`.
    fn pi1(&self, b: usize) -> Option<(usize, &Scalar)> {
        let c = &self.eps2[b % self.dn()];
        (!c.is_zero()).then_some((b / self.dn(), c))
    }

    fn pi2(&self, b: usize) -> Option<(usize, &Scalar)> {
        let c = &self.eps1[b / self.dn()];
        (!c.is_zero()).then_some((b % self.dn(), c))
    }

    fn h_index(&self, t1: usize, t2: usize) -> usize {
        t1 * self.dn() + t2
    }

    /// `T_q` with `Δ` on both sides.
    pub fn regular_bicomodule(&self) -> ComoduleAlgebra {
        let map: Vec<Tensor> = (0..self.t.dim()).map(|b| self.t.comult(b).clone()).collect();
        ComoduleAlgebra {
            name: format!("{} (regular)", self.t.name),
            algebra: self.t.algebra.clone(),
            left: Some(Coaction { hopf: self.t.clone(), map: map.clone() }),
            right: Some(Coaction { hopf: self.t.clone(), map }),
        }
    }

    fn check_host(&self, a: &ComoduleAlgebra) -> Result<()> {
        let h = a.hopf()?;
        if h.dim() != self.h.dim() || h.algebra != self.h.algebra {
            return Err(invalid(format!("{} is not a comodule algebra over {}", a.name, self.h.name)));
        }
        Ok(())
    }
}

/// Left and right `T_q`-coactions induced by a left `H`-coaction, verified.
pub fn to_bicomodule(s: &Setting, a: &ComoduleAlgebra) -> Result<ComoduleAlgebra> {
    s.check_host(a)?;
    let l = a.left_coaction()?;
    let mut left = Vec::with_capacity(a.dim());
    let mut right = Vec::with_capacity(a.dim());
    for t in &l.map {
        let mut lt = Tensor::zero();
        let mut rt = Tensor::zero();
        for ((h, y), c) in t.iter() {
            if let Some((k, e)) = s.pi1(h) {
                lt.add_term((k, y), &(c * e));
            }
            if let Some((k, e)) = s.pi2(h) {
                let ce = c * e;
                for (u, f) in s.phi[k].iter() {
                    rt.add_term((y, u), &(&ce * f));
                }
            }
        }
        left.push(lt);
        right.push(rt);
    }
    ComoduleAlgebra {
        name: format!("{} (bicomodule)", a.name),
        algebra: a.algebra.clone(),
        left: Some(Coaction { hopf: s.t.clone(), map: left }),
        right: Some(Coaction { hopf: s.t.clone(), map: right }),
    }
    .verified()
}

/// Canonical maps `a⊗b ↦ a₋₁ ⊗ a₀b` and `a⊗b ↦ ab₀ ⊗ b₁` as images of
/// the basis `a_i ⊗ a_j` (index `i·d + j`), in `T⊗A` (index `h·d + a`) and
/// `A⊗T` (index `a·dim T + h`).
pub fn galois_maps(a: &ComoduleAlgebra) -> Result<(Vec<Vector>, Vec<Vector>)> {
    let (l, r) = (a.left_coaction()?, a.right_coaction()?);
    let d = a.dim();
    let dt = r.hopf.dim();
    let alg = &a.algebra;
    let mut can_l = Vec::with_capacity(d * d);
    let mut can_r = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut v = Vector::zero();
            for ((h, y), c) in l.map[i].iter() {
                for (z, e) in alg.basis_mul(y, j).iter() {
                    v.add_term(h * d + z, &(c * e));
                }
            }
            can_l.push(v);
            let mut w = Vector::zero();
            for ((y, h), c) in r.map[j].iter() {
                for (z, e) in alg.basis_mul(i, y).iter() {
                    w.add_term(z * dt + h, &(c * e));
                }
            }
            can_r.push(w);
        }
    }
    Ok((can_l, can_r))
}

#[derive(Clone, Debug, Serialize)]
pub struct GaloisObject {
    pub name: String,
    pub dim: usize,
    pub report: Report,
}

impl GaloisObject {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Both Galois maps bijective, commuting coactions, trivial coinvariants.
pub fn is_bigalois(a: &ComoduleAlgebra) -> Result<GaloisObject> {
    let d = a.dim();
    let dt = a.right_coaction()?.hopf.dim();
    let mut report = Report::new(&a.name);
    report.extend("", verify_coaction(a));
    report.record("dim A = dim T_q", d == dt, format!("{d} vs {dt}"));
    if d == dt {
        let (cl, cr) = galois_maps(a)?;
        let (rl, rr) = (linalg::rank_fast(&cl, d * d), linalg::rank_fast(&cr, d * d));
        report.record("left Galois map bijective", rl == d * d, format!("rank {rl}/{}", d * d));
        report.record("right Galois map bijective", rr == d * d, format!("rank {rr}/{}", d * d));
    }
    let (cl, cr) = (coinvariants(a)?, right_coinvariants(a)?);
    report.record("left coinvariants trivial", cl.trivial, format!("dim {}", cl.dim()));
    report.record("right coinvariants trivial", cr.trivial, format!("dim {}", cr.dim()));
    Ok(GaloisObject { name: a.name.clone(), dim: d, report })
}

/// `A □ B`: kernel of `ρ_A ⊗ id − id ⊗ λ_B` in `A ⊗ B` (index `i·dim B + j`).
pub fn equalizer(a: &ComoduleAlgebra, b: &ComoduleAlgebra) -> Result<Subspace> {
    let (ra, lb) = (a.right_coaction()?, b.left_coaction()?);
    if ra.hopf.dim() != lb.hopf.dim() || ra.hopf.algebra != lb.hopf.algebra {
        return Err(invalid("cotensor over different Hopf algebras"));
    }
    let (da, db, dt) = (a.dim(), b.dim(), ra.hopf.dim());
    let idx = |x: usize, t: usize, y: usize| (x * dt + t) * db + y;
    let mut images = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            let mut v = Vector::zero();
            for ((y, t), c) in ra.map[i].iter() {
                v.add_term(idx(y, t, j), c);
            }
            for ((t, z), c) in lb.map[j].iter() {
                v.add_term(idx(i, t, z), &-c);
            }
            images.push(v);
        }
    }
    Ok(linalg::kernel(&images, da * dt * db, &a.algebra.field().one()))
}

/// Cotensor product of two left `H`-comodule algebras with the coaction
/// `l⊗k ↦ π₁(l₋₁) ⊗ π₂(k₋₁) ⊗ l₀ ⊗ k₀`.
#[derive(Clone, Debug)]
pub struct Cotensor {
    /// `A ⊗ B` with the induced coaction, not verified
    pub ambient: ComoduleAlgebra,
    pub sub: Subalgebra,
    pub algebra: ComoduleAlgebra,
}

pub fn cotensor(s: &Setting, a: &ComoduleAlgebra, b: &ComoduleAlgebra) -> Result<Cotensor> {
    let space = equalizer(&to_bicomodule(s, a)?, &to_bicomodule(s, b)?)?;
    let alg = Algebra::tensor(&a.algebra, &b.algebra)?;
    let (la, lb) = (a.left_coaction()?, b.left_coaction()?);
    let db = b.dim();
    let mut map = Vec::with_capacity(a.dim() * db);
    for i in 0..a.dim() {
        for j in 0..db {
            let mut t = Tensor::zero();
            for ((h, y), c) in la.map[i].iter() {
                let Some((t1, e1)) = s.pi1(h) else { continue };
                let ce = c * e1;
                for ((h2, z), c2) in lb.map[j].iter() {
                    if let Some((t2, e2)) = s.pi2(h2) {
                        t.add_term((s.h_index(t1, t2), y * db + z), &(&ce * &(c2 * e2)));
                    }
                }
            }
            map.push(t);
        }
    }
    let name = format!("{} □ {}", a.name, b.name);
    let ambient = ComoduleAlgebra::left(name.clone(), alg, s.h.clone(), map)?;
    let sub = Subalgebra::new(&ambient.algebra, space)
        .map_err(|e| Error::Structure(format!("equalizer of {name}: {e}")))?;
    let algebra = sub_comodule(&ambient, &sub, name)?.verified()?;
    Ok(Cotensor { ambient, sub, algebra })
}

/// Parameters `(ξ, μ)` of `ℓ(ξ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiGal {
    #[serde(serialize_with = "ser_scalar")]
    pub xi: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub mu: Scalar,
}

fn ser_scalar<S: serde::Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl fmt::Display for BiGal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ℓ({}, {})", self.xi, self.mu)
    }
}

impl BiGal {
    pub fn new(xi: Scalar, mu: Scalar) -> Result<BiGal> {
        if xi.is_zero() {
            return Err(invalid("ξ must be nonzero"));
        }
        Ok(BiGal { xi, mu })
    }

    pub fn neutral(field: &Field) -> BiGal {
        BiGal { xi: field.one(), mu: field.zero() }
    }

    /// `(ξ′, μ′) · (ξ, μ) = (ξ′ξ, ξⁿμ′ + μ)` for `self = (ξ′, μ′)`.
    pub fn compose(&self, rhs: &BiGal, n: u32) -> Result<BiGal> {
        Ok(BiGal {
            xi: &self.xi * &rhs.xi,
            mu: &(&rhs.xi.pow(n as i64)? * &self.mu) + &rhs.mu,
        })
    }

    pub fn spec(&self, n: u32) -> Result<FamilySpec> {
        let f = self.xi.field();
        let g = AbelianGroup::square(n);
        Ok(FamilySpec::new(
            n,
            Family::L { xi: self.xi.clone(), mu: self.mu.clone() },
            Cocycle2::trivial(f, g.diagonal()),
        ))
    }
}

pub fn ell(s: &Setting, p: &BiGal) -> Result<ComoduleAlgebra> {
    build_family(&p.spec(s.n)?, s.h.clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupLaw {
    pub lhs: BiGal,
    pub rhs: BiGal,
    pub product: BiGal,
    pub cotensor_dim: usize,
    /// `γ` on the basis of the product, in cotensor coordinates
    #[serde(serialize_with = "ser_vectors")]
    pub gamma: Vec<Vector>,
    pub report: Report,
}

fn ser_vectors<S: serde::Serializer>(v: &[Vector], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&crate::json::vector_json(x))?;
    }
    seq.end()
}

impl GroupLaw {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// `ℓ(ξ′,μ′) □ ℓ(ξ,μ) ≅ ℓ(ξ′ξ, ξⁿμ′+μ)` through
/// `γ(w) = ξ w⊗1 + e_(g,g)⊗w`, `γ(e_f) = e_f⊗e_f`.
pub fn verify_group_law(s: &Setting, lhs: &BiGal, rhs: &BiGal) -> Result<GroupLaw> {
    let n = s.n;
    let product = lhs.compose(rhs, n)?;
    let (a, b, p) = (ell(s, lhs)?, ell(s, rhs)?, ell(s, &product)?);
    let c = cotensor(s, &a, &b)?;
    let mut report = Report::new(format!("{lhs} □ {rhs} ≅ {product}"));
    let nn = (n * n) as usize;
    report.record("dim = n²", c.algebra.dim() == nn, format!("{} vs {nn}", c.algebra.dim()));

    let one = s.field.one();
    let db = b.dim();
    let unit = a.algebra.unit().first().map(|(k, _)| k).ok_or_else(|| Error::Structure("zero unit".into()))?;
    let pres = p.algebra.presentation().ok_or_else(|| Error::Structure("ℓ without presentation".into()))?;
    let mut gens = Vec::new();
    let (mut gw, mut ge) = (None, None);
    for g in &pres.generators {
        if a.algebra.label(g.basis) != p.algebra.label(g.basis) {
            return Err(Error::Structure("ℓ layouts differ".into()));
        }
        let idx = |i: usize, j: usize| i * db + j;
        if g.name == "w" {
            let e = pres.generators.iter().find(|h| h.name != "w").map(|h| h.basis);
            // e_(g,g) is the only group generator of diag G
            let e = e.ok_or_else(|| Error::Structure("no group generator".into()))?;
            let mut v = Vector::single(idx(g.basis, unit), rhs.xi.clone());
            v.add_term(idx(e, g.basis), &one);
            gw = Some(gens.len());
            gens.push(v);
        } else {
            ge = Some(gens.len());
            gens.push(Vector::single(idx(g.basis, g.basis), one.clone()));
        }
    }
    let amb = &c.ambient.algebra;
    let images = extend_algebra_map(&p.algebra, amb, &gens)?;
    let inside = images.iter().all(|v| c.sub.space.contains(v));
    report.record("image in equalizer", inside, "");
    if let (Some(w), Some(e)) = (gw, ge) {
        let (gw, ge) = (&gens[w], &gens[e]);
        let wn = amb.pow(gw, n);
        report.record(
            "γ(w)^n = (ξⁿμ′+μ)·1",
            wn == amb.unit().scale(&product.mu),
            crate::algebra::show_vector(amb, &wn),
        );
        let l = amb.mul(ge, gw);
        let r = amb.mul(gw, ge).scale(&s.q);
        report.record("γ(e)γ(w) = q γ(w)γ(e)", l == r, "");
    }
    let mut gamma = Vec::with_capacity(images.len());
    if inside {
        for v in &images {
            gamma.push(c.sub.space.coords(v).expect("checked membership"));
        }
        let m = check_images(&p, &c.algebra, gamma.clone());
        report.extend("γ", m.report);
    }
    Ok(GroupLaw { lhs: lhs.clone(), rhs: rhs.clone(), product, cotensor_dim: c.algebra.dim(), gamma, report })
}

/// `T_q ≅ ℓ(1, 0)` as bicomodule algebras.
pub fn neutral_check(s: &Setting) -> Result<(Report, IsoSearch)> {
    let l = to_bicomodule(s, &ell(s, &BiGal::neutral(&s.field))?)?;
    let t = s.regular_bicomodule();
    let mut r = Report::new(format!("T_q ≅ ℓ(1,0), n={}", s.n));
    r.extend("", crate::comodule::verify_coaction(&t));
    let search = find_iso(&l, &t)?;
    match &search.witness {
        Some((_, m)) => {
            r.extend("iso", m.report.clone());
            let inv = linalg::invert(&m.images);
            let id = inv.as_ref().is_some_and(|inv| {
                (0..m.images.len()).all(|k| linalg::apply(inv, &m.images[k]) == l.basis_vector(k))
            });
            r.record("inverse composes to identity", id, "");
        }
        None => r.fail("iso", search.note.clone()),
    }
    Ok((r, search))
}

/// Decision of `ℓ(ξ,μ) ∼ ℓ(ξ′,μ′)`.
#[derive(Clone, Debug, Serialize)]
pub struct Equivalence {
    pub a: BiGal,
    pub b: BiGal,
    pub equivalent: bool,
    pub reason: String,
    /// witnessing grouplike `f` with `A^f ≅ B`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub report: Report,
}

/// `k` with `r = q^k`, if any.
pub fn log_q(q: &Scalar, n: u32, r: &Scalar) -> Option<u32> {
    let mut p = q.field().one();
    for k in 0..n {
        if &p == r {
            return Some(k);
        }
        p = &p * q;
    }
    None
}

/// `μ = μ′` and `ξ′/ξ ∈ ⟨q⟩`; a witness `f = (1, g^k)` is verified when
/// equivalent, and no twist `A^f` is found isomorphic to `B` otherwise.
pub fn bigal_equivalence(s: &Setting, a: &BiGal, b: &BiGal) -> Result<Equivalence> {
    let grp = AbelianGroup::square(s.n);
    let mut report = Report::new(format!("{a} ∼ {b}"));
    let ratio = &b.xi * &a.xi.inv()?;
    let k = log_q(&s.q, s.n, &ratio);
    let (equivalent, reason) = match (a.mu == b.mu, k) {
        (false, _) => (false, format!("μ differs: {} vs {}", a.mu, b.mu)),
        (true, None) => (false, format!("ξ′/ξ = {ratio} is not a power of q")),
        (true, Some(k)) => (true, format!("μ equal, ξ′/ξ = q^{k}")),
    };
    let mut witness = None;
    if let Some(k) = k.filter(|_| equivalent) {
        let f = grp.elem(0, k as i64);
        let (r, target, _) = family_g_twist_relation(&a.spec(s.n)?, f, s.h.clone())?;
        report.record("twist target", target == b.spec(s.n)?, target.to_string());
        report.extend("A^f ≅ B", r);
        witness = Some(grp.label(f));
    } else {
        let base = ell(s, a)?;
        let target = ell(s, b)?;
        let mut found = None;
        for f in grp.elements() {
            let tw = crate::comodule::g_twist(&base, f)?;
            if find_iso(&target, &tw)?.found() {
                found = Some(grp.label(f));
                break;
            }
        }
        report.record("no twist A^f ≅ B in the search", found.is_none(), found.unwrap_or_default());
    }
    Ok(Equivalence { a: a.clone(), b: b.clone(), equivalent, reason, witness, report })
}

/// An element of `k^× ⋉ k⁺`, `(a,b)·(c,d) = (ac, cb+d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KxK {
    pub a: Scalar,
    pub b: Scalar,
}

impl KxK {
    pub fn new(a: Scalar, b: Scalar) -> Result<KxK> {
        if a.is_zero() {
            return Err(invalid("first component must be nonzero"));
        }
        Ok(KxK { a, b })
    }

    pub fn one(f: &Field) -> KxK {
        KxK { a: f.one(), b: f.zero() }
    }

    pub fn mul(&self, o: &KxK) -> KxK {
        KxK { a: &self.a * &o.a, b: &(&o.a * &self.b) + &o.b }
    }

    pub fn inv(&self) -> Result<KxK> {
        let ai = self.a.inv()?;
        Ok(KxK { b: -&(&ai * &self.b), a: ai })
    }
}

/// Coset representative in `k^×/G_n ⋉ k⁺`, `(ā,b)·(c̄,d) = (āc̄, cⁿb+d)`.
#[derive(Clone, Debug)]
pub struct KxKn {
    pub n: u32,
    pub a: Scalar,
    pub b: Scalar,
}

impl PartialEq for KxKn {
    fn eq(&self, o: &KxKn) -> bool {
        self.n == o.n
            && self.b == o.b
            && o.a.inv().and_then(|i| (&self.a * &i).pow(self.n as i64)).is_ok_and(|x| x.is_one())
    }
}

impl KxKn {
    pub fn new(n: u32, a: Scalar, b: Scalar) -> Result<KxKn> {
        if a.is_zero() {
            return Err(invalid("first component must be nonzero"));
        }
        Ok(KxKn { n, a, b })
    }

    pub fn mul(&self, o: &KxKn) -> Result<KxKn> {
        Ok(KxKn { n: self.n, a: &self.a * &o.a, b: &(&o.a.pow(self.n as i64)? * &self.b) + &o.b })
    }

    pub fn inv(&self) -> Result<KxKn> {
        let ai = self.a.inv()?;
        let b = -&(&ai.pow(self.n as i64)? * &self.b);
        Ok(KxKn { n: self.n, a: ai, b })
    }

    /// `φ(ξ̄, μ) = (ξⁿ, μ)`.
    pub fn phi(&self) -> Result<KxK> {
        KxK::new(self.a.pow(self.n as i64)?, self.b.clone())
    }

    pub fn from_bigal(n: u32, p: &BiGal) -> KxKn {
        KxKn { n, a: p.xi.clone(), b: p.mu.clone() }
    }
}

/// Group axioms on `k^× ⋉ k⁺` and the quotient, `φ` multiplicative and
/// injective on the grid, and the `□` law matching the quotient product.
pub fn phi_check(field: &Field, n: u32, grid: &[(Scalar, Scalar)]) -> Result<Report> {
    let mut r = Report::new(format!("k^× ⋉ k⁺, n={n}"));
    let full: Vec<KxK> = grid.iter().map(|(a, b)| KxK::new(a.clone(), b.clone())).collect::<Result<_>>()?;
    let quo: Vec<KxKn> = grid.iter().map(|(a, b)| KxKn::new(n, a.clone(), b.clone())).collect::<Result<_>>()?;
    let e = KxK::one(field);
    let mut count = 0;
    let mut bad = None;
    for x in &full {
        count += 1;
        if x.mul(&x.inv()?) != e || x.inv()?.mul(x) != e || x.mul(&e) != *x || e.mul(x) != *x {
            bad.get_or_insert(format!("unit/inverse at ({}, {})", x.a, x.b));
        }
        for y in &full {
            for z in &full {
                count += 1;
                if x.mul(y).mul(z) != x.mul(&y.mul(z)) {
                    bad.get_or_insert(format!("associativity at ({}, {})", x.a, x.b));
                }
            }
        }
    }
    r.record("k^× ⋉ k⁺ group axioms", bad.is_none(), bad.unwrap_or_default());
    let (mut hom, mut inj, mut assoc, mut law) = (None, None, None, None);
    let en = KxKn::new(n, field.one(), field.zero())?;
    for x in &quo {
        if x.mul(&x.inv()?)? != en {
            assoc.get_or_insert(format!("inverse at ({}, {})", x.a, x.b));
        }
        for y in &quo {
            if x.mul(y)?.phi()? != x.phi()?.mul(&y.phi()?) {
                hom.get_or_insert(format!("({}, {})·({}, {})", x.a, x.b, y.a, y.b));
            }
            if (x.phi()? == y.phi()?) != (x == y) {
                inj.get_or_insert(format!("({}, {}) vs ({}, {})", x.a, x.b, y.a, y.b));
            }
            let p = BiGal::new(x.a.clone(), x.b.clone())?.compose(&BiGal::new(y.a.clone(), y.b.clone())?, n)?;
            if KxKn::from_bigal(n, &p) != x.mul(y)? {
                law.get_or_insert(format!("({}, {})·({}, {})", x.a, x.b, y.a, y.b));
            }
            for z in &quo {
                if x.mul(y)?.mul(z)? != x.mul(&y.mul(z)?)? {
                    assoc.get_or_insert(format!("associativity at ({}, {})", x.a, x.b));
                }
            }
        }
    }
    r.record("quotient group axioms", assoc.is_none(), assoc.unwrap_or_default());
    r.record("φ multiplicative", hom.is_none(), hom.unwrap_or_default());
    r.record("φ injective on the grid", inj.is_none(), inj.unwrap_or_default());
    r.record("□ law is the quotient product", law.is_none(), law.unwrap_or_default());
    if let Some(c) = r.checks.first_mut() {
        c.evaluated = count;
    }
    Ok(r)
}

/// Sample of `(ξ, μ)` values: small integers and powers of `ζ`.
pub fn default_grid(field: &Field) -> Vec<(Scalar, Scalar)> {
    let z = field.zeta();
    vec![
        (field.one(), field.zero()),
        (field.int(2), field.one()),
        (field.int(3), field.int(5)),
        (z.clone(), field.int(-1)),
        (&z + &field.int(2), field.int(2)),
        (field.int(-1), &z * &field.int(2)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kxk_inverse() {
        let f = Field::new(2).unwrap();
        let x = KxK::new(f.int(2), f.int(3)).unwrap();
        assert_eq!(x.mul(&x.inv().unwrap()), KxK::one(&f));
    }

    #[test]
    fn phi_example_n2() {
        let f = Field::new(2).unwrap();
        let x = KxKn::new(2, f.int(2), f.one()).unwrap();
        let y = KxKn::new(2, f.int(3), f.int(5)).unwrap();
        let lhs = x.mul(&y).unwrap().phi().unwrap();
        assert_eq!(lhs, KxK::new(f.int(36), f.int(14)).unwrap());
        assert_eq!(x.phi().unwrap().mul(&y.phi().unwrap()), lhs);
    }

    #[test]
    fn coset_equality() {
        let f = Field::new(2).unwrap();
        assert_eq!(KxKn::new(2, f.int(3), f.one()).unwrap(), KxKn::new(2, f.int(-3), f.one()).unwrap());
        assert_ne!(KxKn::new(2, f.int(3), f.one()).unwrap(), KxKn::new(2, f.int(2), f.one()).unwrap());
    }
}
