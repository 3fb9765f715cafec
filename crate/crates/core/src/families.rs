//! The five families of left `H`-comodule algebras, `H = T_q ⊗ T_{q⁻¹}`,
//! homogeneous coideal subalgebras given by data `(W¹, W², W³, F)`, and the
//! relations between them.

use crate::algebra::{saturate, tensor_of, Tensor};
use crate::comodule::{
    coinvariants, find_iso, g_twist, loewy_graded, regular_left, sub_comodule, transport_left, ComoduleAlgebra,
    IsoSearch, Subalgebra,
};
use crate::error::{invalid, Error, Result};
use crate::group::{AbelianGroup, Elem, Subgroup};
use crate::hopf::{h_chi, h_double, h_index, Character, HopfAlgebra};
use crate::linalg::{Subspace, Vector};
use crate::pbw::{Commutator, Letter, Pbw, PbwSpec};
use crate::report::{Check, Report};
use crate::scalar::{Field, Scalar};
use crate::simple::{is_h_simple, Simplicity};
use crate::twist::{
    characters_from_cocycle, diagonal_hopf_iso, is_compatible, lift_hopf_cocycle, twist_comodule, twist_hopf,
    Cocycle2,
};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `ℓ(ξ, μ, F, ψ)`
    L { xi: Scalar, mu: Scalar },
    K11 { a: Scalar, b: Scalar, xi: Scalar },
    /// generated by `z` and `k F`
    K01 { a: Scalar },
    /// generated by `u` and `k F`
    K10 { b: Scalar },
    /// twisted group algebra `k_ψ F`
    Tga,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::L { .. } => "L",
            Family::K11 { .. } => "K11",
            Family::K01 { .. } => "K01",
            Family::K10 { .. } => "K10",
            Family::Tga => "TGA",
        }
    }
}

/// A family member; the subgroup is the domain of the cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub n: u32,
    pub family: Family,
    pub psi: Cocycle2,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = match &self.family {
            Family::L { xi, mu } => format!("ξ={xi}, μ={mu}, "),
            Family::K11 { a, b, xi } => format!("a={a}, b={b}, ξ={xi}, "),
            Family::K01 { a } => format!("a={a}, "),
            Family::K10 { b } => format!("b={b}, "),
            Family::Tga => String::new(),
        };
        let psi = match self.psi.exponents {
            Some(m) if !self.psi.table().iter().all(Scalar::is_one) => format!("{m:?}"),
            Some(_) => "1".into(),
            None => "table".into(),
        };
        write!(f, "{}({params}F={}, ψ={psi})", self.family.tag(), self.psi.sub)
    }
}

impl FamilySpec {
    pub fn new(n: u32, family: Family, psi: Cocycle2) -> FamilySpec {
        FamilySpec { n, family, psi }
    }

    pub fn sub(&self) -> &Subgroup {
        &self.psi.sub
    }

    pub fn field(&self) -> &Field {
        self.psi.field()
    }

    pub fn expected_dim(&self) -> usize {
        let f = self.sub().len();
        let n = self.n as usize;
        match self.family {
            Family::L { .. } | Family::K01 { .. } | Family::K10 { .. } => n * f,
            Family::K11 { .. } => n * n * f,
            Family::Tga => f,
        }
    }

    /// The graded member: `μ = 0`, `a = b = ξ = 0` for the `K` families.
    pub fn graded(&self) -> FamilySpec {
        let z = self.field().zero();
        let family = match &self.family {
            Family::L { xi, .. } => Family::L { xi: xi.clone(), mu: z },
            Family::K11 { .. } => Family::K11 { a: z.clone(), b: z.clone(), xi: z },
            Family::K01 { .. } => Family::K01 { a: z },
            Family::K10 { .. } => Family::K10 { b: z },
            Family::Tga => Family::Tga,
        };
        FamilySpec { n: self.n, family, psi: self.psi.clone() }
    }

    /// Checks the constraints of the family; `compat` includes the
    /// compatibility of `ψ` with `F` for `L`.
    pub fn validate(&self, compat: bool) -> Result<()> {
        let grp = self.sub().group;
        if grp != AbelianGroup::square(self.n) {
            return Err(invalid("the subgroup must lie in Z_n x Z_n"));
        }
        if !self.psi.is_normalized() {
            return Err(invalid("ψ must be normalized: ψ(f,1) = ψ(1,f) = 1"));
        }
        match &self.family {
            Family::L { xi, .. } => {
                if !self.sub().contains(grp.elem(1, 1)) {
                    return Err(invalid("L needs (g,g) ∈ F"));
                }
                if xi.is_zero() {
                    return Err(invalid("L needs ξ ≠ 0"));
                }
                if compat && !is_compatible(&self.psi, self.sub())? {
                    return Err(invalid("L needs ψ compatible with F"));
                }
            }
            Family::K11 { xi, .. }
                if !xi.is_zero() && !self.sub().contains(grp.elem(1, -1)) => {
                    return Err(invalid("K11 needs ξ = 0 when (g,g⁻¹) ∉ F"));
                }
            _ => {}
        }
        Ok(())
    }
}

fn letter(name: &str, n: u32, power: &Scalar, q: &Scalar, sub: &Subgroup, axis: usize) -> Result<Letter> {
    Ok(Letter {
        name: name.into(),
        order: n,
        power: power.clone(),
        chi: sub.elems.iter().map(|e| q.pow(e.0[axis] as i64)).collect::<Result<_>>()?,
    })
}

/// Builds and verifies a family member over `h = H(n)`.
pub fn build_family(spec: &FamilySpec, h: Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
    spec.validate(true)?;
    build_family_unchecked(spec, h)?.verified()
}

/// Builds without the compatibility constraint and without verifying.
pub fn build_family_unchecked(spec: &FamilySpec, h: Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
    spec.validate(false)?;
    let n = spec.n;
    if h.dim() != (n as usize).pow(4) || h.group() != Some(AbelianGroup::square(n)) {
        return Err(invalid("families live over H = T_q ⊗ T_q^-1 of the same n"));
    }
    let field = spec.field().clone();
    let q = field.primitive_root(n)?;
    let sub = spec.sub().clone();
    let grp = sub.group;
    let (letters, commutators) = match &spec.family {
        Family::L { mu, .. } => (vec![letter("w", n, mu, &q, &sub, 0)?], PbwSpec::no_commutators(1)),
        Family::K11 { a, b, xi } => (
            vec![letter("z", n, a, &q, &sub, 0)?, letter("u", n, b, &q, &sub, 1)?],
            // u z = z u − ξ e_(g,g⁻¹)
            vec![vec![], vec![Some(Commutator { c: field.one(), d: -xi, h: grp.elem(1, -1) })]],
        ),
        Family::K01 { a } => (vec![letter("z", n, a, &q, &sub, 0)?], PbwSpec::no_commutators(1)),
        Family::K10 { b } => (vec![letter("u", n, b, &q, &sub, 1)?], PbwSpec::no_commutators(1)),
        Family::Tga => (vec![], PbwSpec::no_commutators(0)),
    };
    let nletters = letters.len();
    let pbw = Pbw::new(PbwSpec {
        field: field.clone(),
        subgroup: sub.clone(),
        cocycle: spec.psi.table().to_vec(),
        letters,
        commutators,
        order: None,
        group_label: Box::new(move |e| grp.label(e)),
    })?;
    let alg = pbw.build()?;
    let one = field.one();
    let ha = &h.algebra;
    let hb = |i: i64, j: i64, a: u32, b: u32| {
        let e = grp.elem(i, j);
        Vector::single(h_index(n, e.i(), e.j(), a, b), one.clone())
    };
    let ae = |f: Elem, exps: &[u32]| Vector::single(pbw.index_of(f, exps).unwrap(), one.clone());
    let z0 = vec![0u32; nletters];
    let mut images: Vec<Tensor> = sub.gens.iter().map(|&f| tensor_of(&hb(f.i() as i64, f.j() as i64, 0, 0), &ae(f, &z0))).collect();
    let unit = ae(Elem::ID, &z0);
    let x = hb(0, 0, 1, 0);
    let y = hb(0, 0, 0, 1);
    match &spec.family {
        Family::L { xi, .. } => {
            let gg = grp.elem(1, 1);
            let mut t = tensor_of(&x.scale(xi), &unit);
            t.add_scaled(&tensor_of(&ha.mul(&y, &hb(1, 1, 0, 0)), &ae(gg, &z0)), &one);
            t.add_scaled(&tensor_of(&hb(1, 0, 0, 0), &ae(Elem::ID, &[1])), &one);
            images.push(t);
        }
        Family::K11 { .. } => {
            let mut tz = tensor_of(&x, &unit);
            tz.add_scaled(&tensor_of(&hb(1, 0, 0, 0), &ae(Elem::ID, &[1, 0])), &one);
            let mut tu = tensor_of(&y, &unit);
            tu.add_scaled(&tensor_of(&hb(0, -1, 0, 0), &ae(Elem::ID, &[0, 1])), &one);
            images.push(tz);
            images.push(tu);
        }
        Family::K01 { .. } => {
            let mut tz = tensor_of(&x, &unit);
            tz.add_scaled(&tensor_of(&hb(1, 0, 0, 0), &ae(Elem::ID, &[1])), &one);
            images.push(tz);
        }
        Family::K10 { .. } => {
            let mut tu = tensor_of(&y, &unit);
            tu.add_scaled(&tensor_of(&hb(0, -1, 0, 0), &ae(Elem::ID, &[1])), &one);
            images.push(tu);
        }
        Family::Tga => {}
    }
    let a = ComoduleAlgebra::left_from_generators(spec.to_string(), alg, h, &images)?;
    if a.dim() != spec.expected_dim() {
        return Err(Error::Structure(format!("{spec} has dimension {}, expected {}", a.dim(), spec.expected_dim())));
    }
    Ok(a)
}

/// Outcome of [`verify_family_simple`].
#[derive(Clone, Debug, Serialize)]
pub struct FamilySimple {
    pub spec: String,
    pub dim: usize,
    pub simplicity: Simplicity,
    pub coinvariant_dim: usize,
    pub report: Report,
}

pub fn verify_family_simple(spec: &FamilySpec, h: Arc<HopfAlgebra>) -> Result<FamilySimple> {
    let a = build_family(spec, h)?;
    let mut report = Report::new(spec.to_string());
    report.ok("comodule algebra axioms", a.dim());
    let s = is_h_simple(&a)?;
    report.record(
        "absolutely H-simple",
        s.simple,
        format!("{} span {}/{}", s.method, s.span_dim, s.target),
    );
    let c = coinvariants(&a)?;
    report.record("trivial coinvariants", c.trivial, format!("dim {}", c.dim()));
    Ok(FamilySimple { spec: spec.to_string(), dim: a.dim(), simplicity: s, coinvariant_dim: c.dim(), report })
}

/// `gr A ≅` the graded member of the same family.
pub fn verify_lifting(spec: &FamilySpec, h: Arc<HopfAlgebra>) -> Result<(Report, IsoSearch)> {
    let a = build_family(spec, h.clone())?;
    let g = loewy_graded(&a)?;
    let target = build_family(&spec.graded(), h)?;
    let mut r = Report::new(format!("gr {spec}"));
    r.record("filtration exhausts", g.filtration.last() == Some(&a.dim()), format!("{:?}", g.filtration));
    let s = find_iso(&target, &g.gr)?;
    match &s.witness {
        Some((_, m)) => r.extend("iso", m.report.clone()),
        None => r.fail("iso", s.note.clone()),
    }
    Ok((r, s))
}

/// `A^f ≅ ℓ(q^{j−i} ξ, μ, F, ψ)` for `f = (g^i, g^j)`.
pub fn family_g_twist_relation(spec: &FamilySpec, f: Elem, h: Arc<HopfAlgebra>) -> Result<(Report, FamilySpec, IsoSearch)> {
    let Family::L { xi, mu } = &spec.family else {
        return Err(invalid("the g-twist relation is stated for the L family"));
    };
    let q = spec.field().primitive_root(spec.n)?;
    let k = f.j() as i64 - f.i() as i64;
    let target = FamilySpec { family: Family::L { xi: &q.pow(k)? * xi, mu: mu.clone() }, ..spec.clone() };
    let a = build_family(spec, h.clone())?;
    let tw = g_twist(&a, f)?;
    let b = build_family(&target, h)?;
    let s = find_iso(&b, &tw)?;
    let mut r = Report::new(format!("{}^{} ≅ {}", spec, spec.sub().group.label(f), target));
    match &s.witness {
        Some((_, m)) => r.extend("iso", m.report.clone()),
        None => r.fail("iso", s.note.clone()),
    }
    Ok((r, target, s))
}

/// Type of a coideal subalgebra datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoidealKind {
    /// `W³ = ⟨ξx + y⟩`
    Xi(Scalar),
    /// `W¹ = ⟨δ1 x⟩`, `W² = ⟨δ2 y⟩`
    Delta(bool, bool),
}

#[derive(Clone, Debug)]
pub struct CoidealDatum {
    pub n: u32,
    pub kind: CoidealKind,
    pub sub: Subgroup,
    /// `(χ1, χ2)` when the datum lives in `H_(χ1,χ2)`
    pub chars: Option<(Character, Character)>,
}

impl fmt::Display for CoidealDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match &self.kind {
            CoidealKind::Xi(xi) => format!("ξ={xi}"),
            CoidealKind::Delta(a, b) => format!("δ=({},{})", *a as u8, *b as u8),
        };
        let host = if self.chars.is_some() { "_χ" } else { "" };
        write!(f, "C{host}({k}, F={})", self.sub)
    }
}

impl CoidealDatum {
    fn chi(&self, f: Elem) -> (Scalar, Scalar) {
        match &self.chars {
            Some((a, b)) => (a.at(f).clone(), b.at(f).clone()),
            None => {
                let one = self.field_one();
                (one.clone(), one)
            }
        }
    }

    fn field_one(&self) -> Scalar {
        match &self.kind {
            CoidealKind::Xi(x) => x.field().one(),
            CoidealKind::Delta(..) => self.chars.as_ref().map(|c| c.0.at(Elem::ID).clone()).expect("field known"),
        }
    }

    /// `(g,g) ∈ F` and `q^i χ1(f) = q^j χ2(f)` for type `ξ`.
    pub fn validate(&self, q: &Scalar) -> Result<()> {
        if let CoidealKind::Xi(xi) = &self.kind {
            if xi.is_zero() {
                return Err(invalid("type ξ needs ξ ≠ 0"));
            }
            if !self.sub.contains(self.sub.group.elem(1, 1)) {
                return Err(invalid("type ξ needs (g,g) ∈ F"));
            }
            for &f in &self.sub.elems {
                let (c1, c2) = self.chi(f);
                if &q.pow(f.i() as i64)? * &c1 != &q.pow(f.j() as i64)? * &c2 {
                    return Err(invalid(format!("F does not stabilize ⟨ξx + y⟩ at {}", self.sub.group.label(f))));
                }
            }
        }
        Ok(())
    }

    pub fn expected_dim(&self) -> usize {
        let (f, n) = (self.sub.len(), self.n as usize);
        match self.kind {
            CoidealKind::Xi(_) => n * f,
            CoidealKind::Delta(a, b) => f * n.pow(a as u32 + b as u32),
        }
    }
}

/// All data over `H` (or `H_(χ1,χ2)`) for the given `ξ` samples.
pub fn enumerate_coideal_data(
    field: &Field,
    n: u32,
    xi_samples: &[Scalar],
    chars: Option<(Character, Character)>,
) -> Result<Vec<CoidealDatum>> {
    let q = field.primitive_root(n)?;
    let grp = AbelianGroup::square(n);
    let mut out = Vec::new();
    for sub in grp.subgroups() {
        for (a, b) in [(false, false), (true, false), (false, true), (true, true)] {
            out.push(CoidealDatum { n, kind: CoidealKind::Delta(a, b), sub: sub.clone(), chars: chars.clone() });
        }
        for xi in xi_samples {
            let d = CoidealDatum { n, kind: CoidealKind::Xi(xi.clone()), sub: sub.clone(), chars: chars.clone() };
            if d.validate(&q).is_ok() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// `H` or `H_(χ1,χ2)` for a datum.
pub fn coideal_host(field: &Field, d: &CoidealDatum) -> Result<HopfAlgebra> {
    match &d.chars {
        None => h_double(field, d.n),
        Some((a, b)) => h_chi(field, d.n, a, b),
    }
}

/// A coideal subalgebra with its verification.
#[derive(Clone, Debug)]
pub struct Coideal {
    pub datum: String,
    pub algebra: ComoduleAlgebra,
    pub sub: Subalgebra,
    pub report: Report,
}

/// Subalgebra generated by `kF`, `W¹ ⊕ W²`, `[w]` and `[w]~`, checked to be a
/// homogeneous left coideal subalgebra.
pub fn build_coideal(datum: &CoidealDatum, host: Arc<HopfAlgebra>) -> Result<Coideal> {
    let n = datum.n;
    let field = host.field().clone();
    let q = field.primitive_root(n)?;
    datum.validate(&q)?;
    if host.dim() != (n as usize).pow(4) {
        return Err(invalid("host must be H or H_χ of the same n"));
    }
    let grp = datum.sub.group;
    let ha = &host.algebra;
    let one = field.one();
    let hb = |e: Elem, a: u32, b: u32| Vector::single(h_index(n, e.i(), e.j(), a, b), one.clone());
    let x = hb(Elem::ID, 1, 0);
    let y = hb(Elem::ID, 0, 1);
    let mut gens: Vec<Vector> = datum.sub.gens.iter().map(|&f| hb(f, 0, 0)).collect();
    let mut bracket = None;
    match &datum.kind {
        CoidealKind::Delta(d1, d2) => {
            if *d1 {
                gens.push(x.clone());
            }
            if *d2 {
                gens.push(y.clone());
            }
        }
        CoidealKind::Xi(xi) => {
            let w = x.scale(xi).add(&ha.mul(&y, &hb(grp.elem(1, 1), 0, 0)));
            let wt = y.add(&ha.mul(&x.scale(xi), &hb(grp.elem(-1, -1), 0, 0)));
            gens.push(w.clone());
            gens.push(wt.clone());
            bracket = Some((xi.clone(), w, wt));
        }
    }
    let space = saturate(ha, &[ha.unit().clone()], &gens, false);
    let sub = Subalgebra::new(ha, space)?;
    let mut report = Report::new(datum.to_string());
    report.record(
        "dimension",
        sub.basis.len() == datum.expected_dim(),
        format!("{} (expected {})", sub.basis.len(), datum.expected_dim()),
    );
    report.push(check_coideal(&host, &sub.space, &sub.basis));
    report.push(check_homogeneous(&host, &sub.space, &sub.basis));
    if let Some((xi, w, wt)) = &bracket {
        let zero = ha.pow(w, n).is_zero() && ha.pow(wt, n).is_zero();
        report.record("[w]^n = [w]~^n = 0", zero, "");
        let v1 = x.scale(xi);
        let v2 = ha.mul(&y, &hb(grp.elem(1, 1), 0, 0));
        let mut expect = tensor_of(&v1, ha.unit());
        expect.add_scaled(&tensor_of(&v2, &hb(grp.elem(1, 1), 0, 0)), &one);
        expect.add_scaled(&tensor_of(&hb(grp.elem(1, 0), 0, 0), w), &one);
        report.record("Δ[w] = v1⊗1 + v2(g,g)⊗(g,g) + (g,1)⊗[w]", host.apply_comult(w) == expect, "");
    }
    let reg = regular_left(host.clone());
    let algebra = sub_comodule(&reg, &sub, datum.to_string())?;
    Ok(Coideal { datum: datum.to_string(), algebra, sub, report })
}

/// `Δ(K) ⊆ H ⊗ K`.
fn check_coideal(h: &HopfAlgebra, space: &Subspace, basis: &[Vector]) -> Check {
    Check::over("left coideal", basis.iter(), |v| {
        let t = h.apply_comult(v);
        let mut by_h: std::collections::BTreeMap<usize, Vector> = Default::default();
        for ((a, b), c) in t.iter() {
            by_h.entry(a).or_default().add_term(b, c);
        }
        if by_h.values().all(|w| space.contains(w)) {
            Ok(())
        } else {
            Err(format!("Δ leaves the subspace on {}", crate::algebra::show_vector(&h.algebra, v)))
        }
    })
}

/// Every homogeneous component of every element lies in the subspace.
fn check_homogeneous(h: &HopfAlgebra, space: &Subspace, basis: &[Vector]) -> Check {
    let Some(grading) = h.grading() else {
        return Check::fail("homogeneous", "host is not graded");
    };
    Check::over("homogeneous", basis.iter(), |v| {
        let mut parts: std::collections::BTreeMap<u32, Vector> = Default::default();
        for (k, c) in v.iter() {
            parts.entry(grading[k]).or_default().add_term(k, c);
        }
        if parts.values().all(|p| space.contains(p)) {
            Ok(())
        } else {
            Err("not spanned by homogeneous elements".into())
        }
    })
}

/// The family member paired with a datum, with cocycle `psi` on `F`.
pub fn family_for_datum(d: &CoidealDatum, psi: Cocycle2) -> FamilySpec {
    let z = psi.field().zero();
    let family = match &d.kind {
        CoidealKind::Xi(xi) => Family::L { xi: xi.clone(), mu: z },
        CoidealKind::Delta(true, true) => Family::K11 { a: z.clone(), b: z.clone(), xi: z },
        CoidealKind::Delta(true, false) => Family::K01 { a: z },
        CoidealKind::Delta(false, true) => Family::K10 { b: z },
        CoidealKind::Delta(false, false) => Family::Tga,
    };
    FamilySpec { n: d.n, family, psi }
}

/// Outcome of [`verify_tw_coidl`].
#[derive(Clone, Debug)]
pub struct TwCoidl {
    pub datum: String,
    pub target: String,
    pub report: Report,
    pub search: Option<IsoSearch>,
}

impl TwCoidl {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// `C_(χ1,χ2)(W¹,W²,W³,F)_{σ_ψ⁻¹}` against `K_ij(0,0,0,F,ψ⁻¹)` or
/// `ℓ(ξ,0,F,ψ⁻¹)`, after transporting along `H_χ^[σ_ψ⁻¹] ≅ H`.
pub fn verify_tw_coidl(kind: CoidealKind, sub: Subgroup, psi: &Cocycle2) -> Result<TwCoidl> {
    let field = psi.field().clone();
    let n = sub.group.n;
    let psi_g = psi.on_group()?;
    let (c1, c2) = characters_from_cocycle(&psi_g)?;
    let datum = CoidealDatum { n, kind, sub: sub.clone(), chars: Some((c1, c2)) };
    let mut report = Report::new(datum.to_string());
    let hc = Arc::new(coideal_host(&field, &datum)?);
    let c = build_coideal(&datum, hc.clone())?;
    report.extend("coideal", c.report.clone());
    let sigma = lift_hopf_cocycle(hc, &psi_g.inverse())?;
    let ht = Arc::new(twist_hopf(&sigma)?);
    let tw = twist_comodule(&c.algebra, &sigma, ht.clone())?;
    let h = Arc::new(h_double(&field, n)?);
    let theta = diagonal_hopf_iso(&ht, &h)?;
    let target = family_for_datum(&datum, psi_g.inverse().restrict(&sub)?);
    let Some(m) = theta.morphism.filter(|_| theta.scales.is_some()) else {
        report.fail("H_χ^[σ] ≅ H", "no diagonal Hopf isomorphism");
        return Ok(TwCoidl { datum: datum.to_string(), target: target.to_string(), report, search: None });
    };
    report.ok("H_χ^[σ] ≅ H", m.images.len());
    let moved = transport_left(&tw, &m.images, h.clone())?;
    let fam = build_family(&target, h)?;
    let s = find_iso(&fam, &moved)?;
    match &s.witness {
        Some((_, w)) => report.extend("iso", w.report.clone()),
        None => report.fail("iso", s.note.clone()),
    }
    Ok(TwCoidl { datum: datum.to_string(), target: target.to_string(), report, search: Some(s) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(n: u32) -> (Field, Arc<HopfAlgebra>, AbelianGroup) {
        let f = Field::new(n).unwrap();
        let h = Arc::new(h_double(&f, n).unwrap());
        (f, h, AbelianGroup::square(n))
    }

    #[test]
    fn tga_trivial_is_base_field() {
        let (f, h, g) = setup(2);
        let spec = FamilySpec::new(2, Family::Tga, Cocycle2::trivial(&f, g.generate(&[])));
        let a = build_family(&spec, h).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn l_family_small() {
        let (f, h, g) = setup(2);
        let spec = FamilySpec::new(2, Family::L { xi: f.one(), mu: f.zero() }, Cocycle2::trivial(&f, g.diagonal()));
        let a = build_family(&spec, h).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(coinvariants(&a).unwrap().trivial);
    }

    #[test]
    fn k11_constraint() {
        let (f, h, g) = setup(3);
        let spec = FamilySpec::new(
            3,
            Family::K11 { a: f.zero(), b: f.zero(), xi: f.one() },
            Cocycle2::trivial(&f, g.diagonal()),
        );
        assert!(matches!(build_family(&spec, h), Err(Error::Invalid(_))));
    }

    #[test]
    fn coideal_counts_n2() {
        let (f, _, _) = setup(2);
        let q = f.primitive_root(2).unwrap();
        let data = enumerate_coideal_data(&f, 2, &[f.one(), q, f.int(2)], None).unwrap();
        // 5 subgroups × 4 δ-types, plus type ξ on the diagonal only
        assert_eq!(data.len(), 5 * 4 + 3);
    }
}
