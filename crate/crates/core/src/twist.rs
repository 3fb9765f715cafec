//! Group 2-cocycles, their lifts to Hopf 2-cocycles, and cocycle twists of
//! Hopf algebras and comodule algebras.

use crate::algebra::{Algebra, Tensor};
use crate::comodule::{ComoduleAlgebra, verify_coaction};
use crate::error::{invalid, Error, Result};
use crate::group::{AbelianGroup, Elem, Subgroup};
use crate::hopf::{h_chi, h_double, verify_hopf, Character, HopfAlgebra};
use crate::lin::Acc;
use crate::linalg::{self, Vector};
use crate::morphism::{hopf_morphism_check, Morphism};
use crate::report::{Check, Report};
use crate::scalar::{Field, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;

/// Exponent matrix `M` of the bicharacter `ψ(a, b) = q^{a M bᵀ}`.
pub type Exponents = [[i64; 2]; 2];

/// A 2-cocycle `ψ: F × F → k^×` on a subgroup of `Z_n^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    pub sub: Subgroup,
    /// `ψ(f, f')` at `index(f) * |F| + index(f')`
    table: Vec<Scalar>,
    /// bicharacter this table was restricted from, if any
    pub exponents: Option<Exponents>,
}

impl Cocycle2 {
    /// Checked: all values invertible, cocycle identity on all triples.
    pub fn from_table(sub: Subgroup, table: Vec<Scalar>) -> Result<Cocycle2> {
        let m = sub.len();
        if table.len() != m * m {
            return Err(invalid(format!("cocycle table needs {} entries", m * m)));
        }
        if table.iter().any(Scalar::is_zero) {
            return Err(invalid("cocycle values must be nonzero"));
        }
        let c = Cocycle2 { sub, table, exponents: None };
        let chk = c.check_identity();
        if !chk.passed {
            return Err(Error::Structure(format!("not a 2-cocycle: {}", chk.detail)));
        }
        Ok(c)
    }

    pub fn trivial(field: &Field, sub: Subgroup) -> Cocycle2 {
        let m = sub.len();
        Cocycle2 { sub, table: vec![field.one(); m * m], exponents: Some([[0; 2]; 2]) }
    }

    /// `ψ((i,j),(k,l)) = q^{(i,j) M (k,l)ᵀ}` with `q` the primitive `n`-th root, restricted to `sub`.
    pub fn bicharacter(field: &Field, sub: Subgroup, m: Exponents) -> Result<Cocycle2> {
        let n = sub.group.n;
        let q = field.primitive_root(n)?;
        let qp: Vec<Scalar> = (0..n).map(|k| q.pow(k as i64)).collect::<Result<_>>()?;
        let mut table = Vec::with_capacity(sub.len() * sub.len());
        for a in &sub.elems {
            for b in &sub.elems {
                let (i, j, k, l) = (a.i() as i64, a.j() as i64, b.i() as i64, b.j() as i64);
                let e = i * (m[0][0] * k + m[0][1] * l) + j * (m[1][0] * k + m[1][1] * l);
                table.push(qp[e.rem_euclid(n as i64) as usize].clone());
            }
        }
        let mut c = Cocycle2::from_table(sub, table)?;
        c.exponents = Some(m);
        Ok(c)
    }

    /// Coboundary `∂c(f,f') = c(f) c(f') / c(ff')` of a function on the subgroup.
    pub fn coboundary(sub: Subgroup, c: &[Scalar]) -> Result<Cocycle2> {
        if c.len() != sub.len() {
            return Err(invalid("one value per subgroup element required"));
        }
        let grp = sub.group;
        let mut table = Vec::new();
        for a in &sub.elems {
            for b in &sub.elems {
                let ab = sub.index_of(grp.mul(*a, *b)).unwrap();
                let (ia, ib) = (sub.index_of(*a).unwrap(), sub.index_of(*b).unwrap());
                table.push(&(&c[ia] * &c[ib]) * &c[ab].inv()?);
            }
        }
        Cocycle2::from_table(sub, table)
    }

    pub fn field(&self) -> &Field {
        self.table[0].field()
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    /// `ψ(a, b)`; `None` if an argument lies outside the subgroup.
    pub fn get(&self, a: Elem, b: Elem) -> Option<&Scalar> {
        let (i, j) = (self.sub.index_of(a)?, self.sub.index_of(b)?);
        Some(&self.table[i * self.sub.len() + j])
    }

    pub fn at(&self, a: Elem, b: Elem) -> &Scalar {
        self.get(a, b).expect("argument in the subgroup")
    }

    pub fn check_identity(&self) -> Check {
        let s = &self.sub;
        let grp = s.group;
        let els = &s.elems;
        let triples = els.iter().flat_map(|a| els.iter().flat_map(move |b| els.iter().map(move |c| (*a, *b, *c))));
        Check::over("cocycle identity", triples, |(a, b, c)| {
            let lhs = self.at(a, b) * self.at(grp.mul(a, b), c);
            let rhs = self.at(b, c) * self.at(a, grp.mul(b, c));
            if lhs != rhs {
                return Err(format!("fails at ({}, {}, {})", grp.label(a), grp.label(b), grp.label(c)));
            }
            Ok(())
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.sub.elems.iter().all(|&f| self.at(f, Elem::ID).is_one() && self.at(Elem::ID, f).is_one())
    }

    /// Divides by `ψ(1,1)`, which makes `ψ(f,1) = ψ(1,f) = 1`.
    pub fn normalized(&self) -> Cocycle2 {
        let c = self.at(Elem::ID, Elem::ID).inv().expect("nonzero");
        Cocycle2 {
            sub: self.sub.clone(),
            table: self.table.iter().map(|x| x * &c).collect(),
            exponents: self.exponents,
        }
    }

    pub fn inverse(&self) -> Cocycle2 {
        Cocycle2 {
            sub: self.sub.clone(),
            table: self.table.iter().map(|x| x.inv().expect("nonzero")).collect(),
            exponents: self.exponents.map(|m| m.map(|r| r.map(|e| -e))),
        }
    }

    pub fn product(&self, o: &Cocycle2) -> Result<Cocycle2> {
        if self.sub != o.sub {
            return Err(invalid("cocycles on different subgroups"));
        }
        let exponents = match (self.exponents, o.exponents) {
            (Some(a), Some(b)) => Some([[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]),
            _ => None,
        };
        Ok(Cocycle2 {
            sub: self.sub.clone(),
            table: self.table.iter().zip(&o.table).map(|(x, y)| x * y).collect(),
            exponents,
        })
    }

    pub fn restrict(&self, sub: &Subgroup) -> Result<Cocycle2> {
        if sub.group != self.sub.group || sub.elems.iter().any(|e| !self.sub.contains(*e)) {
            return Err(invalid("restriction to a subgroup not contained in the domain"));
        }
        let mut table = Vec::new();
        for a in &sub.elems {
            for b in &sub.elems {
                table.push(self.at(*a, *b).clone());
            }
        }
        Ok(Cocycle2 { sub: sub.clone(), table, exponents: self.exponents })
    }

    /// The cocycle on the whole group: itself, or the recorded bicharacter.
    pub fn on_group(&self) -> Result<Cocycle2> {
        let whole = self.sub.group.whole();
        if self.sub.len() == whole.len() {
            return Ok(self.clone());
        }
        match self.exponents {
            Some(m) => Cocycle2::bicharacter(self.field(), whole, m),
            None => Err(Error::Unsupported("no extension of the cocycle to the whole group is recorded".into())),
        }
    }

    pub fn to_json(&self) -> CocycleJson {
        CocycleJson {
            n: self.sub.group.n,
            subgroup: self.sub.gens.iter().map(|e| [e.i(), e.j()]).collect(),
            exponents: self.exponents,
            table: if self.exponents.is_some() { None } else { Some(self.table.iter().map(|c| c.to_string()).collect()) },
        }
    }
}

/// Serialized cocycle: subgroup generators plus exponents or an explicit table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CocycleJson {
    pub n: u32,
    pub subgroup: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Exponents>,
    /// `ψ(f,f')` in subgroup element order, row-major
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<String>>,
}

impl CocycleJson {
    pub fn build(&self, field: &Field) -> Result<Cocycle2> {
        let grp = AbelianGroup::square(self.n);
        let gens: Vec<Elem> = self.subgroup.iter().map(|e| Elem(*e)).collect();
        let sub = Subgroup::from_generators(grp, &gens)?;
        match (&self.exponents, &self.table) {
            (Some(m), None) => Cocycle2::bicharacter(field, sub, *m),
            (None, Some(t)) => Cocycle2::from_table(sub, t.iter().map(|s| field.parse(s)).collect::<Result<_>>()?),
            (None, None) => Ok(Cocycle2::trivial(field, sub)),
            (Some(_), Some(_)) => Err(invalid("give either exponents or a table, not both")),
        }
    }
}

/// `χ1(f) = ψ(f,(g,1))/ψ((g,1),f)`, `χ2(f) = ψ(f,(1,g⁻¹))/ψ((1,g⁻¹),f)`.
pub fn characters_from_cocycle(psi: &Cocycle2) -> Result<(Character, Character)> {
    let psi = psi.on_group()?;
    let grp = psi.sub.group;
    if grp.rank != 2 {
        return Err(invalid("characters need a cocycle on Z_n x Z_n"));
    }
    let (g1, h2) = (grp.elem(1, 0), grp.elem(0, -1));
    let mut t1 = HashMap::new();
    let mut t2 = HashMap::new();
    for f in grp.elements() {
        t1.insert(f, psi.at(f, g1) * &psi.at(g1, f).inv()?);
        t2.insert(f, psi.at(f, h2) * &psi.at(h2, f).inv()?);
    }
    let chi1 = Character::from_table(grp, t1)
        .map_err(|_| Error::Structure("χ1 derived from the cocycle is not multiplicative".into()))?;
    let chi2 = Character::from_table(grp, t2)
        .map_err(|_| Error::Structure("χ2 derived from the cocycle is not multiplicative".into()))?;
    Ok((chi1, chi2))
}

/// `χ1(1,g⁻¹) χ2(g,1) = 1`, needed for `H_(χ1,χ2)` to exist.
pub fn characters_admissible(chi1: &Character, chi2: &Character) -> bool {
    let grp = chi1.group;
    (chi1.at(grp.elem(0, -1)) * chi2.at(grp.elem(1, 0))).is_one()
}

/// `q^i ψ((g,1),f)/ψ(f,(g,1)) = q^j ψ((1,g⁻¹),f)/ψ(f,(1,g⁻¹))` for all `f = (g^i,g^j) ∈ F`.
pub fn is_compatible(psi: &Cocycle2, f: &Subgroup) -> Result<bool> {
    let psi = psi.on_group()?;
    let grp = psi.sub.group;
    let q = psi.field().primitive_root(grp.n)?;
    let (g1, h2) = (grp.elem(1, 0), grp.elem(0, -1));
    for &e in &f.elems {
        let lhs = &(&q.pow(e.i() as i64)? * psi.at(g1, e)) * &psi.at(e, g1).inv()?;
        let rhs = &(&q.pow(e.j() as i64)? * psi.at(h2, e)) * &psi.at(e, h2).inv()?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A bilinear form `σ(a, b)` on basis elements.
pub type Form = Tensor;

pub fn eval_form(s: &Form, x: &Vector, y: &Vector, zero: &Scalar) -> Scalar {
    let mut acc = zero.clone();
    for ((a, b), c) in s.iter() {
        if let (Some(u), Some(v)) = (x.get(a), y.get(b)) {
            acc.add_mul(&(u * v), c);
        }
    }
    acc
}

/// Row index `a ↦ [(b, σ(a,b))]` of a form.
fn by_left(s: &Form) -> HashMap<usize, Vec<(usize, Scalar)>> {
    let mut m: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
    for ((a, b), c) in s.iter() {
        m.entry(a).or_default().push((b, c.clone()));
    }
    m
}

fn form_on(rows: &HashMap<usize, Vec<(usize, Scalar)>>, v: &Vector, z: usize, zero: &Scalar) -> Scalar {
    let mut acc = zero.clone();
    for (a, c) in v.iter() {
        if let Some(r) = rows.get(&a) {
            for (b, s) in r {
                if *b == z {
                    acc.add_mul(c, s);
                }
            }
        }
    }
    acc
}

fn form_on_right(rows: &HashMap<usize, Vec<(usize, Scalar)>>, x: usize, v: &Vector, zero: &Scalar) -> Scalar {
    let mut acc = zero.clone();
    if let Some(r) = rows.get(&x) {
        for (b, s) in r {
            if let Some(c) = v.get(*b) {
                acc.add_mul(c, s);
            }
        }
    }
    acc
}

/// Convolution `(σ * τ)(x, y) = σ(x₁, y₁) τ(x₂, y₂)`.
pub fn convolution(h: &HopfAlgebra, s: &Form, t: &Form) -> Form {
    let d = h.dim();
    let sr = by_left(s);
    let mut acc = Acc::new();
    for x in 0..d {
        for y in 0..d {
            for ((x1, x2), c) in h.comult(x).iter() {
                let Some(row) = sr.get(&x1) else { continue };
                for ((y1, y2), e) in h.comult(y).iter() {
                    for (b, sv) in row {
                        if *b != y1 {
                            continue;
                        }
                        if let Some(tv) = t.get((x2, y2)) {
                            acc.add_mul((x, y), &(c * e), &(sv * tv));
                        }
                    }
                }
            }
        }
    }
    acc.finish()
}

/// `ε ⊗ ε` as a form.
pub fn counit_form(h: &HopfAlgebra) -> Form {
    let mut acc = Acc::new();
    for x in 0..h.dim() {
        if h.counit(x).is_zero() {
            continue;
        }
        for y in 0..h.dim() {
            acc.add_mul((x, y), h.counit(x), h.counit(y));
        }
    }
    acc.finish()
}

/// Solves `σ * τ = ε ⊗ ε` linearly over all `dim²` unknowns, then checks
/// `τ * σ = ε ⊗ ε` as well.
pub fn convolution_inverse(h: &HopfAlgebra, s: &Form) -> Result<Form> {
    let d = h.dim();
    let sr = by_left(s);
    let mut rows = Vec::with_capacity(d * d);
    let mut rhs = Vec::with_capacity(d * d);
    for x in 0..d {
        for y in 0..d {
            let mut acc = Acc::new();
            for ((x1, x2), c) in h.comult(x).iter() {
                let Some(row) = sr.get(&x1) else { continue };
                for ((y1, y2), e) in h.comult(y).iter() {
                    for (b, sv) in row {
                        if *b == y1 {
                            acc.add_mul(x2 * d + y2, &(c * e), sv);
                        }
                    }
                }
            }
            rows.push(acc.finish());
            rhs.push(h.counit(x) * h.counit(y));
        }
    }
    let sol = linalg::solve(&rows, &rhs, d * d).ok_or_else(|| Error::NotInvertible("form is not convolution invertible".into()))?;
    let t: Form = sol.iter().map(|(k, c)| ((k / d, k % d), c.clone())).collect();
    let e = counit_form(h);
    if convolution(h, s, &t) != e || convolution(h, &t, s) != e {
        return Err(Error::NotInvertible("form is not convolution invertible".into()));
    }
    Ok(t)
}

/// A Hopf 2-cocycle with its convolution inverse.
#[derive(Clone, Debug)]
pub struct HopfCocycle {
    pub hopf: Arc<HopfAlgebra>,
    pub sigma: Form,
    pub inverse: Form,
    pub report: Report,
}

/// Cocycle identity `σ(x₁,y₁)σ(x₂y₂,z) = σ(y₁,z₁)σ(x,y₂z₂)` on all basis
/// triples and normalization `σ(x,1) = ε(x) = σ(1,x)`.
pub fn check_hopf_cocycle(h: &HopfAlgebra, s: &Form) -> Report {
    let d = h.dim();
    let a = &h.algebra;
    let sr = by_left(s);
    let zero = h.field().zero();
    let mut r = Report::new(format!("2-cocycle on {}", h.name));
    let pair_sum = |x: usize, y: usize| -> Vector {
        let mut out = Vector::zero();
        for ((x1, x2), c) in h.comult(x).iter() {
            let Some(row) = sr.get(&x1) else { continue };
            for ((y1, y2), e) in h.comult(y).iter() {
                for (b, sv) in row {
                    if *b == y1 {
                        out.add_scaled(a.basis_mul(x2, y2), &(&(c * e) * sv));
                    }
                }
            }
        }
        out
    };
    let m: Vec<Vector> = (0..d * d).map(|k| pair_sum(k / d, k % d)).collect();
    let triples = (0..d).flat_map(|x| (0..d).flat_map(move |y| (0..d).map(move |z| (x, y, z))));
    r.push(Check::over("cocycle identity", triples, |(x, y, z)| {
        let lhs = form_on(&sr, &m[x * d + y], z, &zero);
        let rhs = form_on_right(&sr, x, &m[y * d + z], &zero);
        if lhs != rhs {
            return Err(format!("fails at ({}, {}, {})", a.label(x), a.label(y), a.label(z)));
        }
        Ok(())
    }));
    let one = a.unit();
    r.push(Check::over("normalization", 0..d, |x| {
        let e = a.basis_vector(x);
        if &eval_form(s, &e, one, &zero) != h.counit(x) || &eval_form(s, one, &e, &zero) != h.counit(x) {
            return Err(format!("fails at {}", a.label(x)));
        }
        Ok(())
    }));
    r
}

/// `σ_ψ(x, y) = ψ(x, y)` on grouplikes and zero off degree 0.
pub fn lift_hopf_cocycle(h: Arc<HopfAlgebra>, psi: &Cocycle2) -> Result<HopfCocycle> {
    let grp = h.group().ok_or_else(|| Error::Unsupported("Hopf algebra has no designated group".into()))?;
    let grading = h.grading().ok_or_else(|| Error::Unsupported("Hopf algebra is not graded".into()))?;
    if psi.sub.group != grp {
        return Err(invalid("cocycle lives on a different group"));
    }
    let psi = psi.on_group()?;
    let deg0 = grading.iter().filter(|&&g| g == 0).count();
    if deg0 != grp.order() || h.grouplike_basis().len() != grp.order() {
        return Err(Error::Unsupported("degree-0 part is not the group algebra".into()));
    }
    let mut sigma = Acc::new();
    for (e, a) in h.grouplike_basis() {
        for (f, b) in h.grouplike_basis() {
            sigma.add((*a, *b), psi.at(*e, *f));
        }
    }
    let sigma = sigma.finish();
    let report = check_hopf_cocycle(&h, &sigma);
    if !report.passed() {
        let msg = report.failures().next().map(|c| format!("{}: {}", c.name, c.detail)).unwrap_or_default();
        return Err(Error::Structure(format!("lifted form is not a Hopf 2-cocycle: {msg}")));
    }
    let inverse = convolution_inverse(&h, &sigma)?;
    Ok(HopfCocycle { hopf: h, sigma, inverse, report })
}

/// Keeps the presentation words of `old` when they still evaluate to
/// multiples of basis elements in `new`.
fn reword(old: &Algebra, new: Algebra) -> Algebra {
    let Some(p) = old.presentation() else { return new };
    let letters = p.words.iter().map(|w| w.letters.clone()).collect();
    let fallback = new.clone();
    new.with_words(p.generators.clone(), letters).unwrap_or(fallback)
}

/// `x ·σ y = σ(x₁,y₁) σ⁻¹(x₃,y₃) x₂ y₂`.
pub fn twisted_algebra(c: &HopfCocycle) -> Result<Algebra> {
    let h = &c.hopf;
    let a = &h.algebra;
    let d = h.dim();
    let c2: Vec<_> = (0..d)
        .map(|x| {
            h.comult2(x)
                .iter()
                .filter(|((x1, _, x3), _)| c.sigma.keys().any(|(p, _)| p == *x1) && c.inverse.keys().any(|(p, _)| p == *x3))
                .map(|(k, v)| (k, v.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let table: Vec<Vector> = (0..d * d)
        .map(|k| {
            let (x, y) = (k / d, k % d);
            let mut out = Vector::zero();
            for ((x1, x2, x3), u) in &c2[x] {
                for ((y1, y2, y3), v) in &c2[y] {
                    let (Some(s), Some(t)) = (c.sigma.get((*x1, *y1)), c.inverse.get((*x3, *y3))) else {
                        continue;
                    };
                    out.add_scaled(a.basis_mul(*x2, *y2), &(&(u * v) * &(s * t)));
                }
            }
            out
        })
        .collect();
    let new = Algebra::from_table(h.field().clone(), a.labels().to_vec(), table, a.unit().clone())?;
    Ok(reword(a, new))
}

/// Solves `Σ S(b₁) b₂ = ε(b) 1` for `S` as a linear system in all
/// coefficients of `S`.
pub fn solve_antipode(alg: &Algebra, comult: &[Tensor], counit: &[Scalar]) -> Result<Vec<Vector>> {
    let d = alg.dim();
    let mut rows: HashMap<(usize, usize), Acc<usize>> = HashMap::new();
    for b in 0..d {
        for ((b1, b2), c) in comult[b].iter() {
            for k in 0..d {
                for (m, v) in alg.basis_mul(k, b2).iter() {
                    rows.entry((b, m)).or_default().add_mul(b1 * d + k, c, v);
                }
            }
        }
    }
    let mut keys: Vec<(usize, usize)> = rows.keys().copied().collect();
    keys.sort();
    let mut eqs = Vec::with_capacity(keys.len());
    let mut rhs = Vec::with_capacity(keys.len());
    for k in &keys {
        eqs.push(rows.remove(k).unwrap().finish());
        rhs.push(match alg.unit().get(k.1) {
            Some(u) => &counit[k.0] * u,
            None => alg.field().zero(),
        });
    }
    // targets where no unknown contributes still need ε(b)1 = 0
    for b in 0..d {
        for (m, u) in alg.unit().iter() {
            if !keys.contains(&(b, m)) && !(&counit[b] * u).is_zero() {
                return Err(Error::NotInvertible("antipode equation has no solution".into()));
            }
        }
    }
    let sol = linalg::solve(&eqs, &rhs, d * d).ok_or_else(|| Error::NotInvertible("antipode equation has no solution".into()))?;
    let mut s = vec![Vector::zero(); d];
    for (k, c) in sol.iter() {
        s[k / d].add_term(k % d, c);
    }
    Ok(s)
}

/// `H^[σ]`: twisted product, same coalgebra, antipode recomputed.
pub fn twist_hopf(c: &HopfCocycle) -> Result<HopfAlgebra> {
    let h = &c.hopf;
    let alg = twisted_algebra(c)?;
    let d = h.dim();
    let comult: Vec<Tensor> = (0..d).map(|b| h.comult(b).clone()).collect();
    let counit: Vec<Scalar> = (0..d).map(|b| h.counit(b).clone()).collect();
    let antipode = solve_antipode(&alg, &comult, &counit)?;
    let t = HopfAlgebra::from_parts(
        format!("{}^[σ]", h.name),
        alg,
        comult,
        counit,
        antipode,
        h.grading().map(|g| g.to_vec()),
        h.grouplike_basis().to_vec(),
        h.group(),
    )?;
    match h.exps() {
        Some(e) => t.with_exps_checked(e.to_vec()),
        None => Ok(t),
    }
}

/// `A_σ`: `a ·σ b = σ(a₋₁, b₋₁) a₀ b₀`, a left comodule algebra over `twisted`.
pub fn twist_comodule(a: &ComoduleAlgebra, c: &HopfCocycle, twisted: Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
    let l = a.left_coaction()?;
    let h = &c.hopf;
    if l.hopf.dim() != h.dim() || twisted.dim() != h.dim() || (0..h.dim()).any(|b| l.hopf.comult(b) != h.comult(b)) {
        return Err(invalid("comodule algebra and cocycle live over different Hopf algebras"));
    }
    let alg = &a.algebra;
    let d = alg.dim();
    let table: Vec<Vector> = (0..d * d)
        .map(|k| {
            let (x, y) = (k / d, k % d);
            let mut out = Vector::zero();
            for ((h1, x0), u) in l.map[x].iter() {
                for ((h2, y0), v) in l.map[y].iter() {
                    if let Some(s) = c.sigma.get((h1, h2)) {
                        out.add_scaled(alg.basis_mul(x0, y0), &(&(u * v) * s));
                    }
                }
            }
            out
        })
        .collect();
    let new = Algebra::from_table(alg.field().clone(), alg.labels().to_vec(), table, alg.unit().clone())?;
    let new = reword(alg, new);
    let out = ComoduleAlgebra::left(format!("{}_σ", a.name), new, twisted, l.map.clone())?;
    let r = verify_coaction(&out);
    if !r.passed() {
        let msg = r.failures().next().map(|c| format!("{}: {}", c.name, c.detail)).unwrap_or_default();
        return Err(Error::Structure(format!("twisted comodule algebra fails: {msg}")));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistPresentation {
    pub n: u32,
    pub cocycle: CocycleJson,
    pub report: Report,
    /// `(α, β)` with `x ↦ αx`, `y ↦ βy`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(String, String)>,
    pub candidates_tried: usize,
}

impl TwistPresentation {
    pub fn passed(&self) -> bool {
        self.witness.is_some() && self.report.passed()
    }
}

/// Result of [`diagonal_hopf_iso`].
pub struct DiagonalIso {
    pub scales: Option<(Scalar, Scalar)>,
    /// the witness, or the last failed attempt
    pub morphism: Option<Morphism>,
    pub tried: usize,
}

/// Hopf maps `src → dst` sending each presentation generator to the
/// same-indexed basis element, with `x ↦ αx` and `y ↦ βy` for roots of unity
/// `α, β` of the field.
pub fn diagonal_hopf_iso(src: &HopfAlgebra, dst: &HopfAlgebra) -> Result<DiagonalIso> {
    let field = src.field();
    let p = src
        .algebra
        .presentation()
        .filter(|_| src.algebra.presentation_consistent())
        .ok_or_else(|| Error::Unsupported("source algebra has no consistent presentation".into()))?
        .clone();
    let one = field.one();
    let scales: Vec<Scalar> = (0..field.conductor() as i64).map(|k| field.zeta_pow(k)).collect();
    let mut out = DiagonalIso { scales: None, morphism: None, tried: 0 };
    for alpha in &scales {
        for beta in &scales {
            out.tried += 1;
            let imgs: Vec<Vector> = p
                .generators
                .iter()
                .map(|g| {
                    let c = match g.name.as_str() {
                        "x" => alpha.clone(),
                        "y" => beta.clone(),
                        _ => one.clone(),
                    };
                    Vector::single(g.basis, c)
                })
                .collect();
            let m = hopf_morphism_check(src, dst, &imgs)?;
            let ok = m.passed();
            out.morphism = Some(m);
            if ok {
                out.scales = Some((alpha.clone(), beta.clone()));
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Builds `H^[σ_ψ]` and `H_(χ1,χ2)` and looks for a Hopf isomorphism of the
/// form `g ↦ g`, `x ↦ αx`, `y ↦ βy` with `α, β` roots of unity in the field.
pub fn verify_twist_presentation(field: &Field, n: u32, psi: &Cocycle2) -> Result<TwistPresentation> {
    let h = Arc::new(h_double(field, n)?);
    let mut report = Report::new(format!("H^[σ] ≅ H_χ (n={n})"));
    let sigma = lift_hopf_cocycle(h, psi)?;
    report.extend("cocycle", sigma.report.clone());
    let ht = twist_hopf(&sigma)?;
    report.extend("twisted", verify_hopf(&ht));
    let (chi1, chi2) = characters_from_cocycle(psi)?;
    report.record("characters admissible", characters_admissible(&chi1, &chi2), "");
    let hc = h_chi(field, n, &chi1, &chi2)?;
    let iso = diagonal_hopf_iso(&ht, &hc)?;
    let witness = match (iso.scales, iso.morphism) {
        (Some((a, b)), Some(m)) => {
            report.extend("iso", m.report);
            Some((a.to_string(), b.to_string()))
        }
        (_, last) => {
            if let Some(m) = last {
                report.extend("iso", m.report);
            }
            report.fail("witness", "no diagonal rescaling gives a Hopf isomorphism");
            None
        }
    };
    let tried = iso.tried;
    Ok(TwistPresentation { n, cocycle: psi.to_json(), report, witness, candidates_tried: tried })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::taft;

    fn field2() -> Field {
        Field::new(2).unwrap()
    }

    #[test]
    fn bicharacter_sign() {
        let f = field2();
        let g = AbelianGroup::square(2);
        let psi = Cocycle2::bicharacter(&f, g.whole(), [[0, 1], [0, 0]]).unwrap();
        assert!(psi.check_identity().passed);
        assert_eq!(psi.check_identity().evaluated, 64);
        // (−1)^{il} with M = [[0,1],[0,0]]
        assert_eq!(psi.at(g.elem(1, 0), g.elem(0, 1)), &f.int(-1));
        assert_eq!(psi.at(g.elem(0, 1), g.elem(1, 0)), &f.one());
    }

    #[test]
    fn bad_table_rejected() {
        let f = field2();
        let g = AbelianGroup::square(2);
        let mut t = vec![f.one(); 16];
        t[5] = f.int(3);
        assert!(matches!(Cocycle2::from_table(g.whole(), t), Err(Error::Structure(_))));
    }

    #[test]
    fn trivial_characters() {
        let f = field2();
        let psi = Cocycle2::trivial(&f, AbelianGroup::square(2).whole());
        let (a, b) = characters_from_cocycle(&psi).unwrap();
        assert!(a.is_trivial() && b.is_trivial());
    }

    #[test]
    fn compatibility_examples() {
        let f = Field::new(3).unwrap();
        let g = AbelianGroup::square(3);
        let psi = Cocycle2::trivial(&f, g.whole());
        assert!(is_compatible(&psi, &g.diagonal()).unwrap());
        assert!(!is_compatible(&psi, &g.generate(&[g.elem(1, 0)])).unwrap());
    }

    #[test]
    fn degenerate_form_not_invertible() {
        let f = field2();
        let h = taft(&f, 2).unwrap();
        let s: Form = [((0, 0), f.one())].into_iter().collect();
        assert!(convolution_inverse(&h, &s).is_err());
        let e = counit_form(&h);
        assert_eq!(convolution_inverse(&h, &e).unwrap(), e);
    }

    #[test]
    fn antipode_solve_matches_taft() {
        let f = Field::new(3).unwrap();
        let h = taft(&f, 3).unwrap();
        let d = h.dim();
        let comult: Vec<Tensor> = (0..d).map(|b| h.comult(b).clone()).collect();
        let counit: Vec<Scalar> = (0..d).map(|b| h.counit(b).clone()).collect();
        let s = solve_antipode(&h.algebra, &comult, &counit).unwrap();
        for (b, v) in s.iter().enumerate() {
            assert_eq!(v, h.antipode(b));
        }
    }
}
