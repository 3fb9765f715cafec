//! Comodule algebras over finite-dimensional Hopf algebras.

use crate::algebra::{check_multiplicative, show_vector, tensor_mul, tensor_of, tensor_unit, Algebra, Tensor};
use crate::error::{invalid, Error, Result};
use crate::group::Elem;
use crate::hopf::{cop, tensor_hopf, HopfAlgebra, Lin3};
use crate::linalg::{self, Subspace, Vector};
use crate::lin::Acc;
use crate::report::{Check, Report};
use std::sync::Arc;

/// Coaction given on basis elements. Left coactions have keys `(h, a)`,
/// right coactions `(a, h)`.
#[derive(Clone, Debug)]
pub struct Coaction {
    pub hopf: Arc<HopfAlgebra>,
    pub map: Vec<Tensor>,
}

#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub name: String,
    pub algebra: Algebra,
    pub left: Option<Coaction>,
    pub right: Option<Coaction>,
}

impl ComoduleAlgebra {
    pub fn left(name: impl Into<String>, algebra: Algebra, hopf: Arc<HopfAlgebra>, map: Vec<Tensor>) -> Result<Self> {
        check_shape(&algebra, &hopf, &map, true)?;
        Ok(ComoduleAlgebra {
            name: name.into(),
            algebra,
            left: Some(Coaction { hopf, map }),
            right: None,
        })
    }

    pub fn right(name: impl Into<String>, algebra: Algebra, hopf: Arc<HopfAlgebra>, map: Vec<Tensor>) -> Result<Self> {
        check_shape(&algebra, &hopf, &map, false)?;
        Ok(ComoduleAlgebra {
            name: name.into(),
            algebra,
            left: None,
            right: Some(Coaction { hopf, map }),
        })
    }

    /// Left coaction from its values on the presentation generators,
    /// extended multiplicatively. Not verified.
    pub fn left_from_generators(
        name: impl Into<String>,
        algebra: Algebra,
        hopf: Arc<HopfAlgebra>,
        gen_images: &[Tensor],
    ) -> Result<Self> {
        if algebra.presentation().is_none() {
            return Err(Error::Unsupported("algebra has no presentation".into()));
        }
        let ha = &hopf.algebra;
        let map = algebra.extend_on_words(
            gen_images,
            tensor_unit(ha, &algebra),
            |x, y| tensor_mul(ha, &algebra, x, y),
            |x, c| x.scale(c),
            false,
        )?;
        ComoduleAlgebra::left(name, algebra, hopf, map)
    }

    /// Runs [`verify_coaction`] and fails with the first broken axiom.
    pub fn verified(self) -> Result<Self> {
        let r = verify_coaction(&self);
        let msg = r.failures().next().map(|c| format!("{}: {} ({})", self.name, c.name, c.detail));
        match msg {
            None => Ok(self),
            Some(m) => Err(Error::Structure(m)),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn left_coaction(&self) -> Result<&Coaction> {
        self.left.as_ref().ok_or_else(|| Error::Unsupported(format!("{} has no left coaction", self.name)))
    }

    pub fn right_coaction(&self) -> Result<&Coaction> {
        self.right.as_ref().ok_or_else(|| Error::Unsupported(format!("{} has no right coaction", self.name)))
    }

    pub fn hopf(&self) -> Result<&Arc<HopfAlgebra>> {
        Ok(&self.left_coaction()?.hopf)
    }

    pub fn apply_left(&self, v: &Vector) -> Tensor {
        let l = self.left.as_ref().expect("left coaction");
        v.flat_map(|k| l.map[k].clone())
    }

    pub fn apply_right(&self, v: &Vector) -> Tensor {
        let r = self.right.as_ref().expect("right coaction");
        v.flat_map(|k| r.map[k].clone())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }
}

fn check_shape(alg: &Algebra, h: &HopfAlgebra, map: &[Tensor], left: bool) -> Result<()> {
    if alg.field() != h.field() {
        return Err(Error::FieldMismatch(alg.field().conductor(), h.field().conductor()));
    }
    if map.len() != alg.dim() {
        return Err(invalid("coaction has the wrong number of entries"));
    }
    let (dh, da) = (h.dim(), alg.dim());
    let bad = map.iter().any(|t| {
        t.keys().any(|(u, v)| {
            let (hh, a) = if left { (u, v) } else { (v, u) };
            hh >= dh || a >= da
        })
    });
    if bad {
        return Err(invalid("coaction refers to a basis index out of range"));
    }
    Ok(())
}

/// `H` coacting on itself by `Δ`.
pub fn regular_left(h: Arc<HopfAlgebra>) -> ComoduleAlgebra {
    let map = (0..h.dim()).map(|b| h.comult(b).clone()).collect();
    ComoduleAlgebra {
        name: format!("{} (regular)", h.name),
        algebra: h.algebra.clone(),
        left: Some(Coaction { hopf: h, map }),
        right: None,
    }
}

/// `a ↦ 1 ⊗ a`.
pub fn trivial_left(name: impl Into<String>, algebra: Algebra, h: Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
    let one = h.algebra.unit().clone();
    let map = (0..algebra.dim()).map(|a| tensor_of(&one, &algebra.basis_vector(a))).collect();
    ComoduleAlgebra::left(name, algebra, h, map)
}

/// Coassociativity, counit and multiplicativity for each declared coaction,
/// and commutation when both sides are present.
pub fn verify_coaction(a: &ComoduleAlgebra) -> Report {
    let mut r = Report::new(&a.name);
    let alg = &a.algebra;
    if let Some(l) = &a.left {
        let h = &l.hopf;
        r.push(Check::over("left coassociativity", 0..a.dim(), |b| {
            let mut lhs = Acc::new();
            let mut rhs = Acc::new();
            for ((x, y), c) in l.map[b].iter() {
                for ((u, v), e) in h.comult(x).iter() {
                    lhs.add_mul((u, v, y), c, e);
                }
                for ((u, v), e) in l.map[y].iter() {
                    rhs.add_mul((x, u, v), c, e);
                }
            }
            if lhs.finish() != rhs.finish() {
                return Err(format!("fails on {}", alg.label(b)));
            }
            Ok(())
        }));
        r.push(Check::over("left counit", 0..a.dim(), |b| {
            let mut v = Vector::zero();
            for ((x, y), c) in l.map[b].iter() {
                v.add_term(y, &(c * h.counit(x)));
            }
            if v != alg.basis_vector(b) {
                return Err(format!("fails on {}", alg.label(b)));
            }
            Ok(())
        }));
        let ha = &h.algebra;
        r.push(check_multiplicative(
            "left coaction is an algebra map",
            alg,
            &|v| a.apply_left(v),
            &|x, y| tensor_mul(ha, alg, x, y),
            &tensor_unit(ha, alg),
            false,
        ));
    }
    if let Some(rc) = &a.right {
        let h = &rc.hopf;
        r.push(Check::over("right coassociativity", 0..a.dim(), |b| {
            let mut lhs = Acc::new();
            let mut rhs = Acc::new();
            for ((x, y), c) in rc.map[b].iter() {
                for ((u, v), e) in rc.map[x].iter() {
                    lhs.add_mul((u, v, y), c, e);
                }
                for ((u, v), e) in h.comult(y).iter() {
                    rhs.add_mul((x, u, v), c, e);
                }
            }
            if lhs.finish() != rhs.finish() {
                return Err(format!("fails on {}", alg.label(b)));
            }
            Ok(())
        }));
        r.push(Check::over("right counit", 0..a.dim(), |b| {
            let mut v = Vector::zero();
            for ((x, y), c) in rc.map[b].iter() {
                v.add_term(x, &(c * h.counit(y)));
            }
            if v != alg.basis_vector(b) {
                return Err(format!("fails on {}", alg.label(b)));
            }
            Ok(())
        }));
        let ha = &h.algebra;
        r.push(check_multiplicative(
            "right coaction is an algebra map",
            alg,
            &|v| a.apply_right(v),
            &|x, y| tensor_mul(alg, ha, x, y),
            &tensor_unit(alg, ha),
            false,
        ));
    }
    if let (Some(l), Some(rc)) = (&a.left, &a.right) {
        r.push(Check::over("coactions commute", 0..a.dim(), |b| {
            let mut lhs: Acc<(usize, usize, usize)> = Acc::new();
            let mut rhs = Acc::new();
            for ((hh, y), c) in l.map[b].iter() {
                for ((u, k), e) in rc.map[y].iter() {
                    lhs.add_mul((hh, u, k), c, e);
                }
            }
            for ((x, k), c) in rc.map[b].iter() {
                for ((hh, u), e) in l.map[x].iter() {
                    rhs.add_mul((hh, u, k), c, e);
                }
            }
            if lhs.finish() != rhs.finish() {
                return Err(format!("fails on {}", alg.label(b)));
            }
            Ok(())
        }));
    }
    r
}

#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub space: Subspace,
    /// spanned by the unit
    pub trivial: bool,
}

impl Coinvariants {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

fn coinvariants_of(a: &ComoduleAlgebra, c: &Coaction, left: bool) -> Coinvariants {
    let da = a.dim();
    let one_h = c.hopf.algebra.unit();
    let f = a.algebra.field();
    let images: Vec<Vector> = (0..da)
        .map(|b| {
            let e = a.algebra.basis_vector(b);
            let triv = if left { tensor_of(one_h, &e) } else { tensor_of(&e, one_h) };
            c.map[b]
                .sub(&triv)
                .map_keys(|(u, v)| if left { u * da + v } else { v * da + u })
        })
        .collect();
    let space = linalg::kernel(&images, c.hopf.dim() * da, &f.one());
    let trivial = space.dim() == 1 && space.contains(a.algebra.unit());
    Coinvariants { space, trivial }
}

/// `{a : λ(a) = 1 ⊗ a}`.
pub fn coinvariants(a: &ComoduleAlgebra) -> Result<Coinvariants> {
    Ok(coinvariants_of(a, a.left_coaction()?, true))
}

/// `{a : ρ(a) = a ⊗ 1}`.
pub fn right_coinvariants(a: &ComoduleAlgebra) -> Result<Coinvariants> {
    Ok(coinvariants_of(a, a.right_coaction()?, false))
}

/// `λ^g(a) = g⁻¹ a₋₁ g ⊗ a₀`; the right coaction is kept.
pub fn g_twist(a: &ComoduleAlgebra, g: Elem) -> Result<ComoduleAlgebra> {
    let l = a.left_coaction()?;
    let h = &l.hopf;
    let grp = h.group().ok_or_else(|| Error::Unsupported("Hopf algebra has no designated group".into()))?;
    let gi = h.grouplike(g).ok_or_else(|| invalid(format!("{} is not a designated grouplike", grp.label(g))))?;
    let ginv = h.grouplike(grp.inv(g)).ok_or_else(|| invalid("inverse grouplike missing"))?;
    let one = h.field().one();
    let (eg, eginv) = (Vector::single(gi, one.clone()), Vector::single(ginv, one));
    let conj: Vec<Vector> = (0..h.dim())
        .map(|b| h.algebra.mul(&h.algebra.mul(&eginv, &h.algebra.basis_vector(b)), &eg))
        .collect();
    let map = l
        .map
        .iter()
        .map(|t| crate::algebra::tensor_map(t, Some(&|k| conj[k].clone()), None))
        .collect();
    Ok(ComoduleAlgebra {
        name: format!("{}^{}", a.name, grp.label(g)),
        algebra: a.algebra.clone(),
        left: Some(Coaction { hopf: h.clone(), map }),
        right: a.right.clone(),
    })
}

/// Pushes a left coaction along a map of Hopf algebras given on basis elements.
pub fn transport_left(a: &ComoduleAlgebra, images: &[Vector], target: Arc<HopfAlgebra>) -> Result<ComoduleAlgebra> {
    let l = a.left_coaction()?;
    if images.len() != l.hopf.dim() {
        return Err(invalid("Hopf map has the wrong number of images"));
    }
    let map = l
        .map
        .iter()
        .map(|t| crate::algebra::tensor_map(t, Some(&|k| images[k].clone()), None))
        .collect();
    ComoduleAlgebra::left(a.name.clone(), a.algebra.clone(), target, map)
}

/// Opposite algebra with the side of the coaction switched:
/// a left comodule algebra gives `ρ(k) = k₀ ⊗ S⁻¹(k₋₁)`, a right one gives
/// `λ(r) = S(r₁) ⊗ r₀`.
pub fn bar(a: &ComoduleAlgebra) -> Result<ComoduleAlgebra> {
    let alg = a.algebra.opposite();
    match (&a.left, &a.right) {
        (Some(l), None) => {
            let sinv = l.hopf.antipode_inverse()?;
            let map = l
                .map
                .iter()
                .map(|t| {
                    let mut acc = Acc::new();
                    for ((x, y), c) in t.iter() {
                        for (s, e) in sinv[x].iter() {
                            acc.add_mul((y, s), c, e);
                        }
                    }
                    acc.finish()
                })
                .collect();
            ComoduleAlgebra::right(format!("bar {}", a.name), alg, l.hopf.clone(), map)
        }
        (None, Some(r)) => {
            let h = &r.hopf;
            let map = r
                .map
                .iter()
                .map(|t| {
                    let mut acc = Acc::new();
                    for ((x, y), c) in t.iter() {
                        for (s, e) in h.antipode(y).iter() {
                            acc.add_mul((s, x), c, e);
                        }
                    }
                    acc.finish()
                })
                .collect();
            ComoduleAlgebra::left(format!("bar {}", a.name), alg, h.clone(), map)
        }
        _ => Err(Error::Unsupported("bar needs exactly one coaction".into())),
    }
}

/// `A` as a left `A ⊗ A^cop`-comodule algebra, `a ↦ a₁ ⊗ a₃ ⊗ a₂`.
pub fn diag(h: &HopfAlgebra) -> Result<ComoduleAlgebra> {
    let big = Arc::new(tensor_hopf(h, &cop(h)?)?);
    let d = h.dim();
    let map = (0..d)
        .map(|b| {
            let t: Lin3 = h.comult2(b);
            t.map_keys(|(u, v, w)| (u * d + w, v))
        })
        .collect();
    ComoduleAlgebra::left(format!("diag({})", h.name), h.algebra.clone(), big, map)
}

/// A subalgebra given by a subspace, with basis the reduced echelon rows.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: Algebra,
    /// basis elements as vectors of the ambient algebra
    pub basis: Vec<Vector>,
    pub space: Subspace,
}

impl Subalgebra {
    pub fn new(ambient: &Algebra, space: Subspace) -> Result<Subalgebra> {
        let basis: Vec<Vector> = space.basis().cloned().collect();
        let labels = basis
            .iter()
            .map(|v| {
                if v.len() == 1 && v.first().unwrap().1.is_one() {
                    ambient.label(v.first().unwrap().0).to_string()
                } else {
                    format!("[{}]", show_vector(ambient, v))
                }
            })
            .collect();
        let unit = space
            .coords(ambient.unit())
            .ok_or_else(|| Error::Structure("subspace does not contain the unit".into()))?;
        let d = basis.len();
        let mut table = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                let p = ambient.mul(x, y);
                table.push(space.coords(&p).ok_or_else(|| Error::Structure("subspace is not closed under products".into()))?);
            }
        }
        let algebra = Algebra::from_table(ambient.field().clone(), labels, table, unit)?;
        Ok(Subalgebra { algebra, basis, space })
    }

    /// Ambient vector of a subalgebra vector.
    pub fn embed(&self, v: &Vector) -> Vector {
        linalg::apply(&self.basis, v)
    }
}

/// Restricts the left coaction of `a` to a subalgebra that is a subcomodule.
pub fn sub_comodule(a: &ComoduleAlgebra, sub: &Subalgebra, name: impl Into<String>) -> Result<ComoduleAlgebra> {
    let l = a.left_coaction()?;
    let mut map = Vec::with_capacity(sub.basis.len());
    for v in &sub.basis {
        let t = a.apply_left(v);
        let mut by_h: std::collections::BTreeMap<usize, Vector> = std::collections::BTreeMap::new();
        for ((h, b), c) in t.iter() {
            by_h.entry(h).or_default().add_term(b, c);
        }
        let mut out = Tensor::zero();
        for (h, w) in by_h {
            let co = sub.space.coords(&w).ok_or_else(|| {
                Error::Structure(format!("coaction of {} leaves the subspace", show_vector(&a.algebra, v)))
            })?;
            for (k, c) in co.iter() {
                out.add_term((h, k), c);
            }
        }
        map.push(out);
    }
    ComoduleAlgebra::left(name, sub.algebra.clone(), l.hopf.clone(), map)
}

/// Associated graded of the filtration `A_m = λ⁻¹(H_m ⊗ A)`,
/// `H_m` the span of basis elements of degree `≤ m`.
#[derive(Clone, Debug)]
pub struct Graded {
    pub gr: ComoduleAlgebra,
    /// filtration degree of each adapted basis element
    pub degrees: Vec<u32>,
    /// adapted basis as vectors of the original algebra
    pub basis: Vec<Vector>,
    /// `dim A_m` for `m = 0, 1, …`
    pub filtration: Vec<usize>,
}

pub fn loewy_graded(a: &ComoduleAlgebra) -> Result<Graded> {
    let l = a.left_coaction()?;
    let h = &l.hopf;
    let grading = h.grading().ok_or_else(|| Error::Unsupported("Hopf algebra is not graded".into()))?;
    let top = grading.iter().copied().max().unwrap_or(0);
    let da = a.dim();
    let f = a.algebra.field();
    let mut spaces = Vec::new();
    for m in 0..=top {
        let images: Vec<Vector> = l
            .map
            .iter()
            .map(|t| t.filter(|(x, _)| grading[x] > m).map_keys(|(x, y)| x * da + y))
            .collect();
        spaces.push(linalg::kernel(&images, h.dim() * da, &f.one()));
    }
    if spaces.last().map(Subspace::dim) != Some(da) {
        return Err(Error::FiltrationNotExhaustive);
    }
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    let mut prev: std::collections::BTreeSet<usize> = Default::default();
    for (m, s) in spaces.iter().enumerate() {
        for (p, row) in s.pivots().zip(s.basis()) {
            if !prev.contains(&p) {
                basis.push(row.clone());
                degrees.push(m as u32);
            }
        }
        prev = s.pivots().collect();
    }
    let inv = linalg::invert(&basis).ok_or_else(|| Error::Structure("adapted basis is singular".into()))?;
    let coords = |v: &Vector| linalg::apply(&inv, v);
    let labels: Vec<String> = basis
        .iter()
        .map(|v| {
            if v.len() == 1 && v.first().unwrap().1.is_one() {
                a.algebra.label(v.first().unwrap().0).to_string()
            } else {
                format!("[{}]", show_vector(&a.algebra, v))
            }
        })
        .collect();
    let mut table = Vec::with_capacity(da * da);
    for i in 0..da {
        for j in 0..da {
            let p = coords(&a.algebra.mul(&basis[i], &basis[j]));
            let d = degrees[i] + degrees[j];
            if p.keys().any(|k| degrees[k] > d) {
                return Err(Error::Structure("filtration is not multiplicative".into()));
            }
            table.push(p.filter(|k| degrees[k] == d));
        }
    }
    let unit = coords(a.algebra.unit()).filter(|k| degrees[k] == 0);
    let algebra = Algebra::from_table(f.clone(), labels, table, unit)?;
    let mut map = Vec::with_capacity(da);
    for (i, v) in basis.iter().enumerate() {
        let t = a.apply_left(v);
        let mut acc = Acc::new();
        for ((x, y), c) in t.iter() {
            for (k, e) in inv[y].iter() {
                acc.add_mul((x, k), c, e);
            }
        }
        let t = acc.finish();
        if t.keys().any(|(x, k)| grading[x] + degrees[k] > degrees[i]) {
            return Err(Error::Structure("coaction does not respect the filtration".into()));
        }
        map.push(t.filter(|(x, k)| grading[x] + degrees[k] == degrees[i]));
    }
    let gr = ComoduleAlgebra::left(format!("gr {}", a.name), algebra, h.clone(), map)?;
    Ok(Graded {
        gr,
        degrees,
        basis,
        filtration: spaces.iter().map(Subspace::dim).collect(),
    })
}

/// Verification result for a map of comodule algebras.
#[derive(Clone, Debug)]
pub struct ComoduleMorphism {
    pub images: Vec<Vector>,
    pub report: Report,
}

impl ComoduleMorphism {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn same_hopf(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    a.dim() == b.dim() && a.algebra == b.algebra && (0..a.dim()).all(|k| a.comult(k) == b.comult(k))
}

/// Algebra map, left/right comodule map and bijectivity for the extension of
/// generator images of `src` into `dst`.
pub fn comodule_algebra_iso_check(
    src: &ComoduleAlgebra,
    dst: &ComoduleAlgebra,
    gen_images: &[Vector],
) -> Result<ComoduleMorphism> {
    if src.algebra.field() != dst.algebra.field() {
        return Err(Error::FieldMismatch(src.algebra.field().conductor(), dst.algebra.field().conductor()));
    }
    if gen_images.iter().any(|v| v.keys().any(|k| k >= dst.dim())) {
        return Err(invalid("generator image outside the target"));
    }
    let images = crate::morphism::extend_algebra_map(&src.algebra, &dst.algebra, gen_images)?;
    Ok(check_images(src, dst, images))
}

/// Same checks for a map given on every basis element.
pub fn check_images(src: &ComoduleAlgebra, dst: &ComoduleAlgebra, images: Vec<Vector>) -> ComoduleMorphism {
    let mut r = Report::new(format!("{} -> {}", src.name, dst.name));
    let phi = |v: &Vector| linalg::apply(&images, v);
    let da = &dst.algebra;
    r.push(check_multiplicative(
        "algebra map",
        &src.algebra,
        &phi,
        &|x, y| da.mul(x, y),
        da.unit(),
        false,
    ));
    for (side, s, d) in [("left", &src.left, &dst.left), ("right", &src.right, &dst.right)] {
        let (Some(s), Some(d)) = (s, d) else {
            continue;
        };
        let name = format!("{side} comodule map");
        if !same_hopf(&s.hopf, &d.hopf) {
            r.fail(&name, "coacting Hopf algebras differ");
            continue;
        }
        let left = side == "left";
        r.push(Check::over(&name, 0..src.dim(), |b| {
            let lhs = images[b].flat_map(|k| d.map[k].clone());
            let rhs = if left {
                crate::algebra::tensor_map(&s.map[b], None, Some(&|k| images[k].clone()))
            } else {
                crate::algebra::tensor_map(&s.map[b], Some(&|k| images[k].clone()), None)
            };
            if lhs != rhs {
                return Err(format!("fails on {}", src.algebra.label(b)));
            }
            Ok(())
        }));
    }
    let bij = src.dim() == dst.dim() && linalg::invert(&images).is_some();
    r.record("bijective", bij, if bij { "" } else { "not invertible" });
    ComoduleMorphism { images, report: r }
}

/// Outcome of a generator-image search.
#[derive(Clone, Debug)]
pub struct IsoSearch {
    pub witness: Option<(Vec<Vector>, ComoduleMorphism)>,
    pub candidates_tried: usize,
    pub note: String,
}

impl IsoSearch {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

fn flat_left(t: &Tensor, da: usize) -> Vector {
    t.map_keys(|(h, a)| h * da + a)
}

/// Solutions `v` of `Σ v_k cols[k] = rhs`: a particular solution and a
/// kernel basis.
fn solve_affine(cols: &[Vector], rhs: &Vector, ncols: usize, one: &crate::Scalar) -> Option<(Vector, Vec<Vector>)> {
    let d = cols.len();
    let mut rows = cols.to_vec();
    rows.push(rhs.neg());
    let ker = linalg::left_kernel(&rows, ncols, one);
    // move the rhs marker to the front so the echelon form isolates it
    let s = Subspace::spanned_by(&ker.iter().map(|v| v.map_keys(|k| if k == d { 0 } else { k + 1 })).collect::<Vec<_>>());
    let mut particular = None;
    let mut kernel = Vec::new();
    for (p, row) in s.pivots().zip(s.basis()) {
        let back = row.map_keys(|k| if k == 0 { d } else { k - 1 });
        if p == 0 {
            particular = Some(back.filter(|k| k < d));
        } else {
            kernel.push(back);
        }
    }
    particular.map(|p| (p, kernel))
}

/// Looks for an isomorphism of left comodule algebras `src → dst` among
/// generator assignments: grouplike-type generators go to scalar multiples
/// of elements of the same type (scales 1 and the roots of unity of the
/// field), the others to solutions of the linear comodule condition.
pub fn find_iso(src: &ComoduleAlgebra, dst: &ComoduleAlgebra) -> Result<IsoSearch> {
    let mut out = IsoSearch {
        witness: None,
        candidates_tried: 0,
        note: String::new(),
    };
    if src.dim() != dst.dim() {
        out.note = format!("dimensions differ: {} vs {}", src.dim(), dst.dim());
        return Ok(out);
    }
    let (ls, ld) = (src.left_coaction()?, dst.left_coaction()?);
    if !same_hopf(&ls.hopf, &ld.hopf) {
        return Err(invalid("comodule algebras over different Hopf algebras"));
    }
    let h = &ls.hopf;
    let pres = src
        .algebra
        .presentation()
        .filter(|_| src.algebra.presentation_consistent())
        .ok_or_else(|| Error::Unsupported("source needs a consistent presentation".into()))?;
    let f = src.algebra.field().clone();
    let one = f.one();
    let da = dst.dim();
    let ncols = h.dim() * da;
    let dst_cols: Vec<Vector> = (0..da).map(|b| flat_left(&ld.map[b], da)).collect();
    let gens: Vec<usize> = pres.generators.iter().map(|g| g.basis).collect();
    let grouplike_of = |b: usize| -> Option<usize> {
        let t = &ls.map[b];
        (t.len() == 1).then(|| t.first().unwrap()).and_then(|((x, y), c)| (y == b && c.is_one()).then_some(x))
    };
    let n = f.conductor() as i64;
    let scales: Vec<crate::Scalar> = (0..n).map(|k| f.zeta_pow(k)).collect();
    let mut options: Vec<Vec<Vector>> = vec![Vec::new(); gens.len()];
    let mut group_gens = Vec::new();
    for (k, &b) in gens.iter().enumerate() {
        if let Some(hx) = grouplike_of(b) {
            group_gens.push(k);
            let e = h.algebra.basis_vector(hx);
            let cols: Vec<Vector> = (0..da)
                .map(|t| dst_cols[t].sub(&flat_left(&tensor_of(&e, &dst.algebra.basis_vector(t)), da)))
                .collect();
            let space = linalg::kernel(&cols, ncols, &one);
            for row in space.basis() {
                for s in &scales {
                    options[k].push(row.scale(s));
                }
            }
            if options[k].is_empty() {
                out.note = format!("no element of type {} in the target", h.algebra.label(hx));
                return Ok(out);
            }
        }
    }
    let limit = 20_000usize;
    let mut choice = vec![0usize; group_gens.len()];
    loop {
        let mut images: Vec<Option<Vector>> = vec![None; gens.len()];
        for (c, &k) in choice.iter().zip(&group_gens) {
            images[k] = Some(options[k][*c].clone());
        }
        if let Some(found) = complete_assignment(src, dst, &gens, images, &dst_cols, ncols, &mut out)? {
            out.witness = Some(found);
            return Ok(out);
        }
        if out.candidates_tried >= limit {
            out.note = "search limit reached".into();
            return Ok(out);
        }
        // next combination
        let mut i = 0;
        loop {
            if i == choice.len() {
                out.note = "no witness in search class".into();
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < options[group_gens[i]].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

type Found = (Vec<Vector>, ComoduleMorphism);

/// Solves for the non-grouplike generators given the grouplike images, and
/// tests each resulting assignment.
fn complete_assignment(
    src: &ComoduleAlgebra,
    dst: &ComoduleAlgebra,
    gens: &[usize],
    fixed: Vec<Option<Vector>>,
    dst_cols: &[Vector],
    ncols: usize,
    out: &mut IsoSearch,
) -> Result<Option<Found>> {
    let pres = src.algebra.presentation().unwrap();
    let ls = src.left.as_ref().unwrap();
    let da = dst.dim();
    let one = src.algebra.field().one();
    let assigned: Vec<bool> = fixed.iter().map(Option::is_some).collect();
    // images of basis elements whose words only use assigned letters
    let mut partial: Vec<Option<Vector>> = vec![None; src.dim()];
    for (b, w) in pres.words.iter().enumerate() {
        if w.letters.iter().all(|&l| assigned[l]) {
            let mut v = dst.algebra.unit().clone();
            for &l in &w.letters {
                v = dst.algebra.mul(&v, fixed[l].as_ref().unwrap());
            }
            partial[b] = Some(v.scale(&w.coeff.inv()?));
        }
    }
    let mut per_gen: Vec<Vec<Vector>> = Vec::new();
    let mut free = Vec::new();
    for (k, &b) in gens.iter().enumerate() {
        if assigned[k] {
            continue;
        }
        free.push(k);
        let mut rhs = Tensor::zero();
        let mut self_terms = Vector::zero();
        for ((x, y), c) in ls.map[b].iter() {
            if y == b {
                self_terms.add_term(x, c);
            } else if let Some(v) = &partial[y] {
                rhs.add_scaled(&tensor_of(&Vector::single(x, c.clone()), v), &one);
            } else {
                return Err(Error::Unsupported(format!(
                    "coaction of generator {} involves unresolved element {}",
                    src.algebra.label(b),
                    src.algebra.label(y)
                )));
            }
        }
        let cols: Vec<Vector> = (0..da)
            .map(|t| dst_cols[t].sub(&flat_left(&tensor_of(&self_terms, &dst.algebra.basis_vector(t)), da)))
            .collect();
        let Some((p, ker)) = solve_affine(&cols, &flat_left(&rhs, da), ncols, &one) else {
            out.candidates_tried += 1;
            return Ok(None);
        };
        let mut cands = vec![p.clone()];
        for kv in &ker {
            cands.push(p.add(kv));
            cands.push(p.sub(kv));
        }
        per_gen.push(cands);
    }
    let mut choice = vec![0usize; free.len()];
    loop {
        let mut images: Vec<Vector> = Vec::with_capacity(gens.len());
        let mut fi = 0;
        for (k, f) in fixed.iter().enumerate() {
            match f {
                Some(v) => images.push(v.clone()),
                None => {
                    debug_assert_eq!(free[fi], k);
                    images.push(per_gen[fi][choice[fi]].clone());
                    fi += 1;
                }
            }
        }
        out.candidates_tried += 1;
        let m = comodule_algebra_iso_check(src, dst, &images)?;
        if m.passed() {
            return Ok(Some((images, m)));
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(None);
            }
            choice[i] += 1;
            if choice[i] < per_gen[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::taft;
    use crate::scalar::Field;

    #[test]
    fn regular_coaction_verifies() {
        let f = Field::new(3).unwrap();
        let h = Arc::new(taft(&f, 3).unwrap());
        let a = regular_left(h);
        assert!(verify_coaction(&a).passed());
        let c = coinvariants(&a).unwrap();
        assert!(c.trivial);
    }

    #[test]
    fn bar_twice_is_identity() {
        let f = Field::new(2).unwrap();
        let h = Arc::new(taft(&f, 2).unwrap());
        let a = regular_left(h);
        let b = bar(&a).unwrap();
        assert!(verify_coaction(&b).passed());
        let bb = bar(&b).unwrap();
        assert!(verify_coaction(&bb).passed());
        let m = check_images(&a, &bb, (0..a.dim()).map(|k| a.basis_vector(k)).collect());
        assert!(m.passed(), "{}", m.report);
    }

    #[test]
    fn diag_has_trivial_coinvariants() {
        let f = Field::new(2).unwrap();
        let d = diag(&taft(&f, 2).unwrap()).unwrap();
        assert!(verify_coaction(&d).passed());
        assert!(coinvariants(&d).unwrap().trivial);
    }

    #[test]
    fn affine_solver() {
        let f = Field::new(1).unwrap();
        let v = |xs: &[i64]| xs.iter().enumerate().map(|(i, &x)| (i, f.int(x))).collect::<Vector>();
        let cols = vec![v(&[1, 0]), v(&[1, 0]), v(&[0, 1])];
        let (p, ker) = solve_affine(&cols, &v(&[2, 3]), 2, &f.one()).unwrap();
        assert_eq!(linalg::apply(&cols, &p), v(&[2, 3]));
        assert_eq!(ker.len(), 1);
        assert!(solve_affine(&[v(&[1, 0])], &v(&[0, 1]), 2, &f.one()).is_none());
    }
}
