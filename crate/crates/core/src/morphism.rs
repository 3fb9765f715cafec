//! Maps between Hopf algebras given on generators.

use crate::algebra::{check_multiplicative, tensor_map};
use crate::error::{invalid, Error, Result};
use crate::hopf::{cop, taft, taft_inverse, HopfAlgebra};
use crate::linalg::{self, Vector};
use crate::report::{Check, Report};
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub struct Morphism {
    /// images of the source basis elements
    pub images: Vec<Vector>,
    pub report: Report,
}

impl Morphism {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Extends generator images over the presentation words of `src`.
pub fn extend_algebra_map(src: &crate::algebra::Algebra, dst: &crate::algebra::Algebra, gen_images: &[Vector]) -> Result<Vec<Vector>> {
    if !src.presentation_consistent() {
        return Err(Error::Unsupported("source needs a consistent presentation".into()));
    }
    src.extend_on_words(gen_images, dst.unit().clone(), |x, y| dst.mul(x, y), |x, c| x.scale(c), false)
}

/// Checks that the generator assignment extends to a bijective Hopf algebra map.
pub fn hopf_morphism_check(src: &HopfAlgebra, dst: &HopfAlgebra, gen_images: &[Vector]) -> Result<Morphism> {
    if src.field() != dst.field() {
        return Err(Error::FieldMismatch(src.field().conductor(), dst.field().conductor()));
    }
    if gen_images.iter().any(|v| v.keys().any(|k| k >= dst.dim())) {
        return Err(invalid("generator image outside the target"));
    }
    let images = extend_algebra_map(&src.algebra, &dst.algebra, gen_images)?;
    let phi = |v: &Vector| linalg::apply(&images, v);
    let mut r = Report::new(format!("{} -> {}", src.name, dst.name));
    let da = &dst.algebra;
    r.push(check_multiplicative(
        "algebra map",
        &src.algebra,
        &phi,
        &|x, y| da.mul(x, y),
        da.unit(),
        false,
    ));
    r.push(Check::over("coalgebra map", 0..src.dim(), |b| {
        let lhs = dst.apply_comult(&images[b]);
        let rhs = tensor_map(src.comult(b), Some(&|k| images[k].clone()), Some(&|k| images[k].clone()));
        if lhs != rhs {
            return Err(format!("Δ fails on {}", src.algebra.label(b)));
        }
        if dst.apply_counit(&images[b]) != *src.counit(b) {
            return Err(format!("ε fails on {}", src.algebra.label(b)));
        }
        Ok(())
    }));
    r.push(Check::over("antipode compatibility", 0..src.dim(), |b| {
        if phi(src.antipode(b)) != dst.apply_antipode(&images[b]) {
            return Err(format!("fails on {}", src.algebra.label(b)));
        }
        Ok(())
    }));
    let bij = src.dim() == dst.dim() && linalg::invert(&images).is_some();
    r.record("bijective", bij, if bij { "" } else { "not invertible" });
    Ok(Morphism { images, report: r })
}

/// `T_{q⁻¹} → T_q^cop`, `g ↦ g`, `y ↦ x g⁻¹`.
pub fn iso_cop(field: &Field, n: u32) -> Result<(HopfAlgebra, HopfAlgebra, Morphism)> {
    let src = taft_inverse(field, n)?;
    let dst = cop(&taft(field, n)?)?;
    let one = field.one();
    let idx = |lbl: &str| dst.algebra.index_of(lbl).ok_or_else(|| invalid(format!("no basis element {lbl}")));
    let g = idx("g")?;
    let ginv = idx(&if n == 2 { "g".to_string() } else { format!("g^{}", n - 1) })?;
    let x = idx("x")?;
    let xg = dst.algebra.mul(&Vector::single(x, one.clone()), &Vector::single(ginv, one.clone()));
    let m = hopf_morphism_check(&src, &dst, &[Vector::single(g, one), xg])?;
    Ok((src, dst, m))
}
