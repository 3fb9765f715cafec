//! Absolute simplicity of comodule algebras by the Burnside span criterion.
//!
//! The operators are left and right multiplications by algebra generators
//! and `a ↦ f(a₋₁) a₀` for `f` in a generating set of `H*`. `A` has no
//! proper costable ideal over the algebraic closure iff these operators
//! span all of `End(A)`.
//!
//! The span is first computed over `F_p` for a prime `p ≡ 1 (mod N)`, with
//! `ζ_N` sent to a primitive root mod `p`. Reduction can only lower the
//! rank, so reaching `(dim A)²` mod `p` proves the exact statement; any
//! other outcome is settled by an exact computation.

use crate::comodule::ComoduleAlgebra;
use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::linalg::{self, Subspace, Vector};
use crate::modp;
use crate::scalar::Scalar;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Simplicity {
    pub simple: bool,
    pub dim: usize,
    /// dimension of the operator span reached
    pub span_dim: usize,
    pub target: usize,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub operators: usize,
    /// operator products formed during saturation
    pub products: usize,
}

/// Convolution algebra `H*` in the dual basis `δ_h`.
pub struct Dual<'a> {
    h: &'a HopfAlgebra,
    conv: HashMap<(usize, usize), Vector>,
}

impl<'a> Dual<'a> {
    pub fn new(h: &'a HopfAlgebra) -> Self {
        let mut conv: HashMap<(usize, usize), Vector> = HashMap::new();
        for x in 0..h.dim() {
            for ((a, b), c) in h.comult(x).iter() {
                conv.entry((a, b)).or_default().add_term(x, c);
            }
        }
        Dual { h, conv }
    }

    pub fn unit(&self) -> Vector {
        (0..self.h.dim()).map(|k| (k, self.h.counit(k).clone())).collect()
    }

    pub fn mul(&self, f: &Vector, g: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (a, x) in f.iter() {
            for (b, y) in g.iter() {
                if let Some(v) = self.conv.get(&(a, b)) {
                    out.add_scaled(v, &(x * y));
                }
            }
        }
        out
    }

    fn closure(&self, gens: &[Vector]) -> Subspace {
        let mut s = Subspace::new();
        let u = self.unit();
        s.insert(&u);
        let mut queue = vec![u];
        while let Some(v) = queue.pop() {
            for g in gens {
                let p = self.mul(g, &v);
                if s.insert(&p) {
                    queue.push(p);
                }
            }
        }
        s
    }

    /// A generating set: characters of the designated group extended by
    /// zero, then dual basis elements by degree, added greedily.
    pub fn generators(&self) -> Vec<Vector> {
        let h = self.h;
        let f = h.field();
        let mut cands: Vec<Vector> = Vec::new();
        if let Some(grp) = h.group() {
            if let Ok(q) = f.primitive_root(grp.n) {
                for axis in 0..grp.rank {
                    let v: Vector = h
                        .grouplike_basis()
                        .iter()
                        .map(|(e, b)| (*b, q.pow(e.0[axis] as i64).unwrap()))
                        .collect();
                    cands.push(v);
                }
            }
        }
        let mut order: Vec<usize> = (0..h.dim()).collect();
        order.sort_by_key(|&b| (h.degree(b), b));
        cands.extend(order.into_iter().map(|b| Vector::single(b, f.one())));
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for c in cands {
            if span.dim() == h.dim() {
                break;
            }
            if !span.contains(&c) {
                gens.push(c);
                span = self.closure(&gens);
            }
        }
        gens
    }
}

/// Operators as images of basis vectors.
fn operators(a: &ComoduleAlgebra) -> Result<Vec<Vec<Vector>>> {
    let alg = &a.algebra;
    let d = alg.dim();
    let gens = alg.verified_generators().unwrap_or_else(|| (0..d).collect());
    let mut ops = Vec::new();
    for &g in &gens {
        let e = alg.basis_vector(g);
        ops.push((0..d).map(|b| alg.mul(&e, &alg.basis_vector(b))).collect());
        ops.push((0..d).map(|b| alg.mul(&alg.basis_vector(b), &e)).collect());
    }
    if let Some(l) = &a.left {
        let dual = Dual::new(&l.hopf);
        for f in dual.generators() {
            ops.push(
                (0..d)
                    .map(|b| {
                        let mut v = Vector::zero();
                        for ((x, y), c) in l.map[b].iter() {
                            if let Some(fx) = f.get(x) {
                                v.add_term(y, &(c * fx));
                            }
                        }
                        v
                    })
                    .collect(),
            );
        }
    }
    Ok(ops)
}

pub fn is_h_simple(a: &ComoduleAlgebra) -> Result<Simplicity> {
    let d = a.dim();
    let ops = operators(a)?;
    let target = d * d;
    let n = a.algebra.field().conductor() as u64;
    for (p, root) in modp::primes_with_roots(n).take(2) {
        let Some(mops) = reduce_ops(&ops, d, p, root) else {
            continue;
        };
        let (span, products) = saturate_modp(&mops, d, p);
        let cert = Simplicity {
            simple: span == target,
            dim: d,
            span_dim: span,
            target,
            method: "modular".into(),
            prime: Some(p),
            operators: ops.len(),
            products,
        };
        if cert.simple {
            return Ok(cert);
        }
    }
    let (span, products) = saturate_exact(&ops, d);
    Ok(Simplicity {
        simple: span == target,
        dim: d,
        span_dim: span,
        target,
        method: "exact".into(),
        prime: None,
        operators: ops.len(),
        products,
    })
}

fn reduce_ops(ops: &[Vec<Vector>], d: usize, p: u64, root: u64) -> Option<Vec<Vec<u64>>> {
    let mut out = Vec::with_capacity(ops.len());
    for op in ops {
        let mut m = vec![0u64; d * d];
        for (j, col) in op.iter().enumerate() {
            for (i, c) in col.iter() {
                m[i * d + j] = Scalar::mod_p(c, p, root)?;
            }
        }
        out.push(m);
    }
    Some(out)
}

fn matmul(a: &[u64], b: &[u64], d: usize, p: u64) -> Vec<u64> {
    let mut c = vec![0u64; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == 0 {
                continue;
            }
            let row_b = &b[k * d..(k + 1) * d];
            let row_c = &mut c[i * d..(i + 1) * d];
            for j in 0..d {
                row_c[j] = (row_c[j] + x * row_b[j]) % p;
            }
        }
    }
    c
}

fn saturate_modp(ops: &[Vec<u64>], d: usize, p: u64) -> (usize, usize) {
    let target = d * d;
    let mut span = modp::Echelon::new(p);
    let mut id = vec![0u64; d * d];
    for i in 0..d {
        id[i * d + i] = 1;
    }
    let mut queue = vec![id.clone()];
    span.insert(id);
    let mut products = 0;
    let mut head = 0;
    while head < queue.len() && span.rank() < target {
        let m = queue[head].clone();
        head += 1;
        for g in ops {
            products += 1;
            let prod = matmul(g, &m, d, p);
            if span.insert(prod.clone()).is_some() {
                queue.push(prod);
                if span.rank() == target {
                    break;
                }
            }
        }
    }
    (span.rank(), products)
}

fn saturate_exact(ops: &[Vec<Vector>], d: usize) -> (usize, usize) {
    let target = d * d;
    let flat = |m: &[Vector]| -> Vector {
        let mut v = Vector::zero();
        for (j, col) in m.iter().enumerate() {
            for (i, c) in col.iter() {
                v.add_term(i * d + j, c);
            }
        }
        v
    };
    let Some(one) = ops.iter().flatten().find_map(|c| c.first().map(|(_, x)| x.field().one())) else {
        return (usize::from(d > 0), 0);
    };
    let id: Vec<Vector> = (0..d).map(|i| Vector::single(i, one.clone())).collect();
    let mut span = Subspace::new();
    span.insert(&flat(&id));
    let mut queue = vec![id];
    let mut products = 0;
    let mut head = 0;
    while head < queue.len() && span.dim() < target {
        let m = queue[head].clone();
        head += 1;
        for g in ops {
            products += 1;
            let prod: Vec<Vector> = m.iter().map(|col| linalg::apply(g, col)).collect();
            if span.insert(&flat(&prod)) {
                queue.push(prod);
                if span.dim() == target {
                    break;
                }
            }
        }
    }
    (span.dim(), products)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Generator};
    use crate::comodule::{regular_left, trivial_left};
    use crate::hopf::taft;
    use crate::scalar::Field;
    use std::sync::Arc;

    #[test]
    fn regular_taft_is_simple() {
        let f = Field::new(3).unwrap();
        let h = Arc::new(taft(&f, 3).unwrap());
        let c = is_h_simple(&regular_left(h)).unwrap();
        assert!(c.simple, "{c:?}");
        assert_eq!(c.span_dim, 81);
    }

    #[test]
    fn dual_generators_generate() {
        let f = Field::new(2).unwrap();
        let h = taft(&f, 2).unwrap();
        let d = Dual::new(&h);
        let g = d.generators();
        assert_eq!(d.closure(&g).dim(), 4);
        assert!(g.len() <= 3);
    }

    #[test]
    fn nilpotent_ideal_detected() {
        let f = Field::new(2).unwrap();
        let h = Arc::new(taft(&f, 2).unwrap());
        let alg = Algebra::from_fn(f.clone(), vec!["1".into(), "t".into()], Vector::single(0, f.one()), |a, b| {
            if a + b < 2 {
                Vector::single(a + b, f.one())
            } else {
                Vector::zero()
            }
        })
        .unwrap()
        .with_words(vec![Generator { name: "t".into(), basis: 1 }], vec![vec![], vec![0]])
        .unwrap();
        let a = trivial_left("k[t]/t^2", alg, h).unwrap();
        let c = is_h_simple(&a).unwrap();
        assert!(!c.simple);
        assert_eq!(c.method, "exact");
    }
}
