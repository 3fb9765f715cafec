//! Finite-dimensional associative algebras given by structure constants.

use crate::error::{invalid, Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::lin::{Acc, Lin};
use crate::report::Check;
use crate::scalar::{Field, Scalar};
use std::collections::HashMap;
use std::sync::OnceLock;

pub type Tensor = Lin<(usize, usize)>;

/// A generator: a basis element used as a letter in presentation words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub basis: usize,
}

/// `basis_b = coeff⁻¹ · gen[letters[0]] · gen[letters[1]] · …`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<usize>,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub words: Vec<Word>,
}

#[derive(Debug)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vector>,
    unit: Vector,
    presentation: Option<Presentation>,
    consistent: OnceLock<bool>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            field: self.field.clone(),
            labels: self.labels.clone(),
            table: self.table.clone(),
            unit: self.unit.clone(),
            presentation: self.presentation.clone(),
            consistent: OnceLock::new(),
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Algebra) -> bool {
        self.field == o.field && self.labels == o.labels && self.table == o.table && self.unit == o.unit
    }
}

impl Algebra {
    /// `table[a * dim + b]` is the product of basis elements `a` and `b`.
    pub fn from_table(field: Field, labels: Vec<String>, table: Vec<Vector>, unit: Vector) -> Result<Algebra> {
        let d = labels.len();
        if table.len() != d * d {
            return Err(invalid(format!("structure table has {} entries, expected {}", table.len(), d * d)));
        }
        if table.iter().chain(std::iter::once(&unit)).any(|v| v.keys().any(|k| k >= d)) {
            return Err(invalid("structure constant refers to a basis index out of range"));
        }
        Ok(Algebra {
            field,
            labels,
            table,
            unit,
            presentation: None,
            consistent: OnceLock::new(),
        })
    }

    pub fn from_fn(field: Field, labels: Vec<String>, unit: Vector, f: impl Fn(usize, usize) -> Vector) -> Result<Algebra> {
        let d = labels.len();
        let table = (0..d * d).map(|k| f(k / d, k % d)).collect();
        Algebra::from_table(field, labels, table, unit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::single(i, self.field.one())
    }

    pub fn basis_mul(&self, a: usize, b: usize) -> &Vector {
        &self.table[a * self.dim() + b]
    }

    /// Overwrites one product of basis elements. Used to build corrupted
    /// structures for negative tests.
    pub fn set_basis_mul(&mut self, a: usize, b: usize, v: Vector) {
        let d = self.dim();
        self.table[a * d + b] = v;
        self.consistent = OnceLock::new();
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut acc = Acc::new();
        for (a, c) in x.iter() {
            for (b, e) in y.iter() {
                let ce = c * e;
                acc.add_lin(self.basis_mul(a, b), &ce);
            }
        }
        acc.finish()
    }

    pub fn pow(&self, x: &Vector, k: u32) -> Vector {
        let mut r = self.unit.clone();
        for _ in 0..k {
            r = self.mul(&r, x);
        }
        r
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    pub fn clear_presentation(&mut self) {
        self.presentation = None;
        self.consistent = OnceLock::new();
    }

    /// Product of generator letters, left to right.
    pub fn eval_letters(&self, gens: &[Generator], letters: &[usize]) -> Vector {
        let mut r = self.unit.clone();
        for &l in letters {
            r = self.mul(&r, &self.basis_vector(gens[l].basis));
        }
        r
    }

    /// Attaches a presentation, computing each word's coefficient from the
    /// multiplication table. Fails if some word is not a nonzero multiple of
    /// its basis element.
    pub fn with_words(mut self, generators: Vec<Generator>, letters: Vec<Vec<usize>>) -> Result<Algebra> {
        if letters.len() != self.dim() {
            return Err(invalid("one word per basis element required"));
        }
        let mut memo: HashMap<Vec<usize>, Vector> = HashMap::new();
        memo.insert(vec![], self.unit.clone());
        let mut words = Vec::with_capacity(letters.len());
        for (b, w) in letters.into_iter().enumerate() {
            let v = self.eval_memo(&generators, &w, &mut memo);
            let coeff = match (v.len(), v.get(b)) {
                (1, Some(c)) => c.clone(),
                _ => {
                    return Err(Error::Structure(format!(
                        "word for basis element {} is not a multiple of it",
                        self.labels[b]
                    )))
                }
            };
            words.push(Word { letters: w, coeff });
        }
        self.presentation = Some(Presentation { generators, words });
        self.consistent = OnceLock::new();
        Ok(self)
    }

    pub fn set_presentation(&mut self, p: Presentation) {
        self.presentation = Some(p);
        self.consistent = OnceLock::new();
    }

    fn eval_memo(&self, gens: &[Generator], w: &[usize], memo: &mut HashMap<Vec<usize>, Vector>) -> Vector {
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let head = self.eval_memo(gens, &w[..w.len() - 1], memo);
        let v = self.mul(&head, &self.basis_vector(gens[w[w.len() - 1]].basis));
        memo.insert(w.to_vec(), v.clone());
        v
    }

    /// Whether every presentation word evaluates to its recorded multiple.
    /// When true, the generators generate the algebra.
    pub fn presentation_consistent(&self) -> bool {
        *self.consistent.get_or_init(|| {
            let Some(p) = &self.presentation else {
                return false;
            };
            let mut memo = HashMap::from([(vec![], self.unit.clone())]);
            p.words.iter().enumerate().all(|(b, w)| {
                self.eval_memo(&p.generators, &w.letters, &mut memo) == Vector::single(b, w.coeff.clone())
            })
        })
    }

    /// Generator basis indices when the presentation is consistent.
    pub fn verified_generators(&self) -> Option<Vec<usize>> {
        if !self.presentation_consistent() {
            return None;
        }
        Some(self.presentation.as_ref().unwrap().generators.iter().map(|g| g.basis).collect())
    }

    /// Images of all basis elements under the (anti-)multiplicative map that
    /// sends generator `k` to `gen_images[k]`, computed through the words.
    pub fn extend_on_words<T: Clone>(
        &self,
        gen_images: &[T],
        one: T,
        mul: impl Fn(&T, &T) -> T,
        scale: impl Fn(&T, &Scalar) -> T,
        anti: bool,
    ) -> Result<Vec<T>> {
        let p = self
            .presentation
            .as_ref()
            .ok_or_else(|| Error::Unsupported("algebra has no presentation".into()))?;
        if gen_images.len() != p.generators.len() {
            return Err(invalid("wrong number of generator images"));
        }
        let mut memo: HashMap<Vec<usize>, T> = HashMap::from([(vec![], one)]);
        let mut out = Vec::with_capacity(self.dim());
        for w in &p.words {
            for k in 1..=w.letters.len() {
                let pre = &w.letters[..k];
                if memo.contains_key(pre) {
                    continue;
                }
                let head = &memo[&w.letters[..k - 1]];
                let g = &gen_images[pre[k - 1]];
                let v = if anti { mul(g, head) } else { mul(head, g) };
                memo.insert(pre.to_vec(), v);
            }
            let inv = w.coeff.inv()?;
            out.push(scale(&memo[&w.letters], &inv));
        }
        Ok(out)
    }

    /// Opposite algebra `a ·op b = b a`; words are reversed.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim();
        let table = (0..d * d).map(|k| self.basis_mul(k % d, k / d).clone()).collect();
        let mut a = Algebra::from_table(self.field.clone(), self.labels.clone(), table, self.unit.clone()).unwrap();
        if let Some(p) = &self.presentation {
            let words = p
                .words
                .iter()
                .map(|w| Word {
                    letters: w.letters.iter().rev().copied().collect(),
                    coeff: w.coeff.clone(),
                })
                .collect();
            a.set_presentation(Presentation {
                generators: p.generators.clone(),
                words,
            });
        }
        a
    }

    /// Tensor product with basis index `a * dim(b) + b'`.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Result<Algebra> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.conductor(), b.field.conductor()));
        }
        let (da, db) = (a.dim(), b.dim());
        let labels = (0..da * db)
            .map(|k| format!("{} ⊗ {}", a.labels[k / db], b.labels[k % db]))
            .collect();
        let idx = |(i, j): (usize, usize)| i * db + j;
        let unit = tensor_of(&a.unit, &b.unit).map_keys(idx);
        let mut alg = Algebra::from_fn(a.field.clone(), labels, unit, |x, y| {
            tensor_of(a.basis_mul(x / db, y / db), b.basis_mul(x % db, y % db)).map_keys(idx)
        })?;
        if let (Some(pa), Some(pb)) = (&a.presentation, &b.presentation) {
            let na = pa.generators.len();
            let mut gens: Vec<Generator> = pa
                .generators
                .iter()
                .map(|g| Generator {
                    name: g.name.clone(),
                    basis: g.basis * db + first_key(&b.unit),
                })
                .collect();
            gens.extend(pb.generators.iter().map(|g| Generator {
                name: g.name.clone(),
                basis: first_key(&a.unit) * db + g.basis,
            }));
            let letters = (0..da * db)
                .map(|k| {
                    let mut w = pa.words[k / db].letters.clone();
                    w.extend(pb.words[k % db].letters.iter().map(|l| l + na));
                    w
                })
                .collect();
            if a.unit.len() == 1 && b.unit.len() == 1 {
                alg = alg.with_words(gens, letters)?;
            }
        }
        Ok(alg)
    }
}

fn first_key(v: &Vector) -> usize {
    v.first().map(|(k, _)| k).unwrap_or(0)
}

/// `x ⊗ y` as a tensor element.
pub fn tensor_of(x: &Vector, y: &Vector) -> Tensor {
    let mut terms = Vec::with_capacity(x.len() * y.len());
    for (a, c) in x.iter() {
        for (b, e) in y.iter() {
            terms.push(((a, b), c * e));
        }
    }
    terms.into_iter().collect()
}

/// Product in `A ⊗ B` with componentwise multiplication.
pub fn tensor_mul(a: &Algebra, b: &Algebra, x: &Tensor, y: &Tensor) -> Tensor {
    let mut acc = Acc::new();
    for ((a1, b1), c) in x.iter() {
        for ((a2, b2), e) in y.iter() {
            let ce = c * e;
            let pa = a.basis_mul(a1, a2);
            let pb = b.basis_mul(b1, b2);
            for (i, u) in pa.iter() {
                let cu = &ce * u;
                for (j, v) in pb.iter() {
                    acc.add_mul((i, j), &cu, v);
                }
            }
        }
    }
    acc.finish()
}

pub fn tensor_unit(a: &Algebra, b: &Algebra) -> Tensor {
    tensor_of(a.unit(), b.unit())
}

/// Apply linear maps to each leg of a tensor (`None` leaves a leg unchanged).
pub fn tensor_map(
    t: &Tensor,
    f: Option<&dyn Fn(usize) -> Vector>,
    g: Option<&dyn Fn(usize) -> Vector>,
) -> Tensor {
    let mut acc = Acc::new();
    for ((a, b), c) in t.iter() {
        let fa = f.map(|f| f(a)).unwrap_or_else(|| Vector::single(a, c.field().one()));
        let gb = g.map(|g| g(b)).unwrap_or_else(|| Vector::single(b, c.field().one()));
        for (i, u) in fa.iter() {
            let cu = c * u;
            for (j, v) in gb.iter() {
                acc.add_mul((i, j), &cu, v);
            }
        }
    }
    acc.finish()
}

fn show(alg: &Algebra, v: &Vector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(k, c)| format!("({c})*{}", alg.label(k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn show_vector(alg: &Algebra, v: &Vector) -> String {
    show(alg, v)
}

/// `1·b = b = b·1` for every basis element.
pub fn check_unit(alg: &Algebra) -> Check {
    Check::over("unit", 0..alg.dim(), |b| {
        let e = alg.basis_vector(b);
        if alg.mul(alg.unit(), &e) != e || alg.mul(&e, alg.unit()) != e {
            return Err(format!("unit fails on {}", alg.label(b)));
        }
        Ok(())
    })
}

/// Associativity. With a consistent presentation it suffices that every
/// generator associates with all pairs; `exhaustive` forces all triples.
pub fn check_associative(alg: &Algebra, exhaustive: bool) -> Check {
    let d = alg.dim();
    let firsts: Vec<usize> = match (exhaustive, alg.verified_generators()) {
        (false, Some(g)) => g,
        _ => (0..d).collect(),
    };
    let mut c = Check::over("associativity", firsts.iter().flat_map(|&a| (0..d).map(move |b| (a, b))), |(a, b)| {
        let ab = alg.basis_mul(a, b);
        for cc in 0..d {
            let lhs = alg.mul(ab, &alg.basis_vector(cc));
            let rhs = alg.mul(&alg.basis_vector(a), alg.basis_mul(b, cc));
            if lhs != rhs {
                return Err(format!(
                    "({}*{})*{} = {} but {}*({}*{}) = {}",
                    alg.label(a),
                    alg.label(b),
                    alg.label(cc),
                    show(alg, &lhs),
                    alg.label(a),
                    alg.label(b),
                    alg.label(cc),
                    show(alg, &rhs)
                ));
            }
        }
        Ok(())
    });
    c.evaluated *= d;
    if c.passed && firsts.len() < d {
        c.detail = format!("generator criterion over {} generators", firsts.len());
    }
    c
}

/// `f(a b) = f(a) f(b)` and `f(1) = 1` for a linear map `f` into an
/// associative target. Uses generators of a consistent presentation unless
/// `exhaustive` is set.
pub fn check_multiplicative<T: PartialEq>(
    name: &str,
    alg: &Algebra,
    image: &dyn Fn(&Vector) -> T,
    tmul: &dyn Fn(&T, &T) -> T,
    tone: &T,
    exhaustive: bool,
) -> Check {
    if image(alg.unit()) != *tone {
        return Check::fail(name, "unit is not preserved");
    }
    let d = alg.dim();
    let firsts: Vec<usize> = match (exhaustive, alg.verified_generators()) {
        (false, Some(g)) => g,
        _ => (0..d).collect(),
    };
    let basis_images: Vec<T> = (0..d).map(|b| image(&alg.basis_vector(b))).collect();
    let mut c = Check::over(name, firsts.iter().flat_map(|&a| (0..d).map(move |b| (a, b))), |(a, b)| {
        if image(alg.basis_mul(a, b)) != tmul(&basis_images[a], &basis_images[b]) {
            return Err(format!("fails on ({}, {})", alg.label(a), alg.label(b)));
        }
        Ok(())
    });
    if c.passed && firsts.len() < d {
        c.detail = format!("generator criterion over {} generators", firsts.len());
    }
    c
}

/// Smallest subspace containing `start` closed under left and right
/// multiplication by `gens` (or the subalgebra generated, with `start = {1}`).
pub fn saturate(alg: &Algebra, start: &[Vector], gens: &[Vector], two_sided: bool) -> Subspace {
    let mut s = Subspace::new();
    let mut queue: Vec<Vector> = Vec::new();
    for v in start {
        if s.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let mut cands = vec![alg.mul(g, &v)];
            if two_sided {
                cands.push(alg.mul(&v, g));
            }
            for c in cands {
                if s.insert(&c) {
                    queue.push(c);
                }
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    /// k[t]/(t^3) with basis 1, t, t^2
    fn truncated(f: &Field) -> Algebra {
        let labels = vec!["1".into(), "t".into(), "t^2".into()];
        let alg = Algebra::from_fn(f.clone(), labels, Vector::single(0, f.one()), |a, b| {
            if a + b < 3 {
                Vector::single(a + b, f.one())
            } else {
                Vector::zero()
            }
        })
        .unwrap();
        let gens = vec![Generator { name: "t".into(), basis: 1 }];
        alg.with_words(gens, vec![vec![], vec![0], vec![0, 0]]).unwrap()
    }

    #[test]
    fn truncated_polynomials_pass() {
        let f = Field::new(1).unwrap();
        let a = truncated(&f);
        assert!(a.presentation_consistent());
        assert!(check_unit(&a).passed);
        assert!(check_associative(&a, false).passed);
        assert!(check_associative(&a, true).passed);
    }

    #[test]
    fn corrupted_table_detected() {
        let f = Field::new(1).unwrap();
        let mut a = truncated(&f);
        a.set_basis_mul(1, 2, Vector::single(0, f.one()));
        assert!(!check_associative(&a, true).passed);
        assert!(!check_associative(&a, false).passed);
    }

    #[test]
    fn tensor_inherits_words() {
        let f = Field::new(1).unwrap();
        let a = truncated(&f);
        let t = Algebra::tensor(&a, &a).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(t.presentation_consistent());
        assert!(check_associative(&t, true).passed);
    }
}
