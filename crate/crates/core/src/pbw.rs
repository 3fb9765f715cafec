//! Algebras with a PBW basis `e_f · L_1^{a_1} ⋯ L_r^{a_r}` over a twisted
//! group algebra `k_ψ F`.
//!
//! Relations:
//! * `e_f e_f' = ψ(f,f') e_{ff'}`
//! * `e_f L_k = χ_k(f) L_k e_f`
//! * `L_b L_a = c_ba L_a L_b + d_ba e_{h_ba}` for `b > a`
//! * `L_k^{n_k} = p_k · 1`

use crate::algebra::{Algebra, Generator};
use crate::error::{invalid, Error, Result};
use crate::group::{AbelianGroup, Elem, Subgroup};
use crate::linalg::Vector;
use crate::lin::Acc;
use crate::scalar::{Field, Scalar};
use std::cell::RefCell;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct Letter {
    pub name: String,
    pub order: u32,
    /// `L^order = power`
    pub power: Scalar,
    /// `χ(f)` indexed like the subgroup elements
    pub chi: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct Commutator {
    pub c: Scalar,
    pub d: Scalar,
    pub h: Elem,
}

pub struct PbwSpec {
    pub field: Field,
    pub subgroup: Subgroup,
    /// `ψ(f, f')` indexed `fi * |F| + fj`
    pub cocycle: Vec<Scalar>,
    pub letters: Vec<Letter>,
    /// `commutators[b][a]` for `a < b`; `None` means `L_b L_a = L_a L_b`
    pub commutators: Vec<Vec<Option<Commutator>>>,
    /// maps a monomial to its basis index; `None` uses group-major order
    pub order: Option<Box<dyn Fn(usize, &[u32]) -> usize>>,
    pub group_label: Box<dyn Fn(Elem) -> String>,
}

/// A monomial `e_f L^exps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub f: usize,
    pub exps: Vec<u32>,
}

type Terms = Vec<(usize, Vec<u32>, Scalar)>;

pub struct Pbw {
    spec: PbwSpec,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    chi_inv: Vec<Vec<Scalar>>,
    memo: RefCell<HashMap<Vec<u8>, Terms>>,
}

impl PbwSpec {
    pub fn trivial_cocycle(field: &Field, f: &Subgroup) -> Vec<Scalar> {
        vec![field.one(); f.len() * f.len()]
    }

    pub fn no_commutators(r: usize) -> Vec<Vec<Option<Commutator>>> {
        (0..r).map(|b| vec![None; b]).collect()
    }
}

impl Pbw {
    pub fn new(spec: PbwSpec) -> Result<Pbw> {
        let nf = spec.subgroup.len();
        if spec.cocycle.len() != nf * nf {
            return Err(invalid("cocycle table has wrong size"));
        }
        for l in &spec.letters {
            if l.chi.len() != nf {
                return Err(invalid(format!("letter {} has wrong character table", l.name)));
            }
            if l.order == 0 {
                return Err(invalid("letter order must be positive"));
            }
        }
        if spec.commutators.len() != spec.letters.len() {
            return Err(invalid("commutator table has wrong size"));
        }
        let chi_inv = spec
            .letters
            .iter()
            .map(|l| l.chi.iter().map(|c| c.inv()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let orders: Vec<u32> = spec.letters.iter().map(|l| l.order).collect();
        let per: usize = orders.iter().map(|&o| o as usize).product();
        let mut monomials = Vec::with_capacity(nf * per);
        for f in 0..nf {
            for k in 0..per {
                let mut exps = vec![0u32; orders.len()];
                let mut r = k;
                for (i, &o) in orders.iter().enumerate().rev() {
                    exps[i] = (r % o as usize) as u32;
                    r /= o as usize;
                }
                monomials.push(Monomial { f, exps });
            }
        }
        if let Some(ord) = &spec.order {
            let mut placed: Vec<Option<Monomial>> = vec![None; monomials.len()];
            for m in monomials {
                let i = ord(m.f, &m.exps);
                if i >= placed.len() || placed[i].is_some() {
                    return Err(invalid("basis order is not a bijection"));
                }
                placed[i] = Some(m);
            }
            monomials = placed.into_iter().map(Option::unwrap).collect();
        }
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Pbw {
            spec,
            monomials,
            index,
            chi_inv,
            memo: RefCell::new(HashMap::new()),
        })
    }

    fn group(&self) -> AbelianGroup {
        self.spec.subgroup.group
    }

    fn fmul(&self, a: usize, b: usize) -> usize {
        let s = &self.spec.subgroup;
        s.index_of(self.group().mul(s.elems[a], s.elems[b])).expect("closed subgroup")
    }

    fn psi(&self, a: usize, b: usize) -> &Scalar {
        &self.spec.cocycle[a * self.spec.subgroup.len() + b]
    }

    fn one(&self) -> Scalar {
        self.spec.field.one()
    }

    fn id(&self) -> usize {
        self.spec.subgroup.index_of(Elem::ID).unwrap()
    }

    /// Normal form of a word of letters as `Σ c e_f L^exps`.
    fn normal(&self, word: &[u8]) -> Terms {
        if let Some(t) = self.memo.borrow().get(word) {
            return t.clone();
        }
        let r = self.letters_len();
        let res = match word.windows(2).position(|w| w[0] > w[1]) {
            None => {
                let mut exps = vec![0u32; r];
                for &l in word {
                    exps[l as usize] += 1;
                }
                let mut coeff = self.one();
                for (k, e) in exps.iter_mut().enumerate() {
                    let l = &self.spec.letters[k];
                    while *e >= l.order {
                        *e -= l.order;
                        coeff = &coeff * &l.power;
                    }
                }
                if coeff.is_zero() {
                    vec![]
                } else {
                    vec![(self.id(), exps, coeff)]
                }
            }
            Some(i) => {
                let (b, a) = (word[i] as usize, word[i + 1] as usize);
                let mut out: Terms = Vec::new();
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let (c, d, h) = match &self.spec.commutators[b][a] {
                    Some(cm) => (cm.c.clone(), cm.d.clone(), Some(cm.h)),
                    None => (self.one(), self.spec.field.zero(), None),
                };
                for (f, e, x) in self.normal(&swapped) {
                    out.push((f, e, &x * &c));
                }
                if !d.is_zero() {
                    let hi = self
                        .spec
                        .subgroup
                        .index_of(h.unwrap())
                        .expect("commutator group element must lie in F");
                    // prefix · e_h = (Π χ(h)^-1) e_h · prefix
                    let mut k = d;
                    for &l in &word[..i] {
                        k = &k * &self.chi_inv[l as usize][hi];
                    }
                    let mut rest = word[..i].to_vec();
                    rest.extend_from_slice(&word[i + 2..]);
                    for (f, e, x) in self.normal(&rest) {
                        let g = self.fmul(hi, f);
                        out.push((g, e, &(&x * &k) * self.psi(hi, f)));
                    }
                }
                merge(out)
            }
        };
        self.memo.borrow_mut().insert(word.to_vec(), res.clone());
        res
    }

    fn letters_len(&self) -> usize {
        self.spec.letters.len()
    }

    /// Product of two monomials as a vector over the basis.
    pub fn mul_monomials(&self, x: &Monomial, y: &Monomial) -> Vector {
        // e_f L^a e_f' L^b = (Π χ(f')^-a) ψ(f,f') e_{ff'} L^a L^b
        let mut k = self.psi(x.f, y.f).clone();
        for (l, &a) in x.exps.iter().enumerate() {
            for _ in 0..a {
                k = &k * &self.chi_inv[l][y.f];
            }
        }
        let ff = self.fmul(x.f, y.f);
        let mut word: Vec<u8> = Vec::new();
        for m in [x, y] {
            for (l, &a) in m.exps.iter().enumerate() {
                word.extend(std::iter::repeat(l as u8).take(a as usize));
            }
        }
        let mut acc = Acc::new();
        for (f, e, c) in self.normal(&word) {
            let g = self.fmul(ff, f);
            let coeff = &(&c * &k) * self.psi(ff, f);
            acc.add(self.index[&Monomial { f: g, exps: e }], &coeff);
        }
        acc.finish()
    }

    pub fn label(&self, m: &Monomial) -> String {
        let e = self.spec.subgroup.elems[m.f];
        let mut parts = Vec::new();
        if e != Elem::ID || m.exps.iter().all(|&a| a == 0) {
            parts.push((self.spec.group_label)(e));
        }
        for (l, &a) in m.exps.iter().enumerate() {
            let name = &self.spec.letters[l].name;
            match a {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{a}")),
            }
        }
        parts.join(" ")
    }

    pub fn index_of(&self, f: Elem, exps: &[u32]) -> Option<usize> {
        let fi = self.spec.subgroup.index_of(f)?;
        self.index.get(&Monomial { f: fi, exps: exps.to_vec() }).copied()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.spec.subgroup
    }

    pub fn letter_names(&self) -> Vec<String> {
        self.spec.letters.iter().map(|l| l.name.clone()).collect()
    }

    /// The algebra, with generators `e_g` for the generators of `F` followed
    /// by the letters.
    pub fn build(&self) -> Result<Algebra> {
        let d = self.monomials.len();
        let labels: Vec<String> = self.monomials.iter().map(|m| self.label(m)).collect();
        let unit = Vector::single(self.index[&Monomial { f: self.id(), exps: vec![0; self.letters_len()] }], self.one());
        // e_1 is the unit only when ψ(1,1) = 1
        if !self.psi(self.id(), self.id()).is_one() {
            return Err(Error::Structure("cocycle is not normalized: ψ(1,1) ≠ 1".into()));
        }
        let table: Vec<Vector> = (0..d * d)
            .map(|k| self.mul_monomials(&self.monomials[k / d], &self.monomials[k % d]))
            .collect();
        let alg = Algebra::from_table(self.spec.field.clone(), labels.clone(), table, unit)?;
        let sub = &self.spec.subgroup;
        let zero = vec![0u32; self.letters_len()];
        let mut gens: Vec<Generator> = sub
            .gens
            .iter()
            .map(|&g| Generator {
                name: (self.spec.group_label)(g),
                basis: self.index_of(g, &zero).unwrap(),
            })
            .collect();
        let ng = gens.len();
        for (l, letter) in self.spec.letters.iter().enumerate() {
            let mut e = zero.clone();
            e[l] = 1;
            if letter.order == 1 {
                continue;
            }
            gens.push(Generator {
                name: letter.name.clone(),
                basis: self.index[&Monomial { f: self.id(), exps: e }],
            });
        }
        let letter_gen: Vec<Option<usize>> = {
            let mut k = ng;
            self.spec
                .letters
                .iter()
                .map(|l| {
                    (l.order > 1).then(|| {
                        k += 1;
                        k - 1
                    })
                })
                .collect()
        };
        let words = self
            .monomials
            .iter()
            .map(|m| {
                let mut w = sub.word(sub.elems[m.f]).expect("element of subgroup");
                for (l, &a) in m.exps.iter().enumerate() {
                    if let Some(gi) = letter_gen[l] {
                        w.extend(std::iter::repeat(gi).take(a as usize));
                    }
                }
                w
            })
            .collect();
        alg.with_words(gens, words)
    }
}

fn merge(terms: Terms) -> Terms {
    let mut map: HashMap<(usize, Vec<u32>), Scalar> = HashMap::new();
    let mut order = Vec::new();
    for (f, e, c) in terms {
        let k = (f, e);
        match map.get_mut(&k) {
            Some(v) => *v = &*v + &c,
            None => {
                order.push(k.clone());
                map.insert(k, c);
            }
        }
    }
    order
        .into_iter()
        .filter_map(|k| {
            let c = map.remove(&k).unwrap();
            (!c.is_zero()).then_some((k.0, k.1, c))
        })
        .collect()
}
