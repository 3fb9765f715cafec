//! Sparse linear combinations over a scalar field.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A finite linear combination `Σ c_k · k`, sorted by key, no zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lin<K> {
    terms: Vec<(K, Scalar)>,
}

impl<K: Ord + Copy> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: Vec::new() }
    }
}

impl<K: Ord + Copy> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Lin { terms: vec![(k, c)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (K, &Scalar)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = K> + '_ {
        self.terms.iter().map(|(k, _)| *k)
    }

    pub fn terms(&self) -> &[(K, Scalar)] {
        &self.terms
    }

    pub fn get(&self, k: K) -> Option<&Scalar> {
        self.terms
            .binary_search_by(|(x, _)| x.cmp(&k))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn first(&self) -> Option<(K, &Scalar)> {
        self.terms.first().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, k: K, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(x, _)| x.cmp(&k)) {
            Ok(i) => {
                let s = &self.terms[i].1 + c;
                if s.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = s;
                }
            }
            Err(i) => self.terms.insert(i, (k, c.clone())),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Lin<K>, c: &Scalar) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if self.terms.is_empty() {
            *self = other.scale(c);
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, &b[j].1 * c));
                j += 1;
            } else {
                let mut s = a[i].1.clone();
                s.add_mul(&b[j].1, c);
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        self.terms = out;
    }

    pub fn add(&self, other: &Lin<K>) -> Lin<K> {
        let mut r = self.clone();
        if let Some((_, c)) = other.terms.first() {
            r.add_scaled(other, &c.field().one());
        }
        r
    }

    pub fn sub(&self, other: &Lin<K>) -> Lin<K> {
        let mut r = self.clone();
        if let Some((_, c)) = other.terms.first() {
            r.add_scaled(other, &-c.field().one());
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> Lin<K> {
        if c.is_zero() {
            return Lin::zero();
        }
        Lin {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Lin<K> {
        Lin {
            terms: self.terms.iter().map(|(k, x)| (*k, -x)).collect(),
        }
    }

    pub fn map_keys<J: Ord + Copy>(&self, f: impl Fn(K) -> J) -> Lin<J> {
        self.terms.iter().map(|(k, c)| (f(*k), c.clone())).collect()
    }

    /// Linear extension of `f` on keys.
    pub fn flat_map<J: Ord + Copy>(&self, f: impl Fn(K) -> Lin<J>) -> Lin<J> {
        let mut acc = Acc::new();
        for (k, c) in &self.terms {
            for (j, d) in f(*k).iter() {
                acc.add(j, &(c * d));
            }
        }
        acc.finish()
    }

    pub fn filter(&self, f: impl Fn(K) -> bool) -> Lin<K> {
        Lin {
            terms: self.terms.iter().filter(|(k, _)| f(*k)).cloned().collect(),
        }
    }
}

impl<K: Ord + Copy> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(it: I) -> Self {
        let mut acc = Acc::new();
        for (k, c) in it {
            acc.add(k, &c);
        }
        acc.finish()
    }
}

/// Accumulator for building a [`Lin`] from many terms.
pub struct Acc<K> {
    map: BTreeMap<K, Scalar>,
}

impl<K: Ord + Copy> Default for Acc<K> {
    fn default() -> Self {
        Acc {
            map: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Copy> Acc<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, k: K, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&k) {
            Some(v) => *v = &*v + c,
            None => {
                self.map.insert(k, c.clone());
            }
        }
    }

    pub fn add_mul(&mut self, k: K, a: &Scalar, b: &Scalar) {
        match self.map.get_mut(&k) {
            Some(v) => v.add_mul(a, b),
            None => {
                let p = a * b;
                if !p.is_zero() {
                    self.map.insert(k, p);
                }
            }
        }
    }

    pub fn add_lin(&mut self, l: &Lin<K>, c: &Scalar) {
        for (k, x) in l.iter() {
            self.add_mul(k, x, c);
        }
    }

    pub fn finish(self) -> Lin<K> {
        Lin {
            terms: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}
