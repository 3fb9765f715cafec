//! Finite abelian groups `Z_n` and `Z_n × Z_n` and their subgroups.

use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Element of `Z_n^rank` (rank 1 or 2); unused coordinates are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub [u32; 2]);

impl Elem {
    pub const ID: Elem = Elem([0, 0]);

    pub fn i(&self) -> u32 {
        self.0[0]
    }

    pub fn j(&self) -> u32 {
        self.0[1]
    }
}

/// `Z_n^rank`, written multiplicatively with generators `g` (and `(g,1)`, `(1,g)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub n: u32,
    pub rank: usize,
}

impl AbelianGroup {
    pub fn cyclic(n: u32) -> Self {
        AbelianGroup { n, rank: 1 }
    }

    pub fn square(n: u32) -> Self {
        AbelianGroup { n, rank: 2 }
    }

    pub fn order(&self) -> usize {
        (self.n as usize).pow(self.rank as u32)
    }

    pub fn elem(&self, i: i64, j: i64) -> Elem {
        let n = self.n as i64;
        Elem([i.rem_euclid(n) as u32, if self.rank == 2 { j.rem_euclid(n) as u32 } else { 0 }])
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let n = self.n;
        Elem([(a.0[0] + b.0[0]) % n, (a.0[1] + b.0[1]) % n])
    }

    pub fn inv(&self, a: Elem) -> Elem {
        let n = self.n;
        Elem([(n - a.0[0]) % n, (n - a.0[1]) % n])
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        self.elem(a.0[0] as i64 * k, a.0[1] as i64 * k)
    }

    pub fn elements(&self) -> Vec<Elem> {
        let n = self.n;
        if self.rank == 1 {
            (0..n).map(|i| Elem([i, 0])).collect()
        } else {
            (0..n).flat_map(|i| (0..n).map(move |j| Elem([i, j]))).collect()
        }
    }

    pub fn standard_generators(&self) -> Vec<Elem> {
        if self.rank == 1 {
            vec![Elem([1 % self.n, 0])]
        } else {
            vec![Elem([1 % self.n, 0]), Elem([0, 1 % self.n])]
        }
    }

    pub fn label(&self, a: Elem) -> String {
        let p = |e: u32| match e {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{e}"),
        };
        if self.rank == 1 {
            p(a.0[0])
        } else {
            format!("({},{})", p(a.0[0]), p(a.0[1]))
        }
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[Elem]) -> Subgroup {
        Subgroup::from_set(*self, self.closure(gens))
    }

    fn closure(&self, gens: &[Elem]) -> BTreeSet<Elem> {
        let mut set = BTreeSet::from([Elem::ID]);
        let mut frontier = vec![Elem::ID];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// All subgroups, each listed once, ordered by size then elements.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let elems = self.elements();
        let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut push = |s: Subgroup, out: &mut Vec<Subgroup>| {
            if seen.insert(s.elems.clone()) {
                out.push(s);
            }
        };
        push(self.generate(&[]), &mut out);
        for &a in &elems {
            push(self.generate(&[a]), &mut out);
            if self.rank == 2 {
                for &b in &elems {
                    push(self.generate(&[a, b]), &mut out);
                }
            }
        }
        out.sort_by(|a, b| (a.len(), &a.elems).cmp(&(b.len(), &b.elems)));
        out
    }

    pub fn diagonal(&self) -> Subgroup {
        self.generate(&[self.elem(1, 1)])
    }

    pub fn whole(&self) -> Subgroup {
        self.generate(&self.standard_generators())
    }
}

/// A subgroup, with a minimal-ish generating set and generator words for each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub group: AbelianGroup,
    pub elems: Vec<Elem>,
    pub gens: Vec<Elem>,
    index: HashMap<Elem, usize>,
}

impl Subgroup {
    fn from_set(group: AbelianGroup, set: BTreeSet<Elem>) -> Subgroup {
        let elems: Vec<Elem> = set.into_iter().collect();
        // greedy generating set
        let mut gens = Vec::new();
        let mut span = BTreeSet::from([Elem::ID]);
        for &e in &elems {
            if !span.contains(&e) {
                gens.push(e);
                span = group.closure(&gens);
            }
        }
        let index = elems.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        Subgroup {
            group,
            elems,
            gens,
            index,
        }
    }

    /// Subgroup generated by explicit elements, checked to lie in the group.
    pub fn from_generators(group: AbelianGroup, gens: &[Elem]) -> Result<Subgroup> {
        for g in gens {
            if g.0[0] >= group.n || g.0[1] >= group.n || (group.rank == 1 && g.0[1] != 0) {
                return Err(invalid(format!("{g:?} is not an element of Z_{}^{}", group.n, group.rank)));
            }
        }
        Ok(group.generate(gens))
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.index.contains_key(&e)
    }

    pub fn index_of(&self, e: Elem) -> Option<usize> {
        self.index.get(&e).copied()
    }

    /// Exponents `m_k` with `e = Π gens[k]^m_k`, from a breadth-first search.
    pub fn word(&self, e: Elem) -> Option<Vec<usize>> {
        let mut best: HashMap<Elem, Vec<usize>> = HashMap::from([(Elem::ID, vec![])]);
        let mut queue = std::collections::VecDeque::from([Elem::ID]);
        while let Some(x) = queue.pop_front() {
            if x == e {
                return best.remove(&x);
            }
            let w = best[&x].clone();
            for (k, &g) in self.gens.iter().enumerate() {
                // keep letters sorted so words are products of powers
                if w.last().is_some_and(|&l| l > k) {
                    continue;
                }
                let y = self.group.mul(x, g);
                if let std::collections::hash_map::Entry::Vacant(v) = best.entry(y) {
                    let mut w2 = w.clone();
                    w2.push(k);
                    v.insert(w2);
                    queue.push_back(y);
                }
            }
        }
        best.remove(&e)
    }

    pub fn label(&self) -> String {
        let gs: Vec<String> = self.gens.iter().map(|g| self.group.label(*g)).collect();
        format!("<{}>", gs.join(", "))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        // Z_2 x Z_2 has 5 subgroups, Z_3 x Z_3 has 6, Z_4 x Z_4 has 15
        assert_eq!(AbelianGroup::square(2).subgroups().len(), 5);
        assert_eq!(AbelianGroup::square(3).subgroups().len(), 6);
        assert_eq!(AbelianGroup::square(4).subgroups().len(), 15);
        assert_eq!(AbelianGroup::cyclic(6).subgroups().len(), 4);
    }

    #[test]
    fn words_reconstruct_elements() {
        let g = AbelianGroup::square(3);
        let s = g.whole();
        for &e in &s.elems {
            let w = s.word(e).unwrap();
            let prod = w.iter().fold(Elem::ID, |acc, &k| g.mul(acc, s.gens[k]));
            assert_eq!(prod, e);
        }
        assert_eq!(g.diagonal().len(), 3);
    }
}
