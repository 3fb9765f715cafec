//! Exact linear algebra on sparse vectors.

use crate::lin::Lin;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

pub type Vector = Lin<usize>;

/// Subspace of a coordinate space, kept as reduced row echelon rows keyed by pivot.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    rows: BTreeMap<usize, Vector>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn spanned_by<'a>(vs: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut s = Subspace::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Basis rows in pivot order.
    pub fn basis(&self) -> impl Iterator<Item = &Vector> + '_ {
        self.rows.values()
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (k, c) in v.iter() {
            if let Some(row) = self.rows.get(&k) {
                r.add_scaled(row, &-c);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.first() else {
            return false;
        };
        let r = r.scale(&c.inv().expect("nonzero pivot"));
        for row in self.rows.values_mut() {
            if let Some(x) = row.get(p).cloned() {
                row.add_scaled(&r, &-x);
            }
        }
        self.rows.insert(p, r);
        true
    }

    /// Coordinates of `v` in the pivot-ordered basis, if `v` lies in the span.
    pub fn coords(&self, v: &Vector) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.coords_unchecked(v))
    }

    /// Coordinates assuming membership.
    pub fn coords_unchecked(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, p) in self.rows.keys().enumerate() {
            if let Some(c) = v.get(*p) {
                out.add_term(i, c);
            }
        }
        out
    }

    /// Element with the given coordinates.
    pub fn combine(&self, coords: &Vector) -> Vector {
        let rows: Vec<&Vector> = self.rows.values().collect();
        let mut out = Vector::zero();
        for (i, c) in coords.iter() {
            out.add_scaled(rows[i], c);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }
}

pub fn rank<'a>(vs: impl IntoIterator<Item = &'a Vector>) -> usize {
    Subspace::spanned_by(vs).dim()
}

/// Rank of vectors with coordinates below `ncols`. Full rank is first
/// sought modulo primes `p ≡ 1 (mod N)`; a reduction never raises the rank,
/// so a full modular rank is exact. Otherwise the rank is computed exactly.
pub fn rank_fast(vs: &[Vector], ncols: usize) -> usize {
    let full = vs.len().min(ncols);
    let Some(field) = vs.iter().find_map(|v| v.first().map(|(_, c)| c.field().clone())) else {
        return 0;
    };
    for (p, root) in crate::modp::primes_with_roots(field.conductor() as u64).take(2) {
        let mut e = crate::modp::Echelon::new(p);
        let mut ok = true;
        for v in vs {
            let mut row = vec![0u64; ncols];
            for (k, c) in v.iter() {
                match c.mod_p(p, root) {
                    Some(x) => row[k] = x,
                    None => ok = false,
                }
            }
            if !ok {
                break;
            }
            e.insert(row);
        }
        if ok && e.rank() == full {
            return full;
        }
    }
    rank(vs)
}

/// Basis of `{c : Σ c_i rows_i = 0}`, where each row lives in `ncols` coordinates.
pub fn left_kernel(rows: &[Vector], ncols: usize, one: &Scalar) -> Vec<Vector> {
    let mut s = Subspace::new();
    for (i, r) in rows.iter().enumerate() {
        let mut aug = r.clone();
        aug.add_term(ncols + i, one);
        s.insert(&aug);
    }
    s.basis()
        .filter(|r| r.first().is_some_and(|(p, _)| p >= ncols))
        .map(|r| r.map_keys(|k| k - ncols))
        .collect()
}

/// Kernel of the linear map with the given images of basis vectors, as a
/// subspace of the source.
pub fn kernel(images: &[Vector], ncols: usize, one: &Scalar) -> Subspace {
    Subspace::spanned_by(&left_kernel(images, ncols, one))
}

/// Inverse of the square map `e_j ↦ cols[j]`, as images of basis vectors.
pub fn invert(cols: &[Vector]) -> Option<Vec<Vector>> {
    let n = cols.len();
    let one = cols.iter().find_map(|c| c.first().map(|(_, x)| x.field().one()))?;
    let mut s = Subspace::new();
    for (j, c) in cols.iter().enumerate() {
        if c.keys().any(|k| k >= n) {
            return None;
        }
        let mut aug = c.clone();
        aug.add_term(n + j, &one);
        s.insert(&aug);
    }
    let mut inv = vec![Vector::zero(); n];
    let mut seen = 0;
    for (p, row) in s.rows.iter() {
        if *p >= n {
            return None;
        }
        let main = row.filter(|k| k < n);
        if main.len() != 1 {
            return None;
        }
        inv[*p] = row.filter(|k| k >= n).map_keys(|k| k - n);
        seen += 1;
    }
    (seen == n).then_some(inv)
}

/// A solution of `Σ_k rows[i]_k u_k = rhs[i]` with free variables set to
/// zero, or `None` if the system is inconsistent.
pub fn solve(rows: &[Vector], rhs: &[Scalar], ncols: usize) -> Option<Vector> {
    let mut s = Subspace::new();
    for (r, b) in rows.iter().zip(rhs) {
        let mut aug = r.clone();
        if !b.is_zero() {
            aug.add_term(ncols, &-b);
        }
        s.insert(&aug);
    }
    if s.rows.contains_key(&ncols) {
        return None;
    }
    let mut out = Vector::zero();
    for (p, row) in &s.rows {
        if let Some(c) = row.get(ncols) {
            out.add_term(*p, &-c);
        }
    }
    Some(out)
}

/// Apply a linear map given by images of basis vectors.
pub fn apply(map: &[Vector], v: &Vector) -> Vector {
    v.flat_map(|k| map[k].clone())
}

/// Dense rendering of a linear map as rows of scalars (row = target coordinate).
pub fn to_dense(map: &[Vector], rows: usize, zero: &Scalar) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![zero.clone(); map.len()]; rows];
    for (j, col) in map.iter().enumerate() {
        for (i, c) in col.iter() {
            m[i][j] = c.clone();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn v(f: &Field, xs: &[i64]) -> Vector {
        xs.iter()
            .enumerate()
            .map(|(i, &x)| (i, f.int(x)))
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let f = Field::new(1).unwrap();
        let rows = vec![v(&f, &[1, 2, 3]), v(&f, &[2, 4, 6]), v(&f, &[0, 1, 1])];
        assert_eq!(rank(&rows), 2);
        let k = left_kernel(&rows, 3, &f.one());
        assert_eq!(k.len(), 1);
        let combo = k[0].iter().fold(Vector::zero(), |mut acc, (i, c)| {
            acc.add_scaled(&rows[i], c);
            acc
        });
        assert!(combo.is_zero());
    }

    #[test]
    fn inverse_of_triangular() {
        let f = Field::new(3).unwrap();
        let cols = vec![v(&f, &[1, 0]), v(&f, &[5, 2])];
        let inv = invert(&cols).unwrap();
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(apply(&inv, c), Vector::single(j, f.one()));
        }
        assert!(invert(&[v(&f, &[1, 1]), v(&f, &[2, 2])]).is_none());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = Field::new(4).unwrap();
        let s = Subspace::spanned_by(&[v(&f, &[1, 1, 0, 0]), v(&f, &[0, 0, 1, 3])]);
        let w = v(&f, &[2, 2, -1, -3]);
        let c = s.coords(&w).unwrap();
        assert_eq!(s.combine(&c), w);
        assert!(s.coords(&v(&f, &[1, 0, 0, 0])).is_none());
    }
}
