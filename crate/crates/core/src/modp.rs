//! Arithmetic in prime fields `F_p` with `p < 2^31`.

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

/// Fully reduced echelon rows over `F_p`.
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns the reduced row when it was independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        let p = self.p;
        for (c, row) in &self.rows {
            let k = v[*c];
            if k != 0 {
                let m = p - k;
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x = (*x + m * r) % p;
                    }
                }
            }
        }
        let piv = v.iter().position(|&x| x != 0)?;
        let inv = inv(v[piv], p);
        for x in v.iter_mut() {
            *x = mul(*x, inv, p);
        }
        for (_, row) in self.rows.iter_mut() {
            let k = row[piv];
            if k != 0 {
                let m = p - k;
                for (x, r) in row.iter_mut().zip(&v) {
                    if *r != 0 {
                        *x = (*x + m * r) % p;
                    }
                }
            }
        }
        self.rows.push((piv, v.clone()));
        Some(v)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primes `p ≡ 1 (mod order)` just below `2^31`, in decreasing order, each
/// paired with a primitive `order`-th root of unity mod `p`.
pub fn primes_with_roots(order: u64) -> impl Iterator<Item = (u64, u64)> {
    let start = ((1u64 << 31) - 1) / order * order + 1;
    let mut p = start;
    std::iter::from_fn(move || loop {
        if p <= order {
            return None;
        }
        p -= order;
        let cand = p + order;
        if cand >= 1 << 31 || !is_prime(cand) {
            continue;
        }
        if let Some(r) = primitive_root_of_order(order, cand) {
            return Some((cand, r));
        }
    })
}

fn primitive_root_of_order(order: u64, p: u64) -> Option<u64> {
    if (p - 1) % order != 0 {
        return None;
    }
    let fs = prime_factors(order);
    for a in 2..p.min(10_000) {
        let r = pow(a, (p - 1) / order, p);
        if fs.iter().all(|&l| pow(r, order / l, p) != 1) {
            return Some(r);
        }
    }
    None
}
