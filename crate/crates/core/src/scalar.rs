//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`Scalar`] is a polynomial in `z = ζ_N` of degree below `φ(N)`, kept
//! reduced modulo the cyclotomic polynomial `Φ_N`.

use crate::error::{Error, Result};
use crate::rational::Q;
use smallvec::SmallVec;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

type Coeffs = SmallVec<[Q; 4]>;

struct FieldData {
    conductor: u32,
    degree: usize,
    /// monic `Φ_N`, low degree first
    phi: Vec<i64>,
    /// `z^(degree + k) mod Φ_N` for `k < degree`
    red: Vec<Vec<i64>>,
    /// `z^k mod Φ_N` for `k < N`
    powers: Vec<Coeffs>,
}

/// The cyclotomic field `Q(ζ_N)`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, o: &Field) -> bool {
        self.0.conductor == o.0.conductor
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.conductor)
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact division of integer polynomials by a monic divisor.
fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Integer coefficients of `Φ_n`, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            p = div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl Field {
    /// The field `Q(ζ_N)`. Fields are interned, so repeated calls share data.
    pub fn new(conductor: u32) -> Result<Field> {
        if conductor == 0 {
            return Err(Error::ZeroConductor);
        }
        static CACHE: OnceLock<Mutex<HashMap<u32, Field>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut map = cache.lock().unwrap();
        if let Some(f) = map.get(&conductor) {
            return Ok(f.clone());
        }
        let f = Field::build(conductor);
        map.insert(conductor, f.clone());
        Ok(f)
    }

    fn build(conductor: u32) -> Field {
        let phi = cyclotomic_polynomial(conductor);
        let degree = phi.len() - 1;
        // z^deg = -(phi_0 + ... + phi_{deg-1} z^{deg-1})
        let mut cur: Vec<i64> = phi[..degree].iter().map(|c| -c).collect();
        let mut red = Vec::with_capacity(degree);
        for _ in 0..degree {
            red.push(cur.clone());
            // multiply by z and reduce
            let top = cur[degree - 1];
            let mut next = vec![0i64; degree];
            for i in (1..degree).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..degree {
                next[i] -= top * phi[i];
            }
            cur = next;
        }
        let mut data = FieldData {
            conductor,
            degree,
            phi,
            red,
            powers: Vec::new(),
        };
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut p: Coeffs = SmallVec::from_elem(Q::ZERO, degree);
        p[0] = Q::ONE;
        for _ in 0..conductor {
            powers.push(p.clone());
            p = data.mul_coeffs(&p, &data.z_coeffs());
        }
        data.powers = powers;
        Field(Arc::new(data))
    }

    pub fn conductor(&self) -> u32 {
        self.0.conductor
    }

    /// `φ(N)`, the degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Integer coefficients of `Φ_N`, low degree first.
    pub fn modulus(&self) -> &[i64] {
        &self.0.phi
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            c: SmallVec::from_elem(Q::ZERO, self.0.degree),
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, k: i64) -> Scalar {
        self.rational(Q::int(k))
    }

    pub fn rational(&self, q: Q) -> Scalar {
        let mut s = self.zero();
        s.c[0] = q;
        s
    }

    /// `ζ_N^k`, any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let n = self.0.conductor as i64;
        Scalar {
            field: self.clone(),
            c: self.0.powers[k.rem_euclid(n) as usize].clone(),
        }
    }

    pub fn zeta(&self) -> Scalar {
        self.zeta_pow(1)
    }

    /// The primitive `n`-th root of unity `q = ζ_N^(N/n)`.
    pub fn primitive_root(&self, n: u32) -> Result<Scalar> {
        if n == 0 || self.0.conductor % n != 0 {
            return Err(Error::NotDivisor {
                n,
                conductor: self.0.conductor,
            });
        }
        Ok(self.zeta_pow((self.0.conductor / n) as i64))
    }

    /// Parses a scalar literal: rationals, `z`, `+ - * / ^` and parentheses.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        Parser::new(text, self, &[]).run()
    }

    /// Like [`Field::parse`] with extra named constants.
    pub fn parse_with(&self, text: &str, symbols: &[(&str, Scalar)]) -> Result<Scalar> {
        Parser::new(text, self, symbols).run()
    }
}

impl FieldData {
    fn z_coeffs(&self) -> Coeffs {
        let mut c: Coeffs = SmallVec::from_elem(Q::ZERO, self.degree);
        if self.degree == 1 {
            // Φ_1 = z - 1, Φ_2 = z + 1: z is rational
            c[0] = Q::int(self.red[0][0]);
        } else {
            c[1] = Q::ONE;
        }
        c
    }

    fn mul_coeffs(&self, a: &[Q], b: &[Q]) -> Coeffs {
        let d = self.degree;
        if d == 1 {
            return SmallVec::from_elem(a[0].mul(&b[0]), 1);
        }
        let mut t: SmallVec<[Q; 8]> = SmallVec::from_elem(Q::ZERO, 2 * d - 1);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    t[i + j] = t[i + j].add(&x.mul(y));
                }
            }
        }
        let mut out: Coeffs = t[..d].iter().cloned().collect();
        for k in d..2 * d - 1 {
            if t[k].is_zero() {
                continue;
            }
            for (i, &r) in self.red[k - d].iter().enumerate() {
                if r != 0 {
                    out[i] = out[i].add(&t[k].mul_i64(r));
                }
            }
        }
        out
    }
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    c: Coeffs,
}

/// Binary operations accepted by [`Scalar::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients in the power basis `1, z, ..., z^(φ(N)-1)`.
    pub fn coefficients(&self) -> &[Q] {
        &self.c
    }

    pub fn from_coefficients(field: &Field, coeffs: &[Q]) -> Result<Scalar> {
        let f = &field.0;
        let mut acc = field.zero();
        for (k, q) in coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let p = &f.powers[k % f.conductor as usize];
            for (i, pi) in p.iter().enumerate() {
                acc.c[i] = acc.c[i].add(&pi.mul(q));
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Q::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Q::is_zero)
    }

    /// The value as a rational, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Q> {
        self.c[1..].iter().all(Q::is_zero).then(|| &self.c[0])
    }

    fn check(&self, o: &Scalar) -> Result<()> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(
                self.field.conductor(),
                o.field.conductor(),
            ));
        }
        Ok(())
    }

    /// Checked binary operation; fails on field mismatch or division by zero.
    pub fn arith(&self, o: &Scalar, op: ArithOp) -> Result<Scalar> {
        self.check(o)?;
        Ok(match op {
            ArithOp::Add => self.add_ref(o),
            ArithOp::Sub => self.sub_ref(o),
            ArithOp::Mul => self.mul_ref(o),
            ArithOp::Div => self.mul_ref(&o.inv()?),
        })
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        debug_assert!(self.field == o.field);
        Scalar {
            field: self.field.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        debug_assert!(self.field == o.field);
        Scalar {
            field: self.field.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        debug_assert!(self.field == o.field);
        Scalar {
            field: self.field.clone(),
            c: self.field.0.mul_coeffs(&self.c, &o.c),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            c: self.c.iter().map(Q::neg).collect(),
        }
    }

    /// `self += a * b`
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        let p = a.mul_ref(b);
        for (x, y) in self.c.iter_mut().zip(&p.c) {
            if !y.is_zero() {
                *x = x.add(y);
            }
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[z]`.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.rational(q.inv().unwrap()));
        }
        let phi: Vec<Q> = self.field.0.phi.iter().map(|&c| Q::int(c)).collect();
        let a: Vec<Q> = self.c.to_vec();
        let (g, u) = poly_ext_gcd(&a, &phi);
        // g is a nonzero constant since Φ_N is irreducible
        debug_assert_eq!(poly_deg(&g), Some(0));
        let gi = g[0].inv().unwrap();
        let u: Vec<Q> = u.iter().map(|c| c.mul(&gi)).collect();
        Scalar::from_coefficients(&self.field, &poly_rem(&u, &phi))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut r = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(r)
    }

    /// Image under `z ↦ root` in `F_p`; `None` if a denominator vanishes.
    pub fn mod_p(&self, p: u64, root: u64) -> Option<u64> {
        let mut acc = 0u64;
        let mut rk = 1u64;
        for q in &self.c {
            if !q.is_zero() {
                acc = (acc + crate::modp::mul(q.mod_p(p)?, rk, p)) % p;
            }
            rk = crate::modp::mul(rk, root, p);
        }
        Some(acc)
    }
}

fn poly_deg(p: &[Q]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.len() > 1 && p.last().is_some_and(Q::is_zero) {
        p.pop();
    }
    p
}

fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = b[db].inv().unwrap();
    let mut r = a.to_vec();
    let mut q = vec![Q::ZERO; a.len().max(db + 1) - db];
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].mul(&lead_inv);
        for i in 0..=db {
            r[dr - db + i] = r[dr - db + i].sub(&c.mul(&b[i]));
        }
        q[dr - db] = c;
    }
    (poly_trim(q), poly_trim(r))
}

fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    poly_divmod(a, b).1
}

fn poly_sub_mul(a: &[Q], q: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = a.to_vec();
    let len = (q.len() + b.len()).max(a.len());
    out.resize(len, Q::ZERO);
    for (i, x) in q.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].sub(&x.mul(y));
        }
    }
    poly_trim(out)
}

/// Returns `(g, u)` with `u*a ≡ g (mod b)`.
fn poly_ext_gcd(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let (mut r0, mut r1) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![Q::ONE], vec![Q::ZERO]);
    while poly_deg(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        self.field == o.field && self.c == o.c
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.field.conductor().hash(h);
        self.c.hash(h);
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
    };
}
binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::arith`] for a checked form.
    fn div(self, o: &Scalar) -> Scalar {
        self.mul_ref(&o.inv().expect("division by zero"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Canonical form: powers of `z` ascending, e.g. `-3 + 1/2*z - z^2`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.signum() < 0;
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    field: &'a Field,
    symbols: &'a [(&'a str, Scalar)],
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, field: &'a Field, symbols: &'a [(&'a str, Scalar)]) -> Self {
        Parser {
            s: text.as_bytes(),
            pos: 0,
            field,
            symbols,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn run(mut self) -> Result<Scalar> {
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let v = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut v = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            v = if c == b'+' { v + t } else { v - t };
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut v = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let t = self.unary()?;
            v = if c == b'*' {
                v * t
            } else {
                match t.inv() {
                    Ok(i) => v * i,
                    Err(_) => {
                        self.pos = at;
                        return Err(Error::DivisionByZero);
                    }
                }
            };
        }
        Ok(v)
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let (base, is_z) = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer exponent");
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let n = self.field.conductor() as u64;
        let e: i64 = if is_z {
            // reduce huge exponents of z modulo N without overflow
            let r = digits
                .bytes()
                .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % n);
            r as i64
        } else {
            match digits.parse::<i64>() {
                Ok(e) => e,
                Err(_) => {
                    self.pos = start;
                    return self.err("exponent too large");
                }
            }
        };
        let e = if neg { -e } else { e };
        if is_z {
            return Ok(self.field.zeta_pow(e));
        }
        base.pow(e).map_err(|_| Error::DivisionByZero)
    }

    fn atom(&mut self) -> Result<(Scalar, bool)> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok((v, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let lit = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let q: Q = lit.parse().expect("digits");
                Ok((self.field.rational(q), false))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                if name == "z" {
                    return Ok((self.field.zeta(), true));
                }
                if let Some((_, v)) = self.symbols.iter().find(|(k, _)| *k == name) {
                    return Ok((v.clone(), false));
                }
                self.pos = start;
                self.err(&format!("unknown symbol '{name}'"))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn field_degree_is_totient() {
        for (n, phi) in [(1, 1), (2, 1), (3, 2), (4, 2), (5, 4), (7, 6), (8, 4), (9, 6), (12, 4)] {
            assert_eq!(Field::new(n).unwrap().degree(), phi, "N={n}");
        }
        assert_eq!(Field::new(0).unwrap_err(), Error::ZeroConductor);
    }

    #[test]
    fn parse_examples() {
        let f4 = Field::new(4).unwrap();
        assert_eq!(f4.parse("1/2*z^2 - 3").unwrap(), f4.rational(Q::frac(-7, 2)));
        assert_eq!(f4.parse("z^8").unwrap(), f4.one());
        assert_eq!(f4.parse("z^2").unwrap(), f4.int(-1));
        assert!(matches!(f4.parse("1/(z^2+1)"), Err(Error::DivisionByZero)));
        assert!(matches!(f4.parse("2 +"), Err(Error::Parse { .. })));
        assert!(matches!(f4.parse("w"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn primitive_roots() {
        let f6 = Field::new(6).unwrap();
        let q = f6.primitive_root(3).unwrap();
        assert_eq!(q.pow(3).unwrap(), f6.one());
        assert_ne!(q, f6.one());
        assert_eq!(f6.primitive_root(2).unwrap(), f6.int(-1));
        assert!(matches!(f6.primitive_root(4), Err(Error::NotDivisor { .. })));
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let f = Field::new(5).unwrap();
        let a = f.parse("1 + 2*z - z^3").unwrap();
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, f.one());
    }

    #[test]
    fn display_round_trips() {
        let f = Field::new(5).unwrap();
        for s in ["0", "1", "-7/2", "z", "-z^3", "3 - 1/2*z + z^2 - 4*z^3"] {
            let v = f.parse(s).unwrap();
            assert_eq!(v.to_string(), s);
            assert_eq!(f.parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = Field::new(3).unwrap().one();
        let b = Field::new(4).unwrap().one();
        assert_eq!(a.arith(&b, ArithOp::Add), Err(Error::FieldMismatch(3, 4)));
    }

    #[test]
    fn symbols_extend_grammar() {
        let f = Field::new(6).unwrap();
        let q = f.primitive_root(3).unwrap();
        let v = f.parse_with("2*q^2", &[("q", q.clone())]).unwrap();
        assert_eq!(v, &f.int(2) * &q.pow(2).unwrap());
    }
}
