//! Rational numbers with an inline `i64` fast path.
//!
//! Values that fit in a reduced `i64` fraction stay inline; anything larger
//! spills into a boxed [`malachite_q::Rational`].

use malachite_nz::natural::Natural;
use malachite_q::Rational;
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

#[derive(Clone)]
pub enum Q {
    /// numerator, denominator; `den > 0`, `gcd(num, den) == 1`
    Small(i64, i64),
    Big(Box<Rational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

impl Q {
    pub const ZERO: Q = Q::Small(0, 1);
    pub const ONE: Q = Q::Small(1, 1);

    pub fn int(n: i64) -> Q {
        Q::Small(n, 1)
    }

    /// `n / d`; panics when `d == 0`.
    pub fn frac(n: i64, d: i64) -> Q {
        assert!(d != 0, "zero denominator");
        Q::from_i128(n as i128, d as i128)
    }

    fn from_i128(n: i128, d: i128) -> Q {
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        if n == 0 {
            return Q::ZERO;
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Q::Small(a, b),
            _ => Q::Big(Box::new(
                Rational::from_signeds(n, 1i128) / Rational::from_signeds(d, 1i128),
            )),
        }
    }

    fn from_big(r: Rational) -> Q {
        let neg = r < 0u32;
        let (num, den) = (r.numerator_ref(), r.denominator_ref());
        if let (Ok(a), Ok(b)) = (u64::try_from(num), u64::try_from(den)) {
            if a <= i64::MAX as u64 && b <= i64::MAX as u64 {
                let a = a as i64;
                return Q::Small(if neg { -a } else { a }, b as i64);
            }
        }
        Q::Big(Box::new(r))
    }

    pub fn to_rational(&self) -> Rational {
        match self {
            Q::Small(n, d) => Rational::from_signeds(*n, *d),
            Q::Big(r) => (**r).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Q::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::Small(_, d) => *d == 1,
            Q::Big(r) => *r.denominator_ref() == 1u32,
        }
    }

    pub fn add(&self, o: &Q) -> Q {
        match (self, o) {
            (Q::Small(a, 1), Q::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) => Q::Small(s, 1),
                None => Q::from_i128(*a as i128 + *c as i128, 1),
            },
            (Q::Small(a, b), Q::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Q::from_i128(a * d + c * b, b * d)
            }
            _ => Q::from_big(self.to_rational() + o.to_rational()),
        }
    }

    pub fn neg(&self) -> Q {
        match self {
            Q::Small(a, b) if *a != i64::MIN => Q::Small(-a, *b),
            _ => Q::from_big(-self.to_rational()),
        }
    }

    pub fn sub(&self, o: &Q) -> Q {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Q) -> Q {
        match (self, o) {
            (Q::Small(0, _), _) | (_, Q::Small(0, _)) => Q::ZERO,
            (Q::Small(a, 1), Q::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) => Q::Small(p, 1),
                None => Q::from_i128(*a as i128 * *c as i128, 1),
            },
            (Q::Small(a, b), Q::Small(c, d)) => {
                let g1 = gcd_i64(*a, *d);
                let g2 = gcd_i64(*c, *b);
                let n = (*a / g1) as i128 * (*c / g2) as i128;
                let m = (*b / g2) as i128 * (*d / g1) as i128;
                match (i64::try_from(n), i64::try_from(m)) {
                    (Ok(n), Ok(m)) => Q::Small(n, m),
                    _ => Q::from_i128(n, m),
                }
            }
            _ => Q::from_big(self.to_rational() * o.to_rational()),
        }
    }

    pub fn mul_i64(&self, k: i64) -> Q {
        match k {
            0 => Q::ZERO,
            1 => self.clone(),
            -1 => self.neg(),
            _ => self.mul(&Q::int(k)),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Q> {
        match self {
            Q::Small(0, _) => None,
            Q::Small(a, b) => Some(Q::from_i128(*b as i128, *a as i128)),
            Q::Big(r) => Some(Q::from_big(Rational::from(1u32) / (**r).clone())),
        }
    }

    pub fn div(&self, o: &Q) -> Option<Q> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::Small(a, _) => a.signum() as i32,
            Q::Big(r) => match (**r).partial_cmp(&0u32) {
                Some(Ordering::Less) => -1,
                Some(Ordering::Greater) => 1,
                _ => 0,
            },
        }
    }

    pub fn abs(&self) -> Q {
        if self.signum() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Image in `F_p`, or `None` when `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let (num, den, neg) = match self {
            Q::Small(a, b) => (
                a.unsigned_abs() % p,
                (*b as u64) % p,
                *a < 0,
            ),
            Q::Big(r) => {
                let pn = Natural::from(p);
                let n = u64::try_from(&(r.numerator_ref() % &pn)).ok()?;
                let d = u64::try_from(&(r.denominator_ref() % &pn)).ok()?;
                (n, d, self.signum() < 0)
            }
        };
        if den == 0 {
            return None;
        }
        let v = crate::modp::mul(num, crate::modp::inv(den, p), p);
        Some(if neg && v != 0 { p - v } else { v })
    }
}

impl PartialEq for Q {
    fn eq(&self, o: &Q) -> bool {
        match (self, o) {
            (Q::Small(a, b), Q::Small(c, d)) => a == c && b == d,
            (Q::Big(a), Q::Big(b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for Q {}

impl Hash for Q {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match self {
            Q::Small(a, b) => {
                0u8.hash(h);
                a.hash(h);
                b.hash(h);
            }
            Q::Big(r) => {
                1u8.hash(h);
                r.to_string().hash(h);
            }
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(a, 1) => write!(f, "{a}"),
            Q::Small(a, b) => write!(f, "{a}/{b}"),
            Q::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses an unsigned decimal integer literal.
impl FromStr for Q {
    type Err = ();
    fn from_str(s: &str) -> Result<Q, ()> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(());
        }
        match s.parse::<i64>() {
            Ok(v) => Ok(Q::int(v)),
            Err(_) => Rational::from_str(s).map(Q::from_big).map_err(|_| ()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        assert_eq!(Q::frac(2, 4), Q::frac(1, 2));
        assert_eq!(Q::frac(1, -3), Q::frac(-1, 3));
        assert_eq!(Q::frac(1, 2).add(&Q::frac(1, 3)), Q::frac(5, 6));
        assert_eq!(Q::frac(2, 3).mul(&Q::frac(3, 4)), Q::frac(1, 2));
        assert!(Q::frac(1, 2).sub(&Q::frac(1, 2)).is_zero());
    }

    #[test]
    fn overflow_spills_and_returns() {
        let big = Q::int(i64::MAX).mul(&Q::int(i64::MAX));
        assert!(matches!(big, Q::Big(_)));
        let back = big.div(&Q::int(i64::MAX)).unwrap();
        assert_eq!(back, Q::int(i64::MAX));
        assert!(matches!(back, Q::Small(..)));
    }

    #[test]
    fn parse_huge_literal() {
        let q: Q = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(q.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn reduction_mod_p() {
        let p = 101;
        let h = Q::frac(-1, 2).mod_p(p).unwrap();
        assert_eq!((h * 2) % p, p - 1);
        assert_eq!(Q::frac(1, 101).mod_p(p), None);
    }
}
