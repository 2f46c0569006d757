//! Exact scalar arithmetic over ℚ or 𝔽_p.
//!
//! Every scalar is a `BigRational`. Over 𝔽_p the value is always an integer
//! residue in `[0, p)` with denominator 1, so both fields share one storage type
//! and the field decides how results are normalized.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Option<Field> {
        if p >= 2 && is_prime(p) {
            Some(Field::Prime(p))
        } else {
            None
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.reduce(Scalar::from_integer(BigInt::from(v)))
    }

    /// Canonical representative: lowest terms over ℚ, residue in `[0, p)` over 𝔽_p.
    pub fn reduce(self, x: Scalar) -> Scalar {
        match self {
            Field::Rationals => x,
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = x.numer().mod_floor(&pb);
                let d = x.denom().mod_floor(&pb);
                assert!(!d.is_zero(), "denominator divisible by the characteristic");
                let dinv = modinv(d.to_u64().unwrap(), p);
                Scalar::from_integer((n * BigInt::from(dinv)).mod_floor(&pb))
            }
        }
    }

    pub fn is_canonical(self, x: &Scalar) -> bool {
        match self {
            Field::Rationals => true,
            Field::Prime(p) => {
                x.is_integer() && !x.numer().is_negative() && x.numer() < &BigInt::from(p)
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a + b,
            Field::Prime(p) => small(fp(a) + fp(b), p),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a - b,
            Field::Prime(p) => small(fp(a) + p - fp(b), p),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a * b,
            Field::Prime(p) => small(((fp(a) as u128 * fp(b) as u128) % p as u128) as u64, p),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => -a,
            Field::Prime(p) => small(p - fp(a), p),
        }
    }

    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::Prime(p) => Some(small(modinv(fp(a), p), p)),
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Multiply-subtract `a - b*c`, the inner step of elimination.
    pub fn sub_mul(self, a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a - b * c,
            Field::Prime(p) => {
                let bc = ((fp(b) as u128 * fp(c) as u128) % p as u128) as u64;
                small((fp(a) + p - bc) % p, p)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

fn fp(a: &Scalar) -> u64 {
    a.numer().to_u64().expect("non-canonical prime-field scalar")
}

fn small(v: u64, p: u64) -> Scalar {
    Scalar::from_integer(BigInt::from(v % p))
}

fn modinv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    let mut acc: u128 = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Render a scalar as `n` or `n/d`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `n`, `-n` or `n/d` into a canonical scalar of `field`.
pub fn parse_scalar(field: Field, s: &str) -> Option<Scalar> {
    let s = s.trim();
    let v = if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Scalar::new(n, d)
    } else {
        Scalar::from_integer(s.parse().ok()?)
    };
    if let Field::Prime(p) = field {
        if (v.denom() % BigInt::from(p)).is_zero() {
            return None;
        }
    }
    Some(field.reduce(v))
}
