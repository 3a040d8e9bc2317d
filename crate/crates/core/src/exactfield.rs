//! Exact scalars over the rationals and over prime fields GF(p), p ≥ 5.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("unsupported characteristic {0}: need a prime p >= 5")]
    UnsupportedCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Coefficient field. `Gf(p)` always holds a prime p ≥ 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Gf(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub const Q: Field = Field::Rationals;

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p == 2 || p == 3 {
            return Err(FieldError::UnsupportedCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Gf(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Gf(p) => p,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Gf(_))
    }

    /// Number of elements, if finite.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Gf(p) => Some(p),
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Gf(p) => Scalar::Gf(p, 0),
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Gf(p) => Scalar::Gf(p, n.rem_euclid(p as i64) as u64),
        }
    }

    pub fn frac(self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        self.int(num).try_div(&self.int(den))
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(n.clone())),
            Field::Gf(p) => {
                let r = (n % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Gf(p, r.to_u64().unwrap_or(0))
            }
        }
    }

    /// The i-th element in a fixed enumeration of a finite field.
    pub fn element(self, i: u64) -> Scalar {
        match self {
            Field::Rationals => self.int(i as i64),
            Field::Gf(p) => Scalar::Gf(p, i % p),
        }
    }

    pub fn parse(self, s: &str) -> Result<Scalar, FieldError> {
        let t = s.trim();
        let bad = || FieldError::Parse(s.to_string());
        if t.is_empty() {
            return Err(bad());
        }
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (t, None),
        };
        let parse_int = |x: &str| -> Result<BigInt, FieldError> {
            let body = x.strip_prefix('-').unwrap_or(x);
            if body.is_empty() || !body.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            BigInt::from_str(x).map_err(|_| bad())
        };
        let n = parse_int(num)?;
        match den {
            None => Ok(self.from_bigint(&n)),
            Some(d) => {
                if d.starts_with('-') {
                    return Err(bad());
                }
                let d = parse_int(d)?;
                self.from_bigint(&n).try_div(&self.from_bigint(&d))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Gf(p) => write!(f, "GF({p})"),
        }
    }
}

/// A field element in canonical form: reduced fraction with positive
/// denominator, or a residue in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Gf(u64, u64),
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Gf(p, _) => Field::Gf(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Gf(_, v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Gf(_, v) => *v == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Gf(p, a), Scalar::Gf(_, b)) => Scalar::Gf(*p, (a + b) % p),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Gf(p, a), Scalar::Gf(_, b)) => {
                Scalar::Gf(*p, ((*a as u128 * *b as u128) % *p as u128) as u64)
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(r) => Scalar::Q(r.recip()),
            Scalar::Gf(p, v) => Scalar::Gf(*p, mod_pow(*v, p - 2, *p)),
        })
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(-r),
            Scalar::Gf(p, v) => Scalar::Gf(*p, (p - v) % p),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut r = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        r
    }

    /// Rational value, if over ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::Gf(..) => None,
        }
    }

    /// Canonical text encoding: "a" or "a/b" over ℚ, the residue over GF(p).
    pub fn encode(&self) -> String {
        self.to_string()
    }

    pub fn sign(&self) -> Ordering {
        match self {
            Scalar::Q(r) => {
                if r.is_positive() {
                    Ordering::Greater
                } else if r.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Equal
                }
            }
            Scalar::Gf(_, v) => v.cmp(&0),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Gf(_, v) => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$imp(&rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$imp(rhs).expect("scalar field mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_examples() {
        let q = Field::Q;
        let a = q.frac(1, 2).unwrap();
        let b = q.frac(1, 3).unwrap();
        assert_eq!((&a + &b).to_string(), "5/6");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.int(3).inv().unwrap(), f5.int(2));
        assert_eq!(
            Field::prime(3),
            Err(FieldError::UnsupportedCharacteristic(3))
        );
        assert_eq!(
            Field::prime(2),
            Err(FieldError::UnsupportedCharacteristic(2))
        );
        assert_eq!(Field::prime(9), Err(FieldError::NotPrime(9)));
    }

    #[test]
    fn errors() {
        let q = Field::Q;
        let f7 = Field::prime(7).unwrap();
        assert_eq!(q.zero().inv(), Err(FieldError::DivisionByZero));
        assert!(matches!(
            q.one().try_add(&f7.one()),
            Err(FieldError::FieldMismatch(..))
        ));
    }

    #[test]
    fn parse_and_print() {
        let q = Field::Q;
        assert_eq!(q.parse("-4/6").unwrap().to_string(), "-2/3");
        assert_eq!(q.parse("3/-1").ok(), None);
        assert_eq!(q.parse("7").unwrap().to_string(), "7");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        assert!(q.parse("").is_err());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3");
    }
}
