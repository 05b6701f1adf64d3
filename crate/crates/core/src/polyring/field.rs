use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field: a prime field F_p or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Prime { p: u32 },
    Rational,
}

impl Field {
    /// F_p, rejecting non-primes and p ≥ 2^31.
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime { p })
    }

    /// The characteristic, 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime { p } => *p,
            Field::Rational => 0,
        }
    }

    pub(crate) fn modulus(&self) -> u32 {
        self.characteristic()
    }

    pub(crate) fn check_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(*self, *other))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime { p } => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Arithmetic shared by the two coefficient representations so the
/// polynomial kernels can be written once.
pub(crate) trait Coefficient: Clone + PartialEq + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self, p: u32) -> Self;
    fn mul(&self, other: &Self, p: u32) -> Self;
    fn neg(&self, p: u32) -> Self;
}

impl Coefficient for u32 {
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn add(&self, other: &Self, p: u32) -> Self {
        let s = *self as u64 + *other as u64;
        (s % p as u64) as u32
    }
    #[inline]
    fn mul(&self, other: &Self, p: u32) -> Self {
        (*self as u64 * *other as u64 % p as u64) as u32
    }
    #[inline]
    fn neg(&self, p: u32) -> Self {
        if *self == 0 {
            0
        } else {
            p - *self
        }
    }
}

impl Coefficient for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self, _: u32) -> Self {
        self + other
    }
    fn mul(&self, other: &Self, _: u32) -> Self {
        self * other
    }
    fn neg(&self, _: u32) -> Self {
        -self
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// A scalar of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Modular { value: u32, p: u32 },
    Rational(BigRational),
}

impl FieldElement {
    pub fn zero(field: Field) -> FieldElement {
        FieldElement::from_i64(field, 0)
    }

    pub fn one(field: Field) -> FieldElement {
        FieldElement::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, n: i64) -> FieldElement {
        match field {
            Field::Prime { p } => FieldElement::Modular {
                value: n.rem_euclid(p as i64) as u32,
                p,
            },
            Field::Rational => FieldElement::Rational(BigRational::from_integer(n.into())),
        }
    }

    pub fn from_bigint(field: Field, n: &BigInt) -> FieldElement {
        match field {
            Field::Prime { p } => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                FieldElement::Modular {
                    value: r.to_u32().expect("reduced below p"),
                    p,
                }
            }
            Field::Rational => FieldElement::Rational(BigRational::from_integer(n.clone())),
        }
    }

    /// num/den interpreted in the field; errors when den vanishes there.
    pub fn from_fraction(field: Field, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = FieldElement::from_bigint(field, den);
        let inv = d.inv().ok_or_else(|| Error::Argument("zero denominator".into()))?;
        Ok(FieldElement::from_bigint(field, num).mul(&inv))
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElement::Modular { p, .. } => Field::Prime { p: *p },
            FieldElement::Rational(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Modular { value, .. } => *value == 0,
            FieldElement::Rational(q) => Zero::is_zero(q),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Modular { value, .. } => *value == 1,
            FieldElement::Rational(q) => q.is_one(),
        }
    }

    /// Panics on mixed fields; callers validate fields at the boundary.
    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Modular { value: a, p }, FieldElement::Modular { value: b, p: q }) => {
                assert_eq!(p, q, "field mismatch");
                FieldElement::Modular { value: a.add(b, *p), p: *p }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            _ => panic!("field mismatch"),
        }
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Modular { value, p } => FieldElement::Modular { value: value.neg(*p), p: *p },
            FieldElement::Rational(a) => FieldElement::Rational(-a),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Modular { value: a, p }, FieldElement::Modular { value: b, p: q }) => {
                assert_eq!(p, q, "field mismatch");
                FieldElement::Modular { value: Coefficient::mul(a, b, *p), p: *p }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            _ => panic!("field mismatch"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Modular { value, p } => FieldElement::Modular {
                value: mod_pow(*value as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            },
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
        })
    }

    /// True when the printed form needs a leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            FieldElement::Modular { .. } => false,
            FieldElement::Rational(a) => a.is_negative(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_validated() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(2_147_483_647).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn canonical_representatives() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(FieldElement::from_i64(f3, -1).to_string(), "2");
        assert_eq!(FieldElement::from_i64(f3, 7).to_string(), "1");
        let half = FieldElement::from_fraction(Field::Rational, &2.into(), &(-4).into()).unwrap();
        assert_eq!(half.to_string(), "-1/2");
    }

    #[test]
    fn inverses() {
        let f7 = Field::prime(7).unwrap();
        for n in 1..7 {
            let a = FieldElement::from_i64(f7, n);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        assert!(FieldElement::zero(f7).inv().is_none());
    }
}
