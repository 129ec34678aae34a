//! Exact scalar fields: prime fields `F_p` and the rationals.
//!
//! Elements are always kept in canonical form (residues in `[0, p)`, reduced
//! fractions), so structural equality is field equality.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt::Debug;
use core::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Runtime descriptor of a field, as written in documents (`"Q"`, `"F5"`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

impl FieldKind {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldKind::Rationals);
        }
        let digits = s
            .strip_prefix('F')
            .ok_or_else(|| Error::Parse(format!("unknown field descriptor `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad field modulus in `{s}`")))?;
        PrimeField::new(p)?;
        Ok(FieldKind::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
        }
    }
}

impl core::fmt::Display for FieldKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldKind::Rationals => f.write_str("Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field. Operations take the field as context because the
/// modulus of a prime field is a runtime value.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Ord + Hash + Send + Sync;

    fn kind(&self) -> FieldKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Number of elements, `None` for infinite fields.
    fn size(&self) -> Option<u64>;
    /// The `index`-th element in the fixed enumeration order of a finite
    /// field (`0, 1, ..., p-1`).
    fn element(&self, index: u64) -> Self::Elem;
    /// Inverse of [`Field::element`]; `None` for infinite fields.
    fn element_index(&self, a: &Self::Elem) -> Option<u64>;

    /// Canonical string form (`"4"`, `"-3/7"`).
    fn format(&self, a: &Self::Elem) -> String;
    /// Parses an integer or a fraction `n/d`.
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    /// A random element; rationals are drawn from small integers and halves.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn characteristic(&self) -> u64 {
        self.kind().characteristic()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn mul_int(&self, n: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_i64(n), a)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    /// Whether the integer `n` is invertible in the field.
    fn int_is_unit(&self, n: i64) -> bool {
        !self.is_zero(&self.from_i64(n))
    }

    fn require_finite(&self, operation: &'static str) -> Result<u64> {
        self.size().ok_or(Error::InfiniteField(operation))
    }
}

/// The prime field `F_p`, `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let mut r = n % &m;
        if r.is_negative() {
            r += &m;
        }
        r.to_string().parse().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn size(&self) -> Option<u64> {
        Some(self.p)
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
    fn element_index(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let q = parse_rational(s)?;
        let num = self.reduce_big(q.numer());
        let den = self.reduce_big(q.denom());
        self.div(&num, &den)
            .map_err(|_| Error::Parse(format!("`{s}` has a denominator divisible by {}", self.p)))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// The rationals with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not an integer or fraction"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(BigRational::new(n, d))
}

impl Field for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> FieldKind {
        FieldKind::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn element(&self, index: u64) -> BigRational {
        self.from_i64(index as i64)
    }
    fn element_index(&self, _a: &BigRational) -> Option<u64> {
        None
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let n: i64 = rng.gen_range(-3..=3);
        let d: i64 = if rng.gen_bool(0.2) { 2 } else { 1 };
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_exhaustive_small_primes() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let k = PrimeField::new(p).unwrap();
            for a in 1..p {
                let inv = k.inv(&a).unwrap();
                assert_eq!(k.mul(&a, &inv), 1, "p={p} a={a}");
            }
            assert!(k.inv(&0).is_none());
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(FieldKind::parse("F4").is_err());
        assert_eq!(FieldKind::parse("F7").unwrap(), FieldKind::Prime(7));
        assert_eq!(FieldKind::parse("Q").unwrap(), FieldKind::Rationals);
    }

    #[test]
    fn parse_and_format() {
        let k = PrimeField::new(5).unwrap();
        assert_eq!(k.parse("-1").unwrap(), 4);
        assert_eq!(k.parse("1/2").unwrap(), 3);
        assert!(k.parse("1/5").is_err());
        let q = Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.format(&q.parse("8/4").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
    }

    #[test]
    fn rational_field_axioms_on_samples() {
        let q = Rationals;
        let vals = ["3/7", "-2", "5/3", "1/11"];
        for a in vals {
            let a = q.parse(a).unwrap();
            let inv = q.inv(&a).unwrap();
            assert!(q.is_one(&q.mul(&a, &inv)));
            assert!(q.is_zero(&q.add(&a, &q.neg(&a))));
        }
    }
}
