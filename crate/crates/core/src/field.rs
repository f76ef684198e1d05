//! Exact scalar arithmetic over prime fields `F_p` and the rationals.
//!
//! A [`FieldDesc`] is a small `Copy` descriptor; a [`Scalar`] is a value that
//! only makes sense relative to one. All arithmetic goes through the
//! descriptor so that prime-field residues stay reduced and rationals stay in
//! lowest terms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FieldRepr", into = "FieldRepr")]
pub struct FieldDesc(Kind);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Prime(u32),
    Rationals,
}

/// Wire form of a field descriptor: `{"kind":"Fp","p":2}` or `{"kind":"Q"}`.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum FieldRepr {
    Fp { p: u64 },
    Q,
}

impl TryFrom<FieldRepr> for FieldDesc {
    type Error = Error;

    fn try_from(repr: FieldRepr) -> Result<Self> {
        match repr {
            FieldRepr::Fp { p } => FieldDesc::prime(p),
            FieldRepr::Q => Ok(FieldDesc::rationals()),
        }
    }
}

impl From<FieldDesc> for FieldRepr {
    fn from(field: FieldDesc) -> Self {
        match field.0 {
            Kind::Prime(p) => FieldRepr::Fp { p: p as u64 },
            Kind::Rationals => FieldRepr::Q,
        }
    }
}

/// A field element. Residues are always in `[0, p)`; rationals are always in
/// lowest terms with a positive denominator (guaranteed by `num-rational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Residue(u32),
    Rational(Box<BigRational>),
}

/// The operations accepted by [`FieldDesc::scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Mul,
    Neg,
    Inv,
}

impl FieldDesc {
    /// `F_p`; fails unless `p` is a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldDesc(Kind::Prime(p as u32)))
    }

    pub fn rationals() -> Self {
        FieldDesc(Kind::Rationals)
    }

    /// The modulus for a prime field, `None` for the rationals.
    pub fn modulus(&self) -> Option<u32> {
        match self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Rationals => None,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    /// Number of vectors in `F^dim`, if finite and representable.
    pub fn vector_count(&self, dim: usize) -> Result<u64> {
        let p = self.modulus().ok_or(Error::InfiniteField)? as u64;
        let mut total: u64 = 1;
        for _ in 0..dim {
            total = total.checked_mul(p).ok_or(Error::TooLarge {
                what: format!("F_{p}^{dim}"),
                limit: u64::MAX,
            })?;
        }
        Ok(total)
    }

    pub fn zero(&self) -> Scalar {
        match self.0 {
            Kind::Prime(_) => Scalar::Residue(0),
            Kind::Rationals => Scalar::Rational(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.0 {
            Kind::Prime(_) => Scalar::Residue(1),
            Kind::Rationals => Scalar::Rational(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar::Residue(v.rem_euclid(p as i64) as u32),
            Kind::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(v.into()))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.0 {
            Kind::Prime(p) => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Residue(r.to_u32().expect("residue below modulus"))
            }
            Kind::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(v.clone()))),
        }
    }

    /// Maps a digit in `[0, p)` to the corresponding residue. Used by the
    /// deterministic element enumeration.
    pub(crate) fn digit(&self, d: u64) -> Scalar {
        Scalar::Residue(d as u32)
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Residue(r) => *r == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Residue(r) => *r == 1,
            Scalar::Rational(q) => q.is_one(),
        }
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self.0, x, y) {
            (Kind::Prime(p), Scalar::Residue(a), Scalar::Residue(b)) => {
                Scalar::Residue(((*a as u64 + *b as u64) % p as u64) as u32)
            }
            (Kind::Rationals, Scalar::Rational(a), Scalar::Rational(b)) => {
                Scalar::Rational(Box::new(a.as_ref() + b.as_ref()))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self.0, x, y) {
            (Kind::Prime(p), Scalar::Residue(a), Scalar::Residue(b)) => {
                Scalar::Residue(((*a as u64 * *b as u64) % p as u64) as u32)
            }
            (Kind::Rationals, Scalar::Rational(a), Scalar::Rational(b)) => {
                Scalar::Rational(Box::new(a.as_ref() * b.as_ref()))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// `acc + x * y`, the inner-loop operation of every product.
    #[inline]
    pub fn mul_add(&self, acc: &Scalar, x: &Scalar, y: &Scalar) -> Scalar {
        match (self.0, acc, x, y) {
            (Kind::Prime(p), Scalar::Residue(c), Scalar::Residue(a), Scalar::Residue(b)) => {
                Scalar::Residue(((*c as u64 + *a as u64 * *b as u64) % p as u64) as u32)
            }
            _ => self.add(acc, &self.mul(x, y)),
        }
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match (self.0, x) {
            (Kind::Prime(p), Scalar::Residue(a)) => {
                Scalar::Residue(if *a == 0 { 0 } else { p - a })
            }
            (Kind::Rationals, Scalar::Rational(a)) => Scalar::Rational(Box::new(-a.as_ref())),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, x: &Scalar) -> Result<Scalar> {
        if self.is_zero(x) {
            return Err(Error::InversionOfZero);
        }
        Ok(match (self.0, x) {
            (Kind::Prime(p), Scalar::Residue(a)) => Scalar::Residue(inv_mod(*a, p)),
            (Kind::Rationals, Scalar::Rational(a)) => Scalar::Rational(Box::new(a.recip())),
            _ => return Err(Error::MixedFields),
        })
    }

    /// Checks that `x` is a valid, normalized element of this field.
    pub fn check(&self, x: &Scalar) -> Result<()> {
        match (self.0, x) {
            (Kind::Prime(p), Scalar::Residue(a)) if *a < p => Ok(()),
            (Kind::Rationals, Scalar::Rational(q)) if q.denom().is_positive() => Ok(()),
            _ => Err(Error::MixedFields),
        }
    }

    /// Re-normalizes a scalar. Idempotent on normalized input.
    pub fn normalize(&self, x: &Scalar) -> Result<Scalar> {
        match (self.0, x) {
            (Kind::Prime(p), Scalar::Residue(a)) => Ok(Scalar::Residue(a % p)),
            (Kind::Rationals, Scalar::Rational(q)) => {
                if q.denom().is_zero() {
                    return Err(Error::InversionOfZero);
                }
                Ok(Scalar::Rational(Box::new(BigRational::new(
                    q.numer().clone(),
                    q.denom().clone(),
                ))))
            }
            _ => Err(Error::MixedFields),
        }
    }

    /// Checked single entry point for the four scalar operations.
    pub fn scalar_arith(&self, op: ScalarOp, x: &Scalar, y: Option<&Scalar>) -> Result<Scalar> {
        self.check(x)?;
        if let Some(y) = y {
            self.check(y)?;
        }
        let need = |y: Option<&Scalar>| {
            y.cloned()
                .ok_or_else(|| Error::BadShape("binary operation needs two operands".into()))
        };
        match op {
            ScalarOp::Add => Ok(self.add(x, &need(y)?)),
            ScalarOp::Mul => Ok(self.mul(x, &need(y)?)),
            ScalarOp::Neg => Ok(self.neg(x)),
            ScalarOp::Inv => self.inv(x),
        }
    }

    /// Parses the text form: a (possibly negative) integer or `a/b`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::ParseScalar(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self.0 {
            Kind::Prime(_) => {
                let n = self.from_bigint(&num);
                let d = self.from_bigint(&den);
                let d_inv = self.inv(&d).map_err(|_| bad())?;
                Ok(self.mul(&n, &d_inv))
            }
            Kind::Rationals => Ok(Scalar::Rational(Box::new(BigRational::new(num, den)))),
        }
    }

    /// Text form: residues as decimals, rationals as `a/b` or `a`.
    pub fn format(&self, x: &Scalar) -> String {
        x.to_string()
    }

    /// The integer a scalar represents, when it is integral. Residues are
    /// returned as their representative in `[0, p)`.
    pub fn to_integer(&self, x: &Scalar) -> Option<BigInt> {
        match x {
            Scalar::Residue(r) => Some(BigInt::from(*r)),
            Scalar::Rational(q) => q.is_integer().then(|| q.to_integer()),
        }
    }

    /// Symmetric integer representative, for display of small residues
    /// (`p - 1` prints as `-1`). Rationals are returned unchanged.
    pub fn signed_display(&self, x: &Scalar) -> String {
        match (self.0, x) {
            (Kind::Prime(p), Scalar::Residue(r)) if *r > p / 2 && p > 2 => {
                format!("-{}", p - r)
            }
            _ => x.to_string(),
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Prime(p) => write!(f, "F{p}"),
            Kind::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for FieldDesc {
    type Err = Error;

    /// Accepts `F2`, `F_3`, `GF5`, `Q`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldDesc::rationals());
        }
        let digits = t
            .trim_start_matches("GF")
            .trim_start_matches('F')
            .trim_start_matches('_');
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Usage(format!("unknown field `{s}`")))?;
        FieldDesc::prime(p)
    }
}

/// Scalars serialize as their text form; deserialization needs a field and
/// goes through [`FieldDesc::parse`].
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue(r) => write!(f, "{r}"),
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut old_r, mut r) = (a as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i64) as u32
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; bases 2, 3, 5, 7 are exact below 3.2e9.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7] {
        if n % small == 0 {
            return n == small;
        }
    }
    assert!(n < MAX_PRIME * 2, "primality test only valid below 2^32");
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
