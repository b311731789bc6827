use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The base field of every computation: the rationals or a prime field.
///
/// Elements of either field are carried as [`BigRational`]. Over `F_p` an
/// element is always the canonical integer representative in `0..p`, so the
/// same storage type serves both fields and only the arithmetic dispatches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ScalarField {
    #[default]
    Rational,
    Prime(u64),
}

impl ScalarField {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(ScalarField::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            ScalarField::Rational => 0,
            ScalarField::Prime(p) => *p,
        }
    }

    /// Maps a rational number to its canonical representative in this field.
    pub fn normalize(&self, x: &BigRational) -> Result<BigRational> {
        match self {
            ScalarField::Rational => Ok(x.clone()),
            ScalarField::Prime(p) => {
                let num = mod_bigint(x.numer(), *p);
                let den = mod_bigint(x.denom(), *p);
                if den == 0 {
                    return Err(Error::NotRepresentable {
                        value: x.to_string(),
                        field: self.to_string(),
                    });
                }
                Ok(from_u64(mul_mod(num, inv_mod(den, *p), *p)))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> BigRational {
        self.normalize(&BigRational::from_integer(BigInt::from(v)))
            .expect("integers are representable in every prime field")
    }

    pub fn parse(&self, s: &str) -> Result<BigRational> {
        let trimmed = s.trim();
        let value =
            BigRational::from_str(trimmed).map_err(|_| Error::ParseScalar(s.to_string()))?;
        self.normalize(&value)
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            ScalarField::Rational => a + b,
            ScalarField::Prime(p) => from_u64(add_mod(to_u64(a), to_u64(b), *p)),
        }
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            ScalarField::Rational => a - b,
            ScalarField::Prime(p) => from_u64(sub_mod(to_u64(a), to_u64(b), *p)),
        }
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            ScalarField::Rational => a * b,
            ScalarField::Prime(p) => from_u64(mul_mod(to_u64(a), to_u64(b), *p)),
        }
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        match self {
            ScalarField::Rational => -a,
            ScalarField::Prime(p) => from_u64(sub_mod(0, to_u64(a), *p)),
        }
    }

    /// Panics on zero.
    pub fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            ScalarField::Rational => a.recip(),
            ScalarField::Prime(p) => from_u64(inv_mod(to_u64(a), *p)),
        }
    }

    pub fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &BigRational, e: u32) -> BigRational {
        match self {
            ScalarField::Rational => num_traits::pow(a.clone(), e as usize),
            ScalarField::Prime(p) => from_u64(pow_mod(to_u64(a), e as u64, *p)),
        }
    }

    pub fn dot(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        a.iter()
            .zip(b)
            .filter(|(x, y)| !x.is_zero() && !y.is_zero())
            .fold(BigRational::zero(), |acc, (x, y)| {
                self.add(&acc, &self.mul(x, y))
            })
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarField::Rational => write!(f, "rational"),
            ScalarField::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for ScalarField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" | "Q" | "QQ" => Ok(ScalarField::Rational),
            other => {
                let digits = other
                    .strip_prefix("prime:")
                    .ok_or_else(|| Error::ParseScalar(s.to_string()))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::ParseScalar(s.to_string()))?;
                ScalarField::prime(p)
            }
        }
    }
}

impl Serialize for ScalarField {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ScalarField {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn to_u64(x: &BigRational) -> u64 {
    debug_assert!(x.is_integer() && !x.is_negative());
    x.numer().to_u64().expect("canonical prime field element")
}

pub(crate) fn from_u64(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) fn mod_bigint(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((x % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - (b % p) as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `BigRational` from a small integer.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn one() -> BigRational {
    BigRational::one()
}
