use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field: the rationals or a prime field `F_p` with `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Field of the given characteristic (0 for the rationals).
    pub fn from_characteristic(p: u64) -> Result<Self> {
        if p == 0 {
            return Ok(FieldSpec::Rationals);
        }
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    /// Canonical representative: unchanged over the rationals, the residue in `[0, p)` otherwise.
    pub fn normalize(&self, value: &BigInt) -> BigInt {
        match *self {
            FieldSpec::Rationals => value.clone(),
            FieldSpec::PrimeField(p) => value.mod_floor(&BigInt::from(p)),
        }
    }

    pub(crate) fn residue(p: u64, value: &BigInt) -> u64 {
        value.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        FieldSpec::from_characteristic(p)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// True when `value` is zero in the field.
pub(crate) fn vanishes(field: FieldSpec, value: &BigInt) -> bool {
    match field {
        FieldSpec::Rationals => value.is_zero(),
        FieldSpec::PrimeField(p) => (value.abs() % BigInt::from(p)).is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristics() {
        assert_eq!(FieldSpec::from_characteristic(0).unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::from_characteristic(7).unwrap(), FieldSpec::PrimeField(7));
        assert_eq!(FieldSpec::from_characteristic(9), Err(Error::InvalidPrime(9)));
        assert_eq!(FieldSpec::from_characteristic(1), Err(Error::InvalidPrime(1)));
        assert!(FieldSpec::from_characteristic(4294967291).is_ok());
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(inv_mod(3, 7), 5);
        assert_eq!(pow_mod(2, 10, 1000), 24);
        let f = FieldSpec::PrimeField(5);
        assert_eq!(f.normalize(&BigInt::from(-3)), BigInt::from(2));
        assert!(vanishes(f, &BigInt::from(-10)));
    }
}
