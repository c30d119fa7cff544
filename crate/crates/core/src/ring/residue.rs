use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntegerRing, Ring};
use crate::error::{Error, Result};

/// Residue class modulo an arbitrary-precision modulus, always stored in `[0, modulus)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Residue {
    value: BigInt,
    modulus: Arc<BigInt>,
}

impl Residue {
    pub fn new(value: impl Into<BigInt>, modulus: impl Into<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigInt::from(2) {
            return Err(Error::InvalidParams(format!("modulus {modulus} must be at least 2")));
        }
        Ok(Self::with_shared(value.into(), Arc::new(modulus)))
    }

    fn with_shared(value: BigInt, modulus: Arc<BigInt>) -> Self {
        let value = value.mod_floor(&modulus);
        Residue { value, modulus }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn inverse(&self) -> Result<Self> {
        residue_inverse(self)
    }
}

/// Inverse by the extended Euclidean algorithm.
pub fn residue_inverse(a: &Residue) -> Result<Residue> {
    let egcd = a.value.extended_gcd(&a.modulus);
    if !egcd.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: a.value.clone(),
            modulus: (*a.modulus).clone(),
        });
    }
    Ok(Residue::with_shared(egcd.x, a.modulus.clone()))
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Ring for Residue {
    fn zero_like(&self) -> Self {
        Residue { value: BigInt::zero(), modulus: self.modulus.clone() }
    }
    fn one_like(&self) -> Self {
        Residue::with_shared(BigInt::one(), self.modulus.clone())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Residue::with_shared(BigInt::from(v), self.modulus.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert!(self.compatible(rhs));
        let mut v = &self.value + &rhs.value;
        if v >= *self.modulus {
            v -= &*self.modulus;
        }
        Residue { value: v, modulus: self.modulus.clone() }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert!(self.compatible(rhs));
        let mut v = &self.value - &rhs.value;
        if v.is_negative() {
            v += &*self.modulus;
        }
        Residue { value: v, modulus: self.modulus.clone() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(self.compatible(rhs));
        Residue { value: (&self.value * &rhs.value) % &*self.modulus, modulus: self.modulus.clone() }
    }
    fn neg(&self) -> Self {
        if self.value.is_zero() {
            self.clone()
        } else {
            Residue { value: &*self.modulus - &self.value, modulus: self.modulus.clone() }
        }
    }
    fn is_zero_like(&self) -> bool {
        self.value.is_zero()
    }
    fn compatible(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus
    }
}

impl IntegerRing for Residue {
    fn from_bigint_like(&self, v: &BigInt) -> Self {
        Residue::with_shared(v.clone(), self.modulus.clone())
    }
    fn lift(&self) -> BigInt {
        self.value.clone()
    }
}

/// Residue modulo a machine-word modulus; products go through `u128`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Mod64 {
    value: u64,
    modulus: u64,
}

impl Mod64 {
    pub fn new(value: i128, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidParams(format!("modulus {modulus} must be at least 2")));
        }
        Ok(Mod64 { value: value.rem_euclid(modulus as i128) as u64, modulus })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn inverse(self) -> Result<Self> {
        let egcd = (self.value as i128).extended_gcd(&(self.modulus as i128));
        if egcd.gcd != 1 {
            return Err(Error::NotInvertible {
                value: self.value.into(),
                modulus: self.modulus.into(),
            });
        }
        Mod64::new(egcd.x, self.modulus)
    }

    pub fn pow(self, exp: u64) -> Self {
        Mod64 { value: pow_mod_u64(self.value, exp, self.modulus), modulus: self.modulus }
    }
}

/// `base^exp mod modulus` with 128-bit intermediate products.
pub fn pow_mod_u64(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc = 1u128 % m;
    let mut sq = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq % m;
        }
        sq = sq * sq % m;
        exp >>= 1;
    }
    acc as u64
}

impl Ring for Mod64 {
    fn zero_like(&self) -> Self {
        Mod64 { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        Mod64 { value: 1, modulus: self.modulus }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Mod64 { value: (v as i128).rem_euclid(self.modulus as i128) as u64, modulus: self.modulus }
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert!(self.compatible(rhs));
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Mod64 { value: s as u64, modulus: self.modulus }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert!(self.compatible(rhs));
        let s = (self.value as u128 + self.modulus as u128 - rhs.value as u128) % self.modulus as u128;
        Mod64 { value: s as u64, modulus: self.modulus }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(self.compatible(rhs));
        let p = self.value as u128 * rhs.value as u128 % self.modulus as u128;
        Mod64 { value: p as u64, modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        Mod64 { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
    fn is_zero_like(&self) -> bool {
        self.value == 0
    }
    fn compatible(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl IntegerRing for Mod64 {
    fn from_bigint_like(&self, v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(self.modulus));
        Mod64 { value: r.to_u64().expect("reduced below a u64 modulus"), modulus: self.modulus }
    }
    fn lift(&self) -> BigInt {
        self.value.into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(a: i64, m: i64) -> BigInt {
        Residue::new(a, m).unwrap().inverse().unwrap().value().clone()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inv(6, 7), BigInt::from(6));
        assert_eq!(inv(2, 25), BigInt::from(13));
        assert_eq!(inv(1, 1_000_003), BigInt::one());
    }

    #[test]
    fn non_unit_is_rejected() {
        let err = Residue::new(10, 25).unwrap().inverse().unwrap_err();
        assert!(matches!(err, Error::NotInvertible { .. }));
        assert!(Mod64::new(14, 49).unwrap().inverse().is_err());
    }

    #[test]
    fn negative_values_normalize() {
        let r = Residue::new(-3, 7).unwrap();
        assert_eq!(r.value(), &BigInt::from(4));
        assert_eq!(Mod64::new(-3, 7).unwrap().value(), 4);
        assert!(Residue::new(1, 1).is_err());
    }

    #[test]
    fn inverse_is_identity_on_units_below_100() {
        for p in (2u64..100).filter(|&n| primal_check::miller_rabin(n)) {
            for a in 1..p as i64 {
                let r = Residue::new(a, p as i64).unwrap();
                assert!(r.mul(&r.inverse().unwrap()) == r.one_like());
                let w = Mod64::new(a as i128, p).unwrap();
                assert_eq!(w.mul(&w.inverse().unwrap()).value(), 1);
            }
        }
    }

    #[test]
    fn pow_mod_handles_wide_moduli() {
        let p = 1093u64;
        assert_eq!(pow_mod_u64(2, p - 1, p * p), 1);
        let q = 4_294_967_291u64; // largest prime below 2^32
        assert_eq!(pow_mod_u64(3, q - 1, q), 1);
    }
}
