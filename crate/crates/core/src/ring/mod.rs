//! Arithmetic substrates shared by every engine.
//!
//! Elements carry their own ring context (a residue knows its modulus), so
//! constants are produced from an existing element with [`Ring::zero_like`]
//! and friends rather than from a global type-level zero.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, One, Zero};

mod gaussian;
mod matrix;
mod poly;
mod residue;
mod unity;

pub use gaussian::Gaussian;
pub use matrix::RingMatrix;
pub use poly::{QuotientPoly, Wrap};
pub use residue::{pow_mod_u64, residue_inverse, Mod64, Residue};
pub use twofloat::TwoFloat;
pub use unity::{round_quotient, round_to_integer, ComplexReal, RootOfUnity};

/// A commutative ring element with an embedded context.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero_like(&self) -> bool;

    /// Whether `self` and `other` live in the same ring (same modulus for residues).
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

/// Rings that are quotients of the integers: `Z` itself or `Z/nZ`.
pub trait IntegerRing: Ring {
    fn from_bigint_like(&self, v: &BigInt) -> Self;
    /// Canonical integer representative (residues lift into `[0, modulus)`).
    fn lift(&self) -> BigInt;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero_like(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl IntegerRing for BigInt {
    fn from_bigint_like(&self, v: &BigInt) -> Self {
        v.clone()
    }
    fn lift(&self) -> BigInt {
        self.clone()
    }
}

/// Complex floats: plain `f64` for quick looks, [`TwoFloat`] for the engines.
impl<T> Ring for Complex<T>
where
    T: Float + Debug + Send + Sync,
{
    fn zero_like(&self) -> Self {
        Complex::zero()
    }
    fn one_like(&self) -> Self {
        Complex::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Complex::new(T::from(v).expect("i64 fits a float"), T::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        *self - *rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn is_zero_like(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Square-and-multiply over any ring.
pub fn ring_pow<R: Ring>(base: &R, mut exp: u64) -> R {
    let mut acc = base.one_like();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.mul(&sq);
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.mul(&sq);
        }
    }
    acc
}
