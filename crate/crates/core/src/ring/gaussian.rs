use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Ring;

/// Exact element of `Z[i]`; carries the roots of unity of order 1, 2 and 4.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Gaussian { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        Gaussian::new(0, 1)
    }

    /// `i^k` for any integer `k`.
    pub fn unit(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Gaussian::new(1, 0),
            1 => Gaussian::new(0, 1),
            2 => Gaussian::new(-1, 0),
            _ => Gaussian::new(0, -1),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl From<BigInt> for Gaussian {
    fn from(re: BigInt) -> Self {
        Gaussian { re, im: BigInt::zero() }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im < BigInt::zero() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Ring for Gaussian {
    fn zero_like(&self) -> Self {
        Gaussian::default()
    }
    fn one_like(&self) -> Self {
        Gaussian { re: BigInt::one(), im: BigInt::zero() }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Gaussian::new(v, 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Gaussian { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gaussian {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }
    fn is_zero_like(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}
