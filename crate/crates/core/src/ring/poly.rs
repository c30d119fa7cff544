use serde::{Deserialize, Serialize};

use super::Ring;
use crate::error::{Error, Result};

/// The relation `x^N = σ` that closes the quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Wrap {
    /// `x^N = 1`: multiplication by `x` is the forward cyclic shift `U_N`.
    Cyclic,
    /// `x^N = -1`: the skew shift `U*_N`, whose `N`-th power is `-I`.
    Negacyclic,
}

impl Wrap {
    pub fn sigma(self) -> i64 {
        match self {
            Wrap::Cyclic => 1,
            Wrap::Negacyclic => -1,
        }
    }
}

/// Element of `R[x] / (x^N - σ)`, stored as exactly `N` coefficients.
///
/// With `σ = +1` this ring is isomorphic to the `N × N` circulant matrices
/// over `R`, and the coefficient vector is the first row of the matching
/// circulant. `σ = -1` gives the skew-circulants the same way.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientPoly<R> {
    coeffs: Vec<R>,
    wrap: Wrap,
}

impl<R: Ring> QuotientPoly<R> {
    pub fn new(coeffs: Vec<R>, wrap: Wrap) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidParams(format!(
                "quotient ring dimension must be at least 2, got {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !c.compatible(&coeffs[0])) {
            return Err(Error::DimensionMismatch("coefficients from different rings".into()));
        }
        Ok(QuotientPoly { coeffs, wrap })
    }

    /// The multiplicative identity `1`.
    pub fn one(n: usize, wrap: Wrap, proto: &R) -> Result<Self> {
        let mut coeffs = vec![proto.zero_like(); n];
        if let Some(c) = coeffs.first_mut() {
            *c = proto.one_like();
        }
        Self::new(coeffs, wrap)
    }

    /// `1 + x`, the polynomial image of `C_N = I_N + U_N`.
    pub fn one_plus_x(n: usize, wrap: Wrap, proto: &R) -> Result<Self> {
        let mut p = Self::one(n, wrap, proto)?;
        p.coeffs[1] = proto.one_like();
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn wrap(&self) -> Wrap {
        self.wrap
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Product reduced by `x^N = σ` as each partial term is formed.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() || self.wrap != other.wrap {
            return Err(Error::DimensionMismatch(format!(
                "Z[x]/(x^{} - ({})) vs Z[x]/(x^{} - ({}))",
                self.n(),
                self.wrap.sigma(),
                other.n(),
                other.wrap.sigma()
            )));
        }
        if !self.coeffs[0].compatible(&other.coeffs[0]) {
            return Err(Error::DimensionMismatch("coefficient rings differ".into()));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.n();
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_like() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero_like() {
                    continue;
                }
                let term = a.mul(b);
                let k = i + j;
                if k < n {
                    out[k] = out[k].add(&term);
                } else {
                    out[k - n] = match self.wrap {
                        Wrap::Cyclic => out[k - n].add(&term),
                        Wrap::Negacyclic => out[k - n].sub(&term),
                    };
                }
            }
        }
        QuotientPoly { coeffs: out, wrap: self.wrap }
    }

    /// `self^m` by binary square-and-multiply.
    pub fn pow(&self, mut m: u64) -> Self {
        let mut acc = Self::one(self.n(), self.wrap, &self.coeffs[0]).expect("n >= 2 already checked");
        let mut sq = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            m >>= 1;
            if m > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        acc
    }
}
