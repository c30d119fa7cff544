//! Lacunary binomial sums by direct enumeration.
//!
//! `T(N, r, m)` adds the binomial coefficients `C(m, j)` whose index `j`
//! falls in the residue class `r mod N`; `T*(N, r, m)` does the same with
//! the sign alternating from one admitted index to the next. These are the
//! ground truth every other engine is checked against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the two sum families is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// `T(N, r, m)`.
    Plain,
    /// `T*(N, r, m)`.
    #[serde(rename = "star")]
    Alternating,
}

impl Kind {
    pub const ALL: [Kind; 2] = [Kind::Plain, Kind::Alternating];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Plain => "plain",
            Kind::Alternating => "star",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Kind::Plain),
            "star" | "alternating" => Ok(Kind::Alternating),
            other => Err(Error::InvalidParams(format!("unknown kind {other:?} (expected plain or star)"))),
        }
    }
}

/// A query `(N, r, m)` together with the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SumParams {
    n: usize,
    r: usize,
    m: u64,
    kind: Kind,
}

impl SumParams {
    /// Validates `N >= 2` and reduces `r` into `[0, N)`.
    pub fn new(n: usize, r: i64, m: u64, kind: Kind) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("N must be at least 2, got {n}")));
        }
        let r = r.rem_euclid(n as i64) as usize;
        Ok(SumParams { n, r, m, kind })
    }

    pub fn plain(n: usize, r: i64, m: u64) -> Result<Self> {
        Self::new(n, r, m, Kind::Plain)
    }

    pub fn alternating(n: usize, r: i64, m: u64) -> Result<Self> {
        Self::new(n, r, m, Kind::Alternating)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn with_m(self, m: u64) -> Self {
        SumParams { m, ..self }
    }

    pub fn with_r(self, r: i64) -> Self {
        SumParams { r: r.rem_euclid(self.n as i64) as usize, ..self }
    }
}

impl fmt::Display for SumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.kind == Kind::Alternating { "*" } else { "" };
        write!(f, "T{star}({}, {}, {})", self.n, self.r, self.m)
    }
}

/// An evaluated sum, optionally reduced into `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LacunaryValue {
    pub value: BigInt,
    pub params: SumParams,
    pub modulus: Option<BigInt>,
}

impl LacunaryValue {
    pub fn exact(params: SumParams, value: BigInt) -> Self {
        LacunaryValue { value, params, modulus: None }
    }

    /// Reduces an exact value into `[0, modulus)`; `None` leaves it untouched.
    pub fn reduced(params: SumParams, value: BigInt, modulus: Option<&BigInt>) -> Self {
        match modulus {
            Some(q) => LacunaryValue { value: value.mod_floor(q), params, modulus: Some(q.clone()) },
            None => Self::exact(params, value),
        }
    }
}

/// Row `m` of Pascal's triangle by the running product `C(m, j+1) = C(m, j)(m-j)/(j+1)`.
pub fn binomial_row(m: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for j in 0..m {
        c = c * (m - j) / (j + 1);
        row.push(c.clone());
    }
    row
}

fn check_n(n: usize) {
    assert!(n >= 2, "lacunary sums need N >= 2, got {n}");
}

/// `T(N, r, m)`: sum of `C(m, j)` over `j ≡ r (mod N)`. Empty sums are 0.
///
/// # Panics
/// If `n < 2`; use [`SumParams`] to validate untrusted input.
pub fn direct_sum(n: usize, r: usize, m: u64) -> BigInt {
    check_n(n);
    let r = r % n;
    binomial_row(m).into_iter().skip(r).step_by(n).sum()
}

/// `T*(N, r, m)`: as [`direct_sum`] with sign `(-1)^((j - r)/N)`.
pub fn direct_sum_alternating(n: usize, r: usize, m: u64) -> BigInt {
    check_n(n);
    let r = r % n;
    binomial_row(m)
        .into_iter()
        .skip(r)
        .step_by(n)
        .enumerate()
        .fold(BigInt::zero(), |acc, (k, c)| if k % 2 == 0 { acc + c } else { acc - c })
}

/// Direct enumeration for either family.
pub fn direct(params: &SumParams) -> LacunaryValue {
    let value = match params.kind {
        Kind::Plain => direct_sum(params.n, params.r, params.m),
        Kind::Alternating => direct_sum_alternating(params.n, params.r, params.m),
    };
    LacunaryValue::exact(*params, value)
}

/// `2·T(2N, r, m) − T(N, r, m)`, which equals `T*(N, r, m)`.
pub fn star_from_plain(n: usize, r: usize, m: u64) -> BigInt {
    BigInt::from(2) * direct_sum(2 * n, r, m) - direct_sum(n, r, m)
}

/// `T(N, 0, m)` for even `N` as the mean of `T(N/2, 0, m)` and `T*(N/2, 0, m)`.
///
/// The two halves always have the same parity, so the division is exact.
pub fn plain_from_halves(n: usize, m: u64) -> Result<BigInt> {
    if !n.is_multiple_of(2) {
        return Err(Error::Parity { n });
    }
    if n == 2 {
        // N/2 = 1: T(1, 0, m) = 2^m and T*(1, 0, m) = 0^m.
        let zero_pow = if m == 0 { BigInt::one() } else { BigInt::zero() };
        return Ok(((BigInt::one() << m) + zero_pow) >> 1);
    }
    let sum = direct_sum(n / 2, 0, m) + direct_sum_alternating(n / 2, 0, m);
    debug_assert!(sum.is_even());
    Ok(sum / 2)
}
