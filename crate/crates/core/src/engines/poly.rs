//! The quotient-ring engine.
//!
//! Multiplying by `x` in `R[x]/(x^N - 1)` is the cyclic shift `U_N`, so
//! `(1 + x)^m` is the first row of `C_N^m` written as a polynomial, and its
//! coefficient of `x^r` is `T(N, r, m)`. The relation `x^N = -1` gives the
//! skew shift and `T*(N, r, m)` the same way.

use num_bigint::BigInt;

use super::{with_integer_ring, IntegerJob};
use crate::error::Result;
use crate::ring::{IntegerRing, QuotientPoly, Ring, Wrap};
use crate::sums::{Kind, LacunaryValue, SumParams};

pub(crate) fn wrap_for(kind: Kind) -> Wrap {
    match kind {
        Kind::Plain => Wrap::Cyclic,
        Kind::Alternating => Wrap::Negacyclic,
    }
}

/// `(1 + x)^m` in `R[x]/(x^N ∓ 1)`.
pub fn poly_coefficients<R: Ring>(n: usize, kind: Kind, m: u64, proto: &R) -> Result<QuotientPoly<R>> {
    Ok(QuotientPoly::one_plus_x(n, wrap_for(kind), proto)?.pow(m))
}

struct Row {
    n: usize,
    kind: Kind,
    m: u64,
}

impl IntegerJob for Row {
    type Output = Result<Vec<BigInt>>;
    fn run<R: IntegerRing>(&self, proto: &R) -> Self::Output {
        let p = poly_coefficients(self.n, self.kind, self.m, proto)?;
        Ok(p.coeffs().iter().map(IntegerRing::lift).collect())
    }
}

/// All `N` residue classes at once: entry `r` is `T(N, r, m)` (or `T*`).
pub fn poly_row(n: usize, kind: Kind, m: u64, modulus: Option<&BigInt>) -> Result<Vec<BigInt>> {
    with_integer_ring(modulus, &Row { n, kind, m })?
}

/// Coefficient `r` of `(1 + x)^m`, optionally reduced modulo `modulus`.
pub fn poly_engine(params: &SumParams, modulus: Option<&BigInt>) -> Result<LacunaryValue> {
    let row = poly_row(params.n(), params.kind(), params.m(), modulus)?;
    Ok(LacunaryValue { value: row[params.r()].clone(), params: *params, modulus: modulus.cloned() })
}
