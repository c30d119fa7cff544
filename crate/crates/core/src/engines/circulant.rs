//! Explicit circulant powers.
//!
//! `C_N = Circ_N(1, 1, 0, …)` is `I_N + U_N` with `U_N` the forward shift.
//! The skew twin `C*_N` negates the lone entry below the diagonal. The
//! first entry of the first row of `C_N^m` is `T(N, 0, m)`; the whole
//! first row is `T(N, r, m)` for `r = 0..N`.

use num_bigint::BigInt;

use super::{with_integer_ring, IntegerJob};
use crate::error::{Error, Result};
use crate::ring::{IntegerRing, Ring, RingMatrix};
use crate::sums::Kind;

/// Which circulant to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    pub n: usize,
    pub skew: bool,
}

impl CirculantSpec {
    pub fn new(n: usize, skew: bool) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("circulant dimension must be at least 2, got {n}")));
        }
        Ok(CirculantSpec { n, skew })
    }

    pub fn for_kind(n: usize, kind: Kind) -> Result<Self> {
        Self::new(n, kind == Kind::Alternating)
    }

    /// `U_N` (or `U*_N`): ones on the superdiagonal, `±1` in the lower-left corner.
    pub fn unit<R: Ring>(&self, proto: &R) -> RingMatrix<R> {
        let n = self.n;
        let corner = if self.skew { proto.one_like().neg() } else { proto.one_like() };
        RingMatrix::from_fn(n, |i, j| {
            if j == i + 1 {
                proto.one_like()
            } else if i == n - 1 && j == 0 {
                corner.clone()
            } else {
                proto.zero_like()
            }
        })
        .expect("n >= 2")
    }

    /// `C_N = I_N + U_N` (or the skew version).
    pub fn realize<R: Ring>(&self, proto: &R) -> RingMatrix<R> {
        let id = RingMatrix::identity(self.n, proto).expect("n >= 2");
        id.add(&self.unit(proto)).expect("same shape")
    }
}

struct FirstRow {
    spec: CirculantSpec,
    m: u64,
}

impl IntegerJob for FirstRow {
    type Output = Vec<BigInt>;
    fn run<R: IntegerRing>(&self, proto: &R) -> Vec<BigInt> {
        self.spec.realize(proto).pow(self.m).row(0).iter().map(IntegerRing::lift).collect()
    }
}

/// First row of `C^m`, optionally over `Z/qZ`.
pub fn circulant_first_row(spec: &CirculantSpec, m: u64, modulus: Option<&BigInt>) -> Result<Vec<BigInt>> {
    with_integer_ring(modulus, &FirstRow { spec: *spec, m })
}

/// First row of `C^m` over the integers; entry 0 is `T(N, 0, m)` or `T*(N, 0, m)`.
pub fn circulant_engine(spec: &CirculantSpec, m: u64) -> Vec<BigInt> {
    FirstRow { spec: *spec, m }.run(&BigInt::from(0))
}

/// Checks the structure the circulant representation rests on:
///
/// * `U^k` returns to `I` (or reaches `-I` in the skew case) exactly at `k = N`,
/// * no negative entry shows up in the first row of `U^k` for `k < N`,
/// * the `(0, 0)` entry of `C^k` is 1 for every `k < N`.
pub fn verify_lemma1(n: usize, skew: bool) -> bool {
    let Ok(spec) = CirculantSpec::new(n, skew) else {
        return false;
    };
    let zero = BigInt::from(0);
    let id = RingMatrix::identity(n, &zero).expect("n >= 2");
    let neg_id = id.map(|e| -e);
    let u = spec.unit(&zero);
    let c = spec.realize(&zero);

    let mut u_k = id.clone();
    let mut c_k = id.clone();
    for k in 0..n {
        if k > 0 && (u_k == id || u_k == neg_id) {
            return false;
        }
        if u_k.row(0).iter().any(|e| *e < zero) {
            return false;
        }
        if *c_k.get(0, 0) != BigInt::from(1) {
            return false;
        }
        u_k = u_k.mul(&u).expect("same shape");
        c_k = c_k.mul(&c).expect("same shape");
    }
    u_k == if skew { neg_id } else { id }
}
