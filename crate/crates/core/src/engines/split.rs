//! Block decomposition of the circulant.
//!
//! When `d` divides `N`, cutting `C_N` into a `d × d` grid of square blocks
//! of size `k = N/d` gives a block circulant `Circ_d(a, b, 0, …)`: `a` is
//! `I_k` plus the superdiagonal and `b` holds a single 1 in its lower-left
//! corner. Diagonalising the outer circulant by the `d`-th roots of unity
//! leaves, in block `(0, 0)` of the `m`-th power,
//!
//! ```text
//! (1/d) · Σ_{j<d} (a + b·ω^j)^m ,     ω = e^{2πi/d}.
//! ```
//!
//! For the skew circulant the wrap-around block is `-b` and the sum runs
//! over the odd powers of `e^{2πi/2d}` instead.
//!
//! Roots in `{1, i, -1, -i}` are handled with exact Gaussian integers; the
//! rest go through double-double complex arithmetic and are rounded, with
//! the rounding distance reported back.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::cosine::CONFIDENCE_LIMIT;
use super::{CirculantSpec, Engine, EngineReport};
use crate::error::{Error, Result};
use crate::ring::{round_quotient, ComplexReal, Gaussian, Ring, RingMatrix, RootOfUnity, TwoFloat};
use crate::sums::{direct_sum_alternating, Kind, LacunaryValue, SumParams};

/// The blocks `a`, `b` of `C_N` (or `C*_N`) cut into `d` block rows.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockSplit {
    pub n: usize,
    pub d: usize,
    pub skew: bool,
    /// Diagonal block. For `d = 1` this is the whole circulant.
    pub a: RingMatrix<BigInt>,
    /// Superdiagonal block. For `d = 1` this is zero.
    pub b: RingMatrix<BigInt>,
}

impl BlockSplit {
    pub fn block_dim(&self) -> usize {
        self.n / self.d
    }

    /// The lower-left block of the partition: `b`, negated for the skew circulant.
    pub fn wrap_block(&self) -> RingMatrix<BigInt> {
        if self.skew {
            self.b.map(|e| -e)
        } else {
            self.b.clone()
        }
    }

    /// Puts the blocks back together into the full `N × N` matrix.
    pub fn reassemble(&self) -> RingMatrix<BigInt> {
        if self.d == 1 {
            return self.a.clone();
        }
        let k = self.block_dim();
        let d = self.d;
        let wrap = self.wrap_block();
        RingMatrix::from_fn(self.n, |i, j| {
            let (bi, bj) = (i / k, j / k);
            let (ii, jj) = (i % k, j % k);
            if bi == bj {
                self.a.get(ii, jj).clone()
            } else if bj == bi + 1 {
                self.b.get(ii, jj).clone()
            } else if bi == d - 1 && bj == 0 {
                wrap.get(ii, jj).clone()
            } else {
                BigInt::zero()
            }
        })
        .expect("n >= 1")
    }
}

/// Splits `C_N` (or `C*_N` when `skew`) into `d` block rows.
///
/// `d = N` gives the scalars `a = 1`, `b = 1`; `d = 1` gives `a = C_N`, `b = 0`.
pub fn block_split(n: usize, d: usize, skew: bool) -> Result<BlockSplit> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("N must be at least 2, got {n}")));
    }
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::Divisibility { n, d });
    }
    let zero = BigInt::zero();
    if d == 1 {
        let c = CirculantSpec::new(n, skew)?.realize(&zero);
        return Ok(BlockSplit { n, d, skew, a: c, b: RingMatrix::zeros(n, &zero)? });
    }
    let k = n / d;
    let a = RingMatrix::from_fn(k, |i, j| BigInt::from(u8::from(j == i || j == i + 1)))?;
    let b = RingMatrix::from_fn(k, |i, j| BigInt::from(u8::from(i == k - 1 && j == 0)))?;
    Ok(BlockSplit { n, d, skew, a, b })
}

/// The roots `λ` that diagonalise the outer (skew-)circulant of order `d`.
fn outer_roots(d: usize, kind: Kind) -> Vec<RootOfUnity> {
    match kind {
        Kind::Plain => (0..d).map(|j| RootOfUnity::new(d, j as i64)).collect(),
        Kind::Alternating => (0..d).map(|j| RootOfUnity::new(2 * d, 2 * j as i64 + 1)).collect(),
    }
}

fn to_complex(m: &RingMatrix<BigInt>) -> RingMatrix<ComplexReal> {
    m.map(|e| Complex::new(TwoFloat::from(e.to_f64().expect("small entry")), TwoFloat::from(0.0)))
}

/// `T(N, 0, m)` (or `T*(N, 0, m)`) as `(1/d)·Σ_λ (a + b·λ)^m`, entry `(0, 0)`.
pub fn split_engine(n: usize, d: usize, m: u64, kind: Kind) -> Result<EngineReport> {
    let blocks = block_split(n, d, false)?;
    let params = SumParams::new(n, 0, m, kind)?;
    let engine = Engine::Split(d);
    let roots = outer_roots(d, kind);

    if d == 1 {
        // λ = ±1 with b = 0: the engine is just the circulant power.
        let c = CirculantSpec::for_kind(n, kind)?.realize(&BigInt::zero());
        let v = c.pow(m).get(0, 0).clone();
        return Ok(EngineReport::exact(engine, LacunaryValue::exact(params, v)));
    }

    if let Some(units) = roots.iter().map(|w| w.exact().cloned()).collect::<Option<Vec<Gaussian>>>() {
        let a = blocks.a.map(|e| Gaussian::from(e.clone()));
        let b = blocks.b.map(|e| Gaussian::from(e.clone()));
        let mut total = Gaussian::default();
        for u in &units {
            let base = a.add(&b.scale(u))?;
            total = total.add(base.pow(m).get(0, 0));
        }
        let (q, rem) = total.re.div_rem(&BigInt::from(d));
        assert!(total.is_real() && rem.is_zero(), "root-of-unity average of an integer matrix power");
        return Ok(EngineReport::exact(engine, LacunaryValue::exact(params, q)));
    }

    let a = to_complex(&blocks.a);
    let b = to_complex(&blocks.b);
    let mut total = ComplexReal::new(TwoFloat::from(0.0), TwoFloat::from(0.0));
    for w in &roots {
        let base = a.add(&b.scale(&w.approx()))?;
        total += *base.pow(m).get(0, 0);
    }
    let (value, distance) = round_quotient(total, d as u64);
    if distance >= CONFIDENCE_LIMIT {
        return Err(Error::NumericConfidence { distance, limit: CONFIDENCE_LIMIT });
    }
    Ok(EngineReport { engine, value: LacunaryValue::exact(params, value), rounding_distance: Some(distance) })
}

/// `T*(N, 0, m)` as entry `(0, 0)` of `(a − b)^m` with `(a, b)` the two-block
/// split of `C_{2N}`; `a − b` is exactly `C*_N`.
pub fn skew_block_engine(n: usize, m: u64) -> Result<BigInt> {
    let blocks = block_split(2 * n, 2, false)?;
    Ok(blocks.a.sub(&blocks.b)?.pow(m).get(0, 0).clone())
}

/// One row of the side-by-side comparison of ways to read the two-block
/// formula for `T*(N, 0, m)` with `(a ± b·i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Eq17Probe {
    pub n: usize,
    pub m: u64,
    /// `T*(N, 0, m)` from direct enumeration.
    pub reference: BigInt,
    /// `(label, value)`; `None` when the reading does not apply (odd `N` for
    /// readings that split `C_N` itself).
    pub readings: Vec<(String, Option<BigRational>)>,
}

/// Evaluates `((a + b·i)^e + (a − b·i)^e) / 2`, entry `(0, 0)`, with `(a, b)`
/// the two-block split of `C_K`.
fn gaussian_pair_mean(k: usize, e: u64) -> Result<BigRational> {
    let blocks = block_split(k, 2, false)?;
    let a = blocks.a.map(|x| Gaussian::from(x.clone()));
    let b = blocks.b.map(|x| Gaussian::from(x.clone()));
    let plus = a.add(&b.scale(&Gaussian::i()))?.pow(e);
    let minus = a.sub(&b.scale(&Gaussian::i()))?.pow(e);
    let total = plus.get(0, 0).add(minus.get(0, 0));
    debug_assert!(total.is_real(), "conjugate pair sums to a real number");
    Ok(BigRational::new(total.re, BigInt::from(2)))
}

/// Candidate readings of the two-block `T*` formula, next to the true value.
pub fn eq17_probe(n: usize, m: u64) -> Result<Eq17Probe> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("N must be at least 2, got {n}")));
    }
    let reference = direct_sum_alternating(n, 0, m);
    let even = n.is_multiple_of(2);
    let readings = vec![
        ("C_N blocks, exponent 2m".to_string(), if even { Some(gaussian_pair_mean(n, 2 * m)?) } else { None }),
        ("C_2N blocks, exponent 2m".to_string(), Some(gaussian_pair_mean(2 * n, 2 * m)?)),
        ("C_N blocks, exponent m".to_string(), if even { Some(gaussian_pair_mean(n, m)?) } else { None }),
        ("C_2N blocks, exponent m".to_string(), Some(gaussian_pair_mean(2 * n, m)?)),
    ];
    Ok(Eq17Probe { n, m, reference, readings })
}
