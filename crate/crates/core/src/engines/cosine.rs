//! Floating-point evaluators: the cosine form of the multisection and the
//! nine-fold block expression.

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::ToPrimitive;

use super::split::block_split;
use super::{Engine, EngineReport};
use crate::error::{Error, Result};
use crate::ring::{round_quotient, ComplexReal, RootOfUnity, TwoFloat};
use crate::sums::{Kind, LacunaryValue, SumParams};

/// Float results further than this from an integer are rejected.
pub const CONFIDENCE_LIMIT: f64 = 0.25;

/// Largest `m` accepted by [`ramus_cosine`]: `2^m` must stay inside the
/// 53-bit significand the engine is rated for.
pub const COSINE_MAX_M: u64 = 53;

fn real(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

/// `cos(kπ/N)` as the real part of `e^{2πik/2N}`.
fn cos_pi_fraction(k: i64, n: usize) -> TwoFloat {
    RootOfUnity::new(2 * n, k).approx().re
}

/// Rounds `raw / divisor`; the division happens on integers.
fn checked(engine: Engine, params: SumParams, raw: TwoFloat, divisor: u64) -> Result<EngineReport> {
    let (value, distance) = round_quotient(Complex::new(raw, real(0.0)), divisor);
    if distance >= CONFIDENCE_LIMIT {
        return Err(Error::NumericConfidence { distance, limit: CONFIDENCE_LIMIT });
    }
    Ok(EngineReport { engine, value: LacunaryValue::exact(params, value), rounding_distance: Some(distance) })
}

/// `T(N, r, m) = (1/N) Σ_{j<N} (2 cos(jπ/N))^m · cos(j(m − 2r)π/N)` for `m > 0`.
///
/// Works for every residue class `r`. The cosines come from refined roots
/// of unity and the sum is accumulated in double-double arithmetic.
pub fn ramus_cosine(params: &SumParams) -> Result<EngineReport> {
    if params.kind() != Kind::Plain {
        return Err(Error::Unsupported { engine: "cosine".into(), reason: "the alternating family".into() });
    }
    let m = params.m();
    if m == 0 {
        return Err(Error::InvalidParams("the cosine form needs m > 0".into()));
    }
    if m > COSINE_MAX_M {
        return Err(Error::Range { m, max: COSINE_MAX_M });
    }
    let n = params.n();
    let shift = m as i64 - 2 * params.r() as i64;
    let mut total = real(0.0);
    for j in 0..n as i64 {
        let base = real(2.0) * cos_pi_fraction(j, n);
        total += base.powi(m as i32) * cos_pi_fraction(j * shift, n);
    }
    checked(Engine::Cosine, *params, total, n as u64)
}

/// `cos(mπ/3) = ¼·(−1)^⌊(m+1)/3⌋·(3 + (−1)^(m + ⌊(m+1)/3⌋))`, exactly.
pub fn cos_pi_over_3_closed(m: u64) -> Ratio<i64> {
    let f = (m + 1) / 3;
    let outer = if f.is_multiple_of(2) { 1 } else { -1 };
    let inner = if (m + f).is_multiple_of(2) { 1 } else { -1 };
    Ratio::new(outer * (3 + inner), 4)
}

/// `T(9, 0, m)` from the three-block split of `C_9`:
///
/// `(1/3)·(2^m + 2cos(mπ/3))/3 + (2/3)·Re((a + b·ω)^m)`, entry `(0, 0)`,
/// with `ω = e^{2πi/3}`; the cosine is taken from [`cos_pi_over_3_closed`].
pub fn t9_expression(m: u64) -> Result<EngineReport> {
    if m == 0 {
        return Err(Error::InvalidParams("the block expression needs m > 0".into()));
    }
    let split = block_split(9, 3, false)?;
    let to_c = |e: &num_bigint::BigInt| Complex::new(real(e.to_f64().expect("0 or 1")), real(0.0));
    let a = split.a.map(to_c);
    let b = split.b.map(to_c);
    let omega: ComplexReal = RootOfUnity::new(3, 1).approx();
    let rotated = a.add(&b.scale(&omega))?.pow(m);

    // Scaled by 9: 2^m + 2cos(mπ/3) + 6·Re(...); 2cos(mπ/3) is an integer.
    let twice_cos = cos_pi_over_3_closed(m) * 2;
    let two_pow = real(2.0).powi(m as i32);
    let scaled = two_pow + real(*twice_cos.numer() as f64) + real(6.0) * rotated.get(0, 0).re;
    checked(Engine::Split(3), SumParams::plain(9, 0, m)?, scaled, 9)
}
