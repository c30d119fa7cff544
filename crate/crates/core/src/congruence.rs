//! Congruences modulo `p` and `p²` tying the lacunary sums at `m = p` to
//! harmonic-type sums and Fermat quotients.
//!
//! All arithmetic here runs on machine words: [`PrimeContext`] restricts
//! `p < 2^32` so that `p²` fits in a `u64` and products fit in a `u128`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::engines::poly_row;
use crate::error::{Error, Result};
use crate::ring::{pow_mod_u64, Mod64};
use crate::sums::Kind;

/// Primes up to this size get a full table of inverses mod `p` at construction.
const INVERSE_TABLE_LIMIT: u64 = 1 << 20;

/// The `N` values of the first-case criterion: `2..=23` and even `24..=46`.
pub const CRITERION_NS: [usize; 34] = [
    2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26, 28, 30, 32, 34, 36, 38,
    40, 42, 44, 46,
];

/// A verified prime `3 <= p < 2^32`, with `p²` and (for small `p`) a table
/// of inverses mod `p`. Immutable once built.
#[derive(Clone, Debug)]
pub struct PrimeContext {
    p: u64,
    p2: u64,
    inverses: Option<Vec<u64>>,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !primal_check::miller_rabin(p) {
            return Err(Error::NotPrime(p));
        }
        let inverses = (p <= INVERSE_TABLE_LIMIT).then(|| {
            // inv[j] = -(p / j) * inv[p % j]
            let mut inv = vec![0u64, 1];
            for j in 2..p {
                let v = (p - p / j) * inv[(p % j) as usize] % p;
                inv.push(v);
            }
            inv
        });
        Ok(PrimeContext { p, p2: p * p, inverses })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn p_squared(&self) -> u64 {
        self.p2
    }

    /// `j⁻¹ mod p`. Fails for `j ≡ 0`.
    pub fn inv_mod_p(&self, j: u64) -> Result<u64> {
        let j = j % self.p;
        if j == 0 {
            return Err(Error::NotInvertible { value: j.into(), modulus: self.p.into() });
        }
        Ok(match &self.inverses {
            Some(t) => t[j as usize],
            None => pow_mod_u64(j, self.p - 2, self.p),
        })
    }

    /// `j⁻¹ mod p²`. Fails when `p | j`.
    pub fn inv_mod_p2(&self, j: u64) -> Result<u64> {
        Ok(Mod64::new(j as i128, self.p2)?.inverse()?.value())
    }
}

/// Primes in `lo..hi`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(2)..hi).filter(|&n| primal_check::miller_rabin(n))
}

/// A reciprocal sum reduced mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicResidue {
    pub value: u64,
    pub k: usize,
    pub n: usize,
    pub alternating: bool,
}

/// Bounds `⌊kp/N⌋ + 1 ..= ⌊(k+1)p/N⌋` of block `k`.
fn block(ctx: &PrimeContext, k: usize, n: usize) -> Result<(u64, u64)> {
    if n < 1 || k >= n {
        return Err(Error::InvalidParams(format!("need 0 <= k < N, got k = {k}, N = {n}")));
    }
    let lo = k as u64 * ctx.p / n as u64 + 1;
    let hi = (k as u64 + 1) * ctx.p / n as u64;
    if lo > hi {
        return Err(Error::EmptyRange { k, n, p: ctx.p });
    }
    Ok((lo, hi))
}

/// `s(k, N) = Σ 1/j` (or `Σ (−1)^j/j`) over block `k`, skipping `j = p`.
pub fn lerch_sum(ctx: &PrimeContext, k: usize, n: usize, alternating: bool) -> Result<HarmonicResidue> {
    let (lo, hi) = block(ctx, k, n)?;
    let p = ctx.p;
    let mut acc = 0u64;
    for j in (lo..=hi).filter(|&j| j != p) {
        let inv = ctx.inv_mod_p(j)?;
        let term = if alternating && j % 2 == 1 { (p - inv) % p } else { inv };
        acc = (acc + term) % p;
    }
    Ok(HarmonicResidue { value: acc, k, n, alternating })
}

/// `H_⌊p/N⌋ mod p`.
pub fn harmonic_floor(ctx: &PrimeContext, n: usize) -> Result<HarmonicResidue> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("N must be at least 2, got {n}")));
    }
    lerch_sum(ctx, 0, n, false)
}

/// `(base^(p−1) − 1)/p mod p`.
pub fn fermat_quotient(ctx: &PrimeContext, base: u64) -> Result<u64> {
    if base.is_multiple_of(ctx.p) {
        return Err(Error::BaseDivisibleByP { base, p: ctx.p });
    }
    let x = pow_mod_u64(base % ctx.p2, ctx.p - 1, ctx.p2);
    // x ≡ 1 (mod p), so x − 1 is an exact multiple of p in [0, p²).
    Ok((x + ctx.p2 - 1) % ctx.p2 / ctx.p)
}

/// `T(N, 0, p)` or `T*(N, 0, p)` reduced mod `p²`, via the quotient ring.
pub fn sum_mod_p2(n: usize, kind: Kind, ctx: &PrimeContext) -> Result<u64> {
    let row = poly_row(n, kind, ctx.p, Some(&BigInt::from(ctx.p2)))?;
    Ok(u64::try_from(&row[0]).expect("reduced below p²"))
}

/// `N(1 − t)/p mod p` for `t = T(N, 0, p) mod p²`; fails if `p` does not
/// divide the numerator.
fn scaled_quotient(ctx: &PrimeContext, n: usize, t: u64, what: &str) -> Result<u64> {
    let p2 = ctx.p2 as u128;
    let one_minus = (1 + p2 - t as u128) % p2;
    let numer = (n as u128 % p2) * one_minus % p2;
    if !numer.is_multiple_of(ctx.p as u128) {
        return Err(Error::NotDivisible { what: what.into(), value: BigInt::from(numer), p: ctx.p });
    }
    Ok((numer / ctx.p as u128) as u64 % ctx.p)
}

fn negate(ctx: &PrimeContext, v: u64) -> u64 {
    (ctx.p - v) % ctx.p
}

/// `N(1 − T(N, 0, p))/p ≡ s(0, N)` for even `N`, `≡ s*(0, N) ≡ −s(1, 2N)` for odd `N`.
pub fn sun_plain_check(ctx: &PrimeContext, n: usize) -> Result<bool> {
    let t = sum_mod_p2(n, Kind::Plain, ctx)?;
    let lhs = scaled_quotient(ctx, n, t, "N(1 - T(N, 0, p))")?;
    if n.is_multiple_of(2) {
        Ok(lhs == lerch_sum(ctx, 0, n, false)?.value)
    } else {
        let star = lerch_sum(ctx, 0, n, true)?.value;
        let second = negate(ctx, lerch_sum(ctx, 1, 2 * n, false)?.value);
        Ok(lhs == star && lhs == second)
    }
}

/// `N(1 − T*(N, 0, p))/p ≡ s(0, N)` for odd `N`, `≡ s*(0, N)` for even `N`.
pub fn sun_star_check(ctx: &PrimeContext, n: usize) -> Result<bool> {
    let t = sum_mod_p2(n, Kind::Alternating, ctx)?;
    let lhs = scaled_quotient(ctx, n, t, "N(1 - T*(N, 0, p))")?;
    Ok(lhs == lerch_sum(ctx, 0, n, n.is_multiple_of(2))?.value)
}

/// `s(0, 2N) ≡ s(0, N) + s*(0, N) (mod p)`.
pub fn supplement_check(ctx: &PrimeContext, n: usize) -> Result<bool> {
    let lhs = lerch_sum(ctx, 0, 2 * n, false)?.value;
    let rhs = (lerch_sum(ctx, 0, n, false)?.value + lerch_sum(ctx, 0, n, true)?.value) % ctx.p;
    Ok(lhs == rhs)
}

/// `C(p − 1, h) ≡ (−1)^h (1 − p·H_h) (mod p²)` with `h = ⌊jp/N⌋`.
///
/// Both sides are computed mod `p²`: the binomial as `Π (p − i)/i` and
/// `H_h` from inverses mod `p²`.
pub fn lehmer_check(ctx: &PrimeContext, n: usize, j: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidParams("N must be positive".into()));
    }
    let h = j as u64 * ctx.p / n as u64;
    if h < 1 {
        return Err(Error::EmptyRange { k: j, n, p: ctx.p });
    }
    if h > ctx.p - 1 {
        return Err(Error::InvalidParams(format!("floor(jp/N) = {h} must lie in 1..=p-1 (p = {})", ctx.p)));
    }
    let q = ctx.p2;
    let binom = binomial_mod_p2(ctx, h)?;
    let mut harmonic = 0u64;
    for i in 1..=h {
        harmonic = (harmonic + ctx.inv_mod_p2(i)?) % q;
    }
    let mut rhs = (1 + q - (ctx.p as u128 * harmonic as u128 % q as u128) as u64) % q;
    if h % 2 == 1 {
        rhs = (q - rhs) % q;
    }
    Ok(binom == rhs)
}

/// `C(p − 1, h) mod p²` as `Π_{i<=h} (p − i)/i`.
fn binomial_mod_p2(ctx: &PrimeContext, h: u64) -> Result<u64> {
    let q = ctx.p2 as u128;
    let mut acc = 1u128;
    for i in 1..=h {
        acc = acc * (ctx.p - i) as u128 % q * ctx.inv_mod_p2(i)? as u128 % q;
    }
    Ok(acc as u64)
}

/// Outcome of the first-case criterion scan at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionEntry {
    pub n: usize,
    /// `T(N, 0, p) mod p²`.
    pub residue_mod_p2: u64,
    /// `(T(N, 0, p) − 1)/p mod p`.
    pub quotient: u64,
    pub one_mod_p2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub p: u64,
    pub entries: Vec<CriterionEntry>,
    /// Values of `N` not scanned because `N >= p` (some block would be empty).
    pub skipped: Vec<usize>,
    /// `N` with `T(N, 0, p) ≡ 1 (mod p²)`.
    pub passing: Vec<usize>,
    /// Every `N` of the criterion was scanned and all of them pass.
    pub flt_first_case_obstruction_met: bool,
}

/// Checks `T(N, 0, p) ≡ 1 (mod p²)` for each `N` in [`CRITERION_NS`].
///
/// Panics if some `T(N, 0, p) ≢ 1 (mod p)`: that cannot happen for `N < p`
/// and would mean an engine bug.
pub fn flt_criterion_scan(ctx: &PrimeContext) -> Result<CriterionReport> {
    let p = ctx.p;
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for &n in CRITERION_NS.iter() {
        if n as u64 >= p {
            skipped.push(n);
            continue;
        }
        let t = sum_mod_p2(n, Kind::Plain, ctx)?;
        assert_eq!(t % p, 1, "T({n}, 0, {p}) is not 1 mod p");
        let quotient = (t + ctx.p2 - 1) % ctx.p2 / p;
        entries.push(CriterionEntry { n, residue_mod_p2: t, quotient, one_mod_p2: t == 1 });
    }
    let passing: Vec<usize> = entries.iter().filter(|e| e.one_mod_p2).map(|e| e.n).collect();
    let met = skipped.is_empty() && passing.len() == entries.len();
    Ok(CriterionReport { p, entries, skipped, passing, flt_first_case_obstruction_met: met })
}
