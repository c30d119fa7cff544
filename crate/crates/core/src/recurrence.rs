//! Linear recurrences for the two families.
//!
//! The eigenvalues of `C_N` are `1 + ω^j`, so its characteristic
//! polynomial is `(x − 1)^N − 1`; for `C*_N` it is `(x − 1)^N + 1`. Both
//! sequences therefore satisfy the recurrence read off those coefficients,
//! started from `N` ones.
//!
//! Coefficients are stored in descending order `[c_N, c_{N−1}, …, c_0]`
//! for `c_N·x_n + c_{N−1}·x_{n−1} + … + c_0·x_{n−N} = 0`, with trailing
//! zeros kept.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::engines::{with_integer_ring, IntegerJob};
use crate::error::{Error, Result};
use crate::ring::IntegerRing;
use crate::sums::{binomial_row, direct_sum, Kind};

/// Where a recurrence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Plain,
    Star,
    Custom,
}

impl From<Kind> for Family {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Plain => Family::Plain,
            Kind::Alternating => Family::Star,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    coeffs: Vec<BigInt>,
    seeds: Vec<BigInt>,
    family: Family,
}

impl RecurrenceSpec {
    /// Requires a monic coefficient vector and at least [`order`](Self::order) seeds.
    pub fn new(coeffs: Vec<BigInt>, seeds: Vec<BigInt>, family: Family) -> Result<Self> {
        if coeffs.first().is_none_or(|c| !c.is_one()) {
            return Err(Error::InvalidParams("recurrence must be monic (leading coefficient 1)".into()));
        }
        let spec = RecurrenceSpec { coeffs, seeds, family };
        if spec.seeds.len() < spec.order() {
            return Err(Error::InsufficientSeeds { have: spec.seeds.len(), need: spec.order() });
        }
        Ok(spec)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn seeds(&self) -> &[BigInt] {
        &self.seeds
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of earlier terms the relation reaches back: the coefficient
    /// count minus one, minus trailing zeros.
    pub fn order(&self) -> usize {
        let trailing = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.len().saturating_sub(1 + trailing)
    }
}

/// Coefficients of `(x − 1)^N − 1` (plain) or `(x − 1)^N + 1` (star), with `N` ones as seeds.
pub fn recurrence_coeffs(n: usize, kind: Kind) -> Result<RecurrenceSpec> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("N must be at least 2, got {n}")));
    }
    let mut coeffs: Vec<BigInt> = binomial_row(n as u64)
        .into_iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 0 { c } else { -c })
        .collect();
    let last = coeffs.last_mut().expect("N + 1 entries");
    match kind {
        Kind::Plain => *last -= 1,
        Kind::Alternating => *last += 1,
    }
    RecurrenceSpec::new(coeffs, vec![BigInt::one(); n], kind.into())
}

struct Forward<'a> {
    spec: &'a RecurrenceSpec,
    m: u64,
}

impl IntegerJob for Forward<'_> {
    type Output = BigInt;
    fn run<R: IntegerRing>(&self, proto: &R) -> BigInt {
        let spec = self.spec;
        let m = self.m as usize;
        if m < spec.seeds.len() {
            return proto.from_bigint_like(&spec.seeds[m]).lift();
        }
        let order = spec.order();
        let taps: Vec<R> = spec.coeffs[1..=order].iter().map(|c| proto.from_bigint_like(&(-c))).collect();
        // Sliding window of the last `order` terms, oldest first.
        let start = spec.seeds.len() - order;
        let mut window: Vec<R> = spec.seeds[start..].iter().map(|s| proto.from_bigint_like(s)).collect();
        for _ in spec.seeds.len()..=m {
            let mut next = proto.zero_like();
            for (k, tap) in taps.iter().enumerate() {
                next = next.add(&tap.mul(&window[order - 1 - k]));
            }
            if order > 0 {
                window.rotate_left(1);
                window[order - 1] = next.clone();
            }
            if order == 0 {
                return next.lift();
            }
        }
        window[order - 1].lift()
    }
}

/// The `m`-th term of the sequence defined by `spec`.
pub fn recur_eval(spec: &RecurrenceSpec, m: u64) -> BigInt {
    Forward { spec, m }.run(&BigInt::zero())
}

/// As [`recur_eval`], reduced into `[0, modulus)` when a modulus is given.
pub fn recur_eval_mod(spec: &RecurrenceSpec, m: u64, modulus: Option<&BigInt>) -> Result<BigInt> {
    with_integer_ring(modulus, &Forward { spec, m })
}

/// Minimal linear recurrence of a finite sequence, over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct FittedRecurrence {
    /// `[1, c_1, …, c_L]` for `x_n + c_1·x_{n−1} + … + c_L·x_{n−L} = 0`, valid for `n >= L`.
    pub coeffs: Vec<BigRational>,
    /// Linear complexity `L`: the shortest recurrence that generates every term.
    pub order: usize,
    /// Index of the last input term the fit was checked against.
    pub valid_up_to: usize,
}

impl FittedRecurrence {
    /// Degree of the recurrence once trailing zero coefficients are dropped.
    /// Smaller than [`order`](Self::order) when the sequence has an initial
    /// transient (a zero eigenvalue).
    pub fn degree(&self) -> usize {
        let trailing = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.len() - 1 - trailing
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Whether every term from index `order` on satisfies the recurrence.
    pub fn replays(&self, seq: &[BigInt]) -> bool {
        let l = self.order;
        (l..seq.len()).all(|n| {
            let s: BigRational =
                (0..=l).map(|k| &self.coeffs[k] * BigRational::from_integer(seq[n - k].clone())).sum();
            s.is_zero()
        })
    }

    /// Whether the characteristic polynomial `x^L + c_1 x^{L−1} + … + c_L`
    /// divides `target` (integer coefficients, descending).
    pub fn divides(&self, target: &[BigInt]) -> bool {
        let mut rem: Vec<BigRational> = target.iter().cloned().map(BigRational::from_integer).collect();
        let l = self.order;
        if rem.len() <= l {
            return rem.iter().all(Zero::is_zero);
        }
        for i in 0..rem.len() - l {
            let q = rem[i].clone();
            if q.is_zero() {
                continue;
            }
            for k in 0..=l {
                rem[i + k] = &rem[i + k] - &q * &self.coeffs[k];
            }
        }
        rem.iter().all(Zero::is_zero)
    }
}

/// Berlekamp–Massey over `Q`. An all-zero (or empty) input has order 0.
pub fn fit_minimal_recurrence(seq: &[BigInt]) -> FittedRecurrence {
    let s: Vec<BigRational> = seq.iter().cloned().map(BigRational::from_integer).collect();
    let one = BigRational::one();
    let mut c = vec![one.clone()];
    let mut b = vec![one.clone()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last_disc = one;

    for n in 0..s.len() {
        let mut disc = s[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            disc += &c[i] * &s[n - i];
        }
        if disc.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &disc / &last_disc;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] = &c[i + shift] - &factor * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(l + 1, BigRational::zero());
    let fit = FittedRecurrence { coeffs: c, order: l, valid_up_to: seq.len().saturating_sub(1) };
    debug_assert!(fit.replays(seq));
    fit
}

/// `d·T(N, 0, m) − T(N/d, 0, m)`; the first block term of the `d`-fold
/// split is `T(N/d, 0, m)`, so this is always an integer sequence.
pub fn composite_sequence(n: usize, d: usize, m: u64) -> Result<BigInt> {
    if d < 2 || !n.is_multiple_of(d) {
        return Err(Error::Divisibility { n, d });
    }
    let coarse = if n / d == 1 { BigInt::one() << m } else { direct_sum(n / d, 0, m) };
    Ok(BigInt::from(d) * direct_sum(n, 0, m) - coarse)
}

/// Exact characteristic polynomial `(x − 1)^N ∓ 1` as descending integer coefficients.
pub fn characteristic_polynomial(n: usize, kind: Kind) -> Result<Vec<BigInt>> {
    Ok(recurrence_coeffs(n, kind)?.coeffs)
}

/// Helper for displaying a fitted recurrence.
pub fn format_coeffs(coeffs: &[BigRational]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .map(|c| if c.is_integer() { c.to_integer().to_string() } else { c.to_string() })
        .collect();
    format!("[{}]", parts.join(", "))
}

/// Sign of the constant coefficient for reporting: `0`, `-2` or `2`.
pub fn constant_term(spec: &RecurrenceSpec) -> BigInt {
    spec.coeffs.last().cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sums::direct_sum_alternating;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(recurrence_coeffs(5, Kind::Plain).unwrap().coeffs(), &ints(&[1, -5, 10, -10, 5, -2])[..]);
        assert_eq!(recurrence_coeffs(4, Kind::Alternating).unwrap().coeffs(), &ints(&[1, -4, 6, -4, 2])[..]);
        assert_eq!(recurrence_coeffs(2, Kind::Plain).unwrap().coeffs(), &ints(&[1, -2, 0])[..]);
        assert!(recurrence_coeffs(1, Kind::Plain).is_err());
    }

    #[test]
    fn constant_term_law() {
        for n in 2..=20usize {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(constant_term(&recurrence_coeffs(n, Kind::Plain).unwrap()), BigInt::from(sign - 1));
            assert_eq!(constant_term(&recurrence_coeffs(n, Kind::Alternating).unwrap()), BigInt::from(sign + 1));
        }
    }

    #[test]
    fn eval_examples() {
        let plain5 = recurrence_coeffs(5, Kind::Plain).unwrap();
        let star5 = recurrence_coeffs(5, Kind::Alternating).unwrap();
        assert_eq!(recur_eval(&plain5, 19), BigInt::from(107_883));
        assert_eq!(recur_eval(&star5, 20), BigInt::from(153_750));
        for m in 0..5 {
            assert_eq!(recur_eval(&plain5, m), BigInt::one());
            assert_eq!(recur_eval(&star5, m), BigInt::one());
        }
        assert_eq!(recur_eval_mod(&plain5, 19, Some(&BigInt::from(1000))).unwrap(), BigInt::from(883));
    }

    #[test]
    fn eval_matches_direct() {
        for n in 2..=10 {
            let plain = recurrence_coeffs(n, Kind::Plain).unwrap();
            let star = recurrence_coeffs(n, Kind::Alternating).unwrap();
            for m in 0..=200u64 {
                assert_eq!(recur_eval(&plain, m), direct_sum(n, 0, m), "N={n} m={m}");
                assert_eq!(recur_eval(&star, m), direct_sum_alternating(n, 0, m), "N={n} m={m}");
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            RecurrenceSpec::new(ints(&[1, -1, -1]), ints(&[1]), Family::Custom),
            Err(Error::InsufficientSeeds { have: 1, need: 2 })
        ));
        assert!(RecurrenceSpec::new(ints(&[2, -1]), ints(&[1]), Family::Custom).is_err());
        let fib = RecurrenceSpec::new(ints(&[1, -1, -1]), ints(&[0, 1]), Family::Custom).unwrap();
        assert_eq!(recur_eval(&fib, 30), BigInt::from(832_040));
        let trailing = RecurrenceSpec::new(ints(&[1, -2, 0]), ints(&[3]), Family::Custom).unwrap();
        assert_eq!(trailing.order(), 1);
        assert_eq!(recur_eval(&trailing, 4), BigInt::from(48));
    }

    #[test]
    fn fit_examples() {
        let t2: Vec<BigInt> = (0..20).map(|m| direct_sum(2, 0, m)).collect();
        let fit = fit_minimal_recurrence(&t2);
        // x_n − 2x_{n−1} = 0 from n = 2 on; the leading 1, 1 needs a second slot.
        assert_eq!(fit.degree(), 1);
        assert_eq!(fit.order, 2);
        assert_eq!(fit.integer_coeffs().unwrap(), ints(&[1, -2, 0]));

        let ones = vec![BigInt::one(); 12];
        let fit = fit_minimal_recurrence(&ones);
        assert_eq!(fit.order, 1);
        assert_eq!(fit.integer_coeffs().unwrap(), ints(&[1, -1]));

        let zeros = vec![BigInt::zero(); 8];
        assert_eq!(fit_minimal_recurrence(&zeros).order, 0);
        assert_eq!(fit_minimal_recurrence(&[]).order, 0);
    }

    #[test]
    fn nine_three_composite() {
        let seq: Vec<BigInt> = (0..30).map(|m| composite_sequence(9, 3, m).unwrap()).collect();
        let fit = fit_minimal_recurrence(&seq);
        assert_eq!(fit.order, 6);
        assert_eq!(fit.integer_coeffs().unwrap(), ints(&[1, -6, 15, -19, 12, -3, 1]));
        assert!(fit.replays(&seq));
    }

    #[test]
    fn composite_examples() {
        assert_eq!(composite_sequence(9, 3, 0).unwrap(), BigInt::from(2));
        assert_eq!(composite_sequence(9, 3, 9).unwrap(), BigInt::from(-164));
        assert_eq!(composite_sequence(4, 2, 5).unwrap(), BigInt::from(-4));
        assert_eq!(composite_sequence(9, 2, 5), Err(Error::Divisibility { n: 9, d: 2 }));
        assert_eq!(composite_sequence(9, 1, 5), Err(Error::Divisibility { n: 9, d: 1 }));
    }

    #[test]
    fn fitted_polynomials_divide_characteristic() {
        for n in 2..=10 {
            for kind in Kind::ALL {
                let seq: Vec<BigInt> = (0..4 * n as u64 + 4)
                    .map(|m| match kind {
                        Kind::Plain => direct_sum(n, 0, m),
                        Kind::Alternating => direct_sum_alternating(n, 0, m),
                    })
                    .collect();
                let fit = fit_minimal_recurrence(&seq);
                assert!(fit.divides(&characteristic_polynomial(n, kind).unwrap()), "N={n} {kind}");
            }
        }
    }

    #[test]
    fn rational_fits_replay() {
        let seq = ints(&[2, 3, 5, 9, 17, 33, 65]);
        let fit = fit_minimal_recurrence(&seq);
        assert_eq!(fit.integer_coeffs().unwrap(), ints(&[1, -3, 2]));
        // 2x_n = x_{n-1} + x_{n-2} needs a fractional connection polynomial.
        let seq = ints(&[4, 8, 6, 7]);
        let fit = fit_minimal_recurrence(&seq);
        assert!(fit.replays(&seq));
        assert!(fit.integer_coeffs().is_none());
    }
}
