//! Independent evaluators for `T(N, r, m)` and `T*(N, r, m)`.
//!
//! * [`poly`]: `(1 + x)^m` in `Z[x]/(x^N ∓ 1)`, the fast exact path.
//! * [`circulant`]: explicit powers of `C_N = I_N + U_N` and its skew twin.
//! * [`split`]: the block decomposition of `C_N` into `d` blocks and the
//!   root-of-unity average over `(a + b·ω^j)^m`.
//! * [`cosine`]: the classical cosine form, evaluated in floating point.
//!
//! [`evaluate`] dispatches a query to any engine, including the direct
//! oracle and the recurrence engine from [`crate::recurrence`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{IntegerRing, Mod64, Residue};
use crate::sums::{direct, Kind, LacunaryValue, SumParams};

pub mod circulant;
pub mod cosine;
pub mod poly;
pub mod split;

pub use circulant::{circulant_engine, circulant_first_row, verify_lemma1, CirculantSpec};
pub use cosine::{cos_pi_over_3_closed, ramus_cosine, t9_expression, CONFIDENCE_LIMIT, COSINE_MAX_M};
pub use poly::{poly_coefficients, poly_engine, poly_row};
pub use split::{block_split, eq17_probe, skew_block_engine, split_engine, BlockSplit, Eq17Probe};

/// Engine selector, parsed from `direct`, `poly`, `circulant`, `split:<d>`,
/// `recurrence` or `cosine`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Direct,
    Poly,
    Circulant,
    Split(usize),
    Recurrence,
    Cosine,
}

impl Engine {
    /// Engines whose answers are exact integers (everything but `cosine`).
    pub fn is_exact(self) -> bool {
        !matches!(self, Engine::Cosine)
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Engine::Direct => f.write_str("direct"),
            Engine::Poly => f.write_str("poly"),
            Engine::Circulant => f.write_str("circulant"),
            Engine::Split(d) => write!(f, "split:{d}"),
            Engine::Recurrence => f.write_str("recurrence"),
            Engine::Cosine => f.write_str("cosine"),
        }
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Engine::Direct),
            "poly" => Ok(Engine::Poly),
            "circulant" => Ok(Engine::Circulant),
            "recurrence" => Ok(Engine::Recurrence),
            "cosine" => Ok(Engine::Cosine),
            other => match other.strip_prefix("split:").map(str::parse::<usize>) {
                Some(Ok(d)) if d >= 1 => Ok(Engine::Split(d)),
                _ => Err(Error::InvalidParams(format!(
                    "unknown engine {other:?} (expected direct, poly, circulant, split:<d>, recurrence, cosine)"
                ))),
            },
        }
    }
}

impl Serialize for Engine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Engine {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Result of one engine run.
#[derive(Clone, Debug, PartialEq)]
pub struct EngineReport {
    pub engine: Engine,
    pub value: LacunaryValue,
    /// For floating-point engines: distance from the raw result to the
    /// integer it was rounded to. Always below [`CONFIDENCE_LIMIT`].
    pub rounding_distance: Option<f64>,
}

impl EngineReport {
    pub(crate) fn exact(engine: Engine, value: LacunaryValue) -> Self {
        EngineReport { engine, value, rounding_distance: None }
    }
}

/// Work that can run over `Z` or any `Z/qZ`.
pub(crate) trait IntegerJob {
    type Output;
    fn run<R: IntegerRing>(&self, proto: &R) -> Self::Output;
}

/// Runs `job` over `Z` when `modulus` is `None`, otherwise over residues,
/// using machine words whenever the modulus fits in 64 bits.
pub(crate) fn with_integer_ring<J: IntegerJob>(modulus: Option<&BigInt>, job: &J) -> Result<J::Output> {
    match modulus {
        None => Ok(job.run(&BigInt::zero())),
        Some(q) => match q.to_u64() {
            Some(q64) => Ok(job.run(&Mod64::new(0, q64)?)),
            None => Ok(job.run(&Residue::new(0, q.clone())?)),
        },
    }
}

fn require_r_zero(engine: Engine, params: &SumParams) -> Result<()> {
    if params.r() != 0 {
        return Err(Error::Unsupported {
            engine: engine.to_string(),
            reason: format!("r = {} (only r = 0 is representable)", params.r()),
        });
    }
    Ok(())
}

/// Evaluates `params` with the chosen engine, reducing into `[0, modulus)` when given.
pub fn evaluate(params: &SumParams, engine: Engine, modulus: Option<&BigInt>) -> Result<EngineReport> {
    if let Some(q) = modulus {
        if *q < BigInt::from(2) {
            return Err(Error::InvalidParams(format!("modulus {q} must be at least 2")));
        }
    }
    let n = params.n();
    let m = params.m();
    match engine {
        Engine::Direct => {
            let v = direct(params).value;
            Ok(EngineReport::exact(engine, LacunaryValue::reduced(*params, v, modulus)))
        }
        Engine::Poly => Ok(EngineReport::exact(engine, poly_engine(params, modulus)?)),
        Engine::Circulant => {
            let spec = CirculantSpec::for_kind(n, params.kind())?;
            let row = circulant_first_row(&spec, m, modulus)?;
            let v = row[params.r()].clone();
            Ok(EngineReport::exact(engine, LacunaryValue { value: v, params: *params, modulus: modulus.cloned() }))
        }
        Engine::Split(d) => {
            require_r_zero(engine, params)?;
            let mut report = split_engine(n, d, m, params.kind())?;
            report.value = LacunaryValue::reduced(*params, report.value.value, modulus);
            Ok(report)
        }
        Engine::Recurrence => {
            require_r_zero(engine, params)?;
            let spec = crate::recurrence::recurrence_coeffs(n, params.kind())?;
            let v = crate::recurrence::recur_eval_mod(&spec, m, modulus)?;
            Ok(EngineReport::exact(engine, LacunaryValue { value: v, params: *params, modulus: modulus.cloned() }))
        }
        Engine::Cosine => {
            if params.kind() != Kind::Plain {
                return Err(Error::Unsupported {
                    engine: engine.to_string(),
                    reason: "the alternating family".into(),
                });
            }
            let mut report = ramus_cosine(params)?;
            report.value = LacunaryValue::reduced(*params, report.value.value, modulus);
            Ok(report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_names_round_trip() {
        for e in [Engine::Direct, Engine::Poly, Engine::Circulant, Engine::Split(3), Engine::Recurrence, Engine::Cosine] {
            assert_eq!(e.to_string().parse::<Engine>().unwrap(), e);
        }
        assert!("split:0".parse::<Engine>().is_err());
        assert!("split".parse::<Engine>().is_err());
        assert!("fft".parse::<Engine>().is_err());
    }

    #[test]
    fn dispatch_examples() {
        let p = SumParams::plain(5, 0, 19).unwrap();
        for e in [Engine::Direct, Engine::Poly, Engine::Circulant, Engine::Split(5), Engine::Recurrence] {
            assert_eq!(evaluate(&p, e, None).unwrap().value.value, BigInt::from(107_883), "{e}");
        }
        let q = BigInt::from(1000);
        assert_eq!(evaluate(&p, Engine::Recurrence, Some(&q)).unwrap().value.value, BigInt::from(883));
        let s = SumParams::alternating(3, 0, 6).unwrap();
        assert_eq!(evaluate(&s, Engine::Circulant, None).unwrap().value.value, BigInt::from(-18));
        assert_eq!(evaluate(&s, Engine::Circulant, Some(&q)).unwrap().value.value, BigInt::from(982));
    }

    #[test]
    fn unsupported_combinations() {
        let p = SumParams::plain(5, 2, 9).unwrap();
        assert!(matches!(evaluate(&p, Engine::Recurrence, None), Err(Error::Unsupported { .. })));
        assert!(matches!(evaluate(&p, Engine::Split(5), None), Err(Error::Unsupported { .. })));
        let s = SumParams::alternating(5, 0, 9).unwrap();
        assert!(matches!(evaluate(&s, Engine::Cosine, None), Err(Error::Unsupported { .. })));
        assert!(evaluate(&s, Engine::Poly, Some(&BigInt::from(1))).is_err());
    }
}
