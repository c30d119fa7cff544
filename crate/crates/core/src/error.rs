use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the arithmetic substrates, engines and congruence checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: BigInt, modulus: BigInt },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("N = {n} must be even")]
    Parity { n: usize },

    #[error("block count d = {d} does not divide N = {n}")]
    Divisibility { n: usize, d: usize },

    #[error("floating-point result is {distance:e} away from the nearest integer (limit {limit})")]
    NumericConfidence { distance: f64, limit: f64 },

    #[error("m = {m} exceeds the floating-point range guard (m <= {max}); use an exact engine")]
    Range { m: u64, max: u64 },

    #[error("recurrence of order {need} needs at least {need} seed terms, got {have}")]
    InsufficientSeeds { have: usize, need: usize },

    #[error("summation range for k = {k}, N = {n} is empty at p = {p}")]
    EmptyRange { k: usize, n: usize, p: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is outside the supported range (3 <= p < 2^32)")]
    PrimeOutOfRange(u64),

    #[error("base {base} is divisible by p = {p}")]
    BaseDivisibleByP { base: u64, p: u64 },

    #[error("{what}: {value} is not divisible by p = {p}")]
    NotDivisible { what: String, value: BigInt, p: u64 },

    #[error("engine {engine} does not support {reason}")]
    Unsupported { engine: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
