//! Exact lacunary binomial sums.
//!
//! `T(N, r, m)` sums `C(m, j)` over `j ≡ r (mod N)`; the alternating
//! `T*(N, r, m)` attaches the sign `(−1)^((j − r)/N)`. The crate computes
//! both through several independent routes:
//!
//! * [`sums`]: direct summation over a binomial row, the reference oracle;
//! * [`engines::poly`]: `(1 + x)^m` in `Z[x]/(x^N ∓ 1)`;
//! * [`engines::circulant`]: powers of the circulant `C_N = I + U_N`;
//! * [`engines::split`]: the `d`-block decomposition of `C_N` averaged over roots of unity;
//! * [`recurrence`]: the order-`N` linear recurrences and Berlekamp–Massey fits;
//! * [`engines::cosine`]: the classical cosine form, in double-double arithmetic.
//!
//! [`congruence`] applies the fast modular path to congruences modulo `p`
//! and `p²`.
//!
//! ```
//! use lacunary::{evaluate, Engine, SumParams};
//!
//! let params = SumParams::plain(5, 0, 19).unwrap();
//! let report = evaluate(&params, Engine::Poly, None).unwrap();
//! assert_eq!(report.value.value, 107_883.into());
//! ```

pub mod congruence;
pub mod engines;
pub mod error;
pub mod recurrence;
pub mod ring;
pub mod sums;

pub use engines::{evaluate, Engine, EngineReport};
pub use error::{Error, Result};
pub use recurrence::{fit_minimal_recurrence, recur_eval, recurrence_coeffs, FittedRecurrence, RecurrenceSpec};
pub use sums::{direct, direct_sum, direct_sum_alternating, Kind, LacunaryValue, SumParams};

// The guide's snippets run as doctests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sums.md")]
    mod sums {}
    #[doc = include_str!("../../../book/src/quotient_ring.md")]
    mod quotient_ring {}
    #[doc = include_str!("../../../book/src/circulants.md")]
    mod circulants {}
    #[doc = include_str!("../../../book/src/block_split.md")]
    mod block_split {}
    #[doc = include_str!("../../../book/src/recurrences.md")]
    mod recurrences {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
