use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use lacunary::congruence::{lerch_sum, primes_between, sum_mod_p2, PrimeContext};
use lacunary::engines::{circulant_first_row, poly_row, CirculantSpec};
use lacunary::recurrence::recur_eval_mod;
use lacunary::ring::{Mod64, QuotientPoly, Residue, Ring, Wrap};
use lacunary::{direct, fit_minimal_recurrence, recurrence_coeffs, Kind, SumParams};

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::Plain), Just(Kind::Alternating)]
}

fn wrap() -> impl Strategy<Value = Wrap> {
    prop_oneof![Just(Wrap::Cyclic), Just(Wrap::Negacyclic)]
}

fn poly(n: usize, wrap: Wrap, coeffs: &[i64]) -> QuotientPoly<BigInt> {
    QuotientPoly::new(coeffs[..n].iter().map(|&c| BigInt::from(c)).collect(), wrap).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residue_classes_partition_the_row(n in 2usize..16, m in 0u64..150) {
        let row = poly_row(n, Kind::Plain, m, None).unwrap();
        prop_assert_eq!(row.iter().sum::<BigInt>(), BigInt::from(1) << m);
    }

    #[test]
    fn poly_circulant_direct_agree(n in 2usize..10, m in 0u64..120, kind in kind(), q in 2u64..1_000_000) {
        let poly = poly_row(n, kind, m, None).unwrap();
        let spec = CirculantSpec::for_kind(n, kind).unwrap();
        let circ = circulant_first_row(&spec, m, Some(&BigInt::from(q))).unwrap();
        for r in 0..n {
            let want = direct(&SumParams::new(n, r as i64, m, kind).unwrap()).value;
            prop_assert_eq!(&poly[r], &want);
            prop_assert_eq!(&circ[r], &want.mod_floor(&BigInt::from(q)));
        }
    }

    #[test]
    fn recurrence_matches_poly_mod_q(n in 2usize..12, m in 0u64..2000, kind in kind(), q in 2u64..1u64 << 40) {
        let q = BigInt::from(q);
        let spec = recurrence_coeffs(n, kind).unwrap();
        let rec = recur_eval_mod(&spec, m, Some(&q)).unwrap();
        prop_assert_eq!(rec, poly_row(n, kind, m, Some(&q)).unwrap()[0].clone());
    }

    #[test]
    fn quotient_multiplication_is_commutative_and_associative(
        n in 2usize..7,
        wrap in wrap(),
        a in prop::collection::vec(-50i64..50, 7),
        b in prop::collection::vec(-50i64..50, 7),
        c in prop::collection::vec(-50i64..50, 7),
    ) {
        let (a, b, c) = (poly(n, wrap, &a), poly(n, wrap, &b), poly(n, wrap, &c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn units_invert(a in 1i64..1_000_000, q in 2i64..1_000_000) {
        let r = Residue::new(a, q).unwrap();
        let w = Mod64::new(a as i128, q as u64).unwrap();
        match r.inverse() {
            Ok(inv) => {
                prop_assert!(r.mul(&inv) == r.one_like());
                prop_assert_eq!(w.mul(&w.inverse().unwrap()).value(), 1);
            }
            Err(_) => {
                prop_assert!(a.gcd(&q) > 1);
                prop_assert!(w.inverse().is_err());
            }
        }
    }

    #[test]
    fn fitted_recurrences_replay(seq in prop::collection::vec(-1000i64..1000, 0..24)) {
        let seq: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
        let fit = fit_minimal_recurrence(&seq);
        prop_assert!(fit.replays(&seq));
        prop_assert!(2 * fit.order <= seq.len() + 1);
    }

    #[test]
    fn lerch_blocks_tile_to_zero(idx in 0usize..40, n in 2usize..11) {
        let p = primes_between(5, 400).nth(idx).unwrap();
        let ctx = PrimeContext::new(p).unwrap();
        prop_assume!(n as u64 <= p);
        let total: u64 = (0..n).map(|k| lerch_sum(&ctx, k, n, false).unwrap().value).sum();
        prop_assert_eq!(total % p, 0);
    }

    #[test]
    fn lacunary_sums_are_one_mod_p(idx in 0usize..60, n in 2usize..30, kind in kind()) {
        let p = primes_between(5, 1000).nth(idx).unwrap();
        prop_assume!((n as u64) < p);
        let ctx = PrimeContext::new(p).unwrap();
        prop_assert_eq!(sum_mod_p2(n, kind, &ctx).unwrap() % p, 1);
    }
}
