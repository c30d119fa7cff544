use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;

use lacunary::engines::{circulant_engine, poly_row, ramus_cosine, split_engine, CirculantSpec, COSINE_MAX_M};
use lacunary::sums::{plain_from_halves, star_from_plain};
use lacunary::{direct_sum, direct_sum_alternating, recur_eval, recurrence_coeffs, Engine, Kind, SumParams};

use super::thread_pool;
use crate::args::VerifyArgs;
use crate::error::{CliError, CliResult};

/// Mismatches printed per work item before the rest are only counted.
const SHOWN_PER_ITEM: usize = 10;

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, what: impl FnOnce() -> String, got: &BigInt, want: &BigInt) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{}: got {got}, expected {want}", what()));
        }
    }

    fn error(&mut self, what: String, e: lacunary::Error) {
        self.checks += 1;
        self.failures.push(format!("{what}: {e}"));
    }
}

fn bump(engine: Engine, corrupt: Option<Engine>, v: BigInt) -> BigInt {
    if corrupt == Some(engine) {
        v + 1
    } else {
        v
    }
}

fn sweep(n: usize, kind: Kind, max_m: u64, corrupt: Option<Engine>) -> Tally {
    let mut t = Tally::default();
    let spec = recurrence_coeffs(n, kind).expect("N >= 2");
    let circ = CirculantSpec::for_kind(n, kind).expect("N >= 2");
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    for m in 0..=max_m {
        let want: Vec<BigInt> = (0..n)
            .map(|r| match kind {
                Kind::Plain => direct_sum(n, r, m),
                Kind::Alternating => direct_sum_alternating(n, r, m),
            })
            .collect();
        let poly = poly_row(n, kind, m, None).expect("valid N");
        let circulant = circulant_engine(&circ, m);
        for r in 0..n {
            let p = SumParams::new(n, r as i64, m, kind).expect("valid");
            t.check(|| format!("{p} poly"), &bump(Engine::Poly, corrupt, poly[r].clone()), &want[r]);
            t.check(|| format!("{p} circulant"), &bump(Engine::Circulant, corrupt, circulant[r].clone()), &want[r]);
            if kind == Kind::Plain && (1..=COSINE_MAX_M.min(50)).contains(&m) {
                match ramus_cosine(&p) {
                    Ok(c) => t.check(|| format!("{p} cosine"), &bump(Engine::Cosine, corrupt, c.value.value), &want[r]),
                    Err(e) => t.error(format!("{p} cosine"), e),
                }
            }
            if kind == Kind::Plain {
                let star = direct_sum_alternating(n, r, m);
                t.check(|| format!("T*({n}, {r}, {m}) as 2T(2N) - T(N)"), &star_from_plain(n, r, m), &star);
            }
        }
        let p0 = SumParams::new(n, 0, m, kind).expect("valid");
        let rec = bump(Engine::Recurrence, corrupt, recur_eval(&spec, m));
        t.check(|| format!("{p0} recurrence"), &rec, &want[0]);
        for &d in &divisors {
            match split_engine(n, d, m, kind) {
                Ok(s) => t.check(|| format!("{p0} split:{d}"), &bump(Engine::Split(d), corrupt, s.value.value), &want[0]),
                Err(e) => t.error(format!("{p0} split:{d}"), e),
            }
        }
        if kind == Kind::Plain && n.is_multiple_of(2) {
            match plain_from_halves(n, m) {
                Ok(v) => t.check(|| format!("{p0} from halves"), &v, &want[0]),
                Err(e) => t.error(format!("{p0} from halves"), e),
            }
        }
    }
    t
}

pub fn run(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.max_n < 2 || a.max_m < 1 {
        return Err(CliError::Usage(format!("need --max-N >= 2 and --max-m >= 1, got {} and {}", a.max_n, a.max_m)));
    }
    let items: Vec<(usize, Kind)> = (2..=a.max_n).flat_map(|n| Kind::ALL.map(|k| (n, k))).collect();
    let pool = thread_pool(a.jobs)?;
    let tallies: Vec<Tally> = pool.install(|| items.par_iter().map(|&(n, k)| sweep(n, k, a.max_m, a.corrupt)).collect());

    let mut checks = 0;
    let mut failed = 0;
    for t in &tallies {
        checks += t.checks;
        failed += t.failures.len();
        for f in t.failures.iter().take(SHOWN_PER_ITEM) {
            writeln!(out, "MISMATCH {f}")?;
        }
        if t.failures.len() > SHOWN_PER_ITEM {
            writeln!(out, "  ... and {} more", t.failures.len() - SHOWN_PER_ITEM)?;
        }
    }
    if failed > 0 {
        writeln!(out, "verify: {failed} of {checks} checks failed")?;
        return Err(CliError::Failed(format!("{failed} verification checks failed")));
    }
    writeln!(out, "verify: {checks} checks passed for N <= {}, m <= {}", a.max_n, a.max_m)?;
    writeln!(out, "all N·r·m·kind·engine combinations agree")?;
    Ok(())
}
