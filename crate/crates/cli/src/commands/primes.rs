use std::io::Write;

use rayon::prelude::*;

use lacunary::congruence::{
    flt_criterion_scan, lehmer_check, primes_between, sun_plain_check, sun_star_check, supplement_check,
    CriterionReport, PrimeContext,
};
use lacunary::Error;

use super::thread_pool;
use crate::args::{CongruenceArgs, ScanArgs};
use crate::error::{CliError, CliResult};

const MAX_PRIME: u64 = 1 << 32;

fn prime_list(from: u64, to: u64) -> CliResult<Vec<u64>> {
    if to >= MAX_PRIME {
        return Err(CliError::Usage(format!("--to must be below 2^32, got {to}")));
    }
    Ok(primes_between(from.max(3), to.saturating_add(1)).collect())
}

fn list(ns: &[usize]) -> String {
    if ns.is_empty() {
        "none".into()
    } else {
        ns.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

fn scan_line(r: &CriterionReport) -> String {
    let residues: Vec<String> = r.entries.iter().map(|e| format!("N={}:{}", e.n, e.residue_mod_p2)).collect();
    let mut line = format!("p={}  {}", r.p, residues.join(" "));
    line += &format!("  | one mod p^2: {}", list(&r.passing));
    if !r.skipped.is_empty() {
        line += &format!("  | skipped N >= p: {}", r.skipped.len());
    }
    line += &format!("  | obstruction: {}", if r.flt_first_case_obstruction_met { "MET" } else { "no" });
    line
}

pub fn flt_scan(a: &ScanArgs, out: &mut dyn Write) -> CliResult<()> {
    let primes = prime_list(a.from, a.to)?;
    let pool = thread_pool(a.jobs)?;
    let reports: Vec<lacunary::Result<CriterionReport>> = pool.install(|| {
        primes.par_iter().map(|&p| PrimeContext::new(p).and_then(|ctx| flt_criterion_scan(&ctx))).collect()
    });
    let reports = reports.into_iter().collect::<lacunary::Result<Vec<_>>>()?;
    for r in &reports {
        if a.json {
            writeln!(out, "{}", serde_json::to_string(r).expect("plain data serializes"))?;
        } else {
            writeln!(out, "{}", scan_line(r))?;
        }
    }
    if reports.is_empty() || a.json {
        return Ok(());
    }
    let hits: Vec<String> =
        reports.iter().filter(|r| !r.passing.is_empty()).map(|r| format!("p={} (N={})", r.p, list(&r.passing))).collect();
    let met: Vec<String> =
        reports.iter().filter(|r| r.flt_first_case_obstruction_met).map(|r| r.p.to_string()).collect();
    writeln!(out, "scanned {} primes", reports.len())?;
    writeln!(out, "T(N, 0, p) = 1 mod p^2 at: {}", if hits.is_empty() { "none".into() } else { hits.join(", ") })?;
    writeln!(out, "full obstruction met by: {}", if met.is_empty() { "none".into() } else { met.join(", ") })?;
    Ok(())
}

#[derive(Default)]
struct SuiteCount {
    passed: usize,
    skipped: usize,
    failed: Vec<String>,
}

impl SuiteCount {
    fn record(&mut self, what: String, outcome: lacunary::Result<bool>) {
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => self.failed.push(what),
            Err(Error::EmptyRange { .. }) => self.skipped += 1,
            Err(e) => self.failed.push(format!("{what}: {e}")),
        }
    }
}

const SUITES: [&str; 4] = ["sun-plain", "sun-star", "supplement", "lehmer"];

fn run_suites(p: u64, max_n: usize, lehmer_max_n: usize) -> lacunary::Result<[SuiteCount; 4]> {
    let ctx = PrimeContext::new(p)?;
    let mut counts: [SuiteCount; 4] = Default::default();
    for n in 2..=max_n {
        counts[0].record(format!("sun-plain p={p} N={n}"), sun_plain_check(&ctx, n));
        counts[1].record(format!("sun-star p={p} N={n}"), sun_star_check(&ctx, n));
        counts[2].record(format!("supplement p={p} N={n}"), supplement_check(&ctx, n));
    }
    for n in 2..=lehmer_max_n {
        for j in 1..n {
            counts[3].record(format!("lehmer p={p} N={n} j={j}"), lehmer_check(&ctx, n, j));
        }
    }
    Ok(counts)
}

pub fn congruence(a: &CongruenceArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.max_n < 2 {
        return Err(CliError::Usage(format!("--max-N must be at least 2, got {}", a.max_n)));
    }
    let primes = prime_list(a.from, a.to)?;
    let pool = thread_pool(a.jobs)?;
    let results: Vec<lacunary::Result<[SuiteCount; 4]>> =
        pool.install(|| primes.par_iter().map(|&p| run_suites(p, a.max_n, a.lehmer_max_n)).collect());

    let mut failures = Vec::new();
    for (p, counts) in primes.iter().zip(results) {
        let counts = counts?;
        let mut line = format!("p={p}");
        for (name, c) in SUITES.iter().zip(&counts) {
            let total = c.passed + c.failed.len();
            line += &format!("  {name} {}/{total}", c.passed);
            if c.skipped > 0 {
                line += &format!(" (skipped {})", c.skipped);
            }
            failures.extend(c.failed.iter().cloned());
        }
        writeln!(out, "{line}")?;
    }
    for f in &failures {
        writeln!(out, "FAIL {f}")?;
    }
    if !failures.is_empty() {
        return Err(CliError::Failed(format!("{} congruence checks failed", failures.len())));
    }
    if !primes.is_empty() {
        writeln!(out, "all congruence checks passed for {} primes", primes.len())?;
    }
    Ok(())
}
