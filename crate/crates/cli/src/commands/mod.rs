use std::io::Write;
use std::time::Instant;

use lacunary::recurrence_coeffs;
use lacunary::{direct, evaluate, Kind, LacunaryValue, SumParams};

use crate::args::{Command, ComputeArgs, TableArgs};
use crate::error::{CliError, CliResult};
use crate::output::OutputRecord;

mod bench;
mod oeis;
mod primes;
mod probe;
mod verify;

/// Exact results at or below this `m` are re-checked against direct summation.
const VERIFY_ON_PRINT_MAX_M: u64 = 200;

/// Above this `m`, exact big-integer runs get a memory warning.
const LARGE_M: u64 = 1_000_000;

pub fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Compute(a) => compute(a, out, err),
        Command::Verify(a) => verify::run(a, out),
        Command::Table(a) => table(a, out),
        Command::FltScan(a) => primes::flt_scan(a, out),
        Command::Congruence(a) => primes::congruence(a, out),
        Command::OeisCheck(a) => oeis::run(a, out),
        Command::Bench(a) => bench::run(a, out),
        Command::Eq17Probe(a) => probe::run(a, out),
    }
}

/// Builds parameters from flags; bad values are usage errors.
pub(crate) fn params(n: usize, r: i64, m: u64, kind: Kind) -> CliResult<SumParams> {
    SumParams::new(n, r, m, kind).map_err(|e| CliError::Usage(e.to_string()))
}

pub(crate) fn thread_pool(jobs: usize) -> CliResult<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| CliError::Usage(e.to_string()))
}

fn compute(a: &ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let params = params(a.n, a.r, a.m, a.kind)?;
    if a.m > LARGE_M && a.modulus.is_none() {
        writeln!(err, "warning: m = {} without --modulus builds big integers of about m bits; consider --modulus", a.m)?;
    }
    let start = Instant::now();
    let report = evaluate(&params, a.engine, a.modulus.as_ref())?;
    let micros = start.elapsed().as_micros() as u64;

    if !a.no_verify && a.m <= VERIFY_ON_PRINT_MAX_M {
        let want = LacunaryValue::reduced(params, direct(&params).value, a.modulus.as_ref()).value;
        if report.value.value != want {
            return Err(CliError::Failed(format!(
                "{params} via {}: got {}, direct summation gives {want}",
                report.engine, report.value.value
            )));
        }
    }
    let record = OutputRecord::from_report(&report, micros);
    if a.json {
        writeln!(out, "{}", record.to_json())?;
    } else {
        writeln!(out, "{}", record.human())?;
    }
    Ok(())
}

fn table(a: &TableArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.from < 2 || a.from > a.to {
        return Err(CliError::Usage(format!("need 2 <= --from <= --to, got {}..{}", a.from, a.to)));
    }
    let kinds = match a.kind {
        Some(k) => vec![k],
        None => Kind::ALL.to_vec(),
    };
    for (i, kind) in kinds.into_iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        let name = if kind == Kind::Plain { "T(N, 0, m)" } else { "T*(N, 0, m)" };
        writeln!(out, "Recurrences for {name}, coefficients c_N .. c_0")?;
        writeln!(out, "  N | coefficients")?;
        writeln!(out, "----+-------------")?;
        for n in a.from..=a.to {
            let spec = recurrence_coeffs(n, kind)?;
            let row: Vec<String> = spec.coeffs().iter().map(ToString::to_string).collect();
            writeln!(out, "{n:>3} | {}", row.join(", "))?;
        }
    }
    Ok(())
}
