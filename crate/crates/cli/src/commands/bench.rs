use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;

use lacunary::evaluate;

use super::params;
use crate::args::BenchArgs;
use crate::error::{CliError, CliResult};

/// Values with more digits than this are shown by length only.
const MAX_SHOWN_DIGITS: usize = 40;

fn show(v: &BigInt) -> String {
    let s = v.to_string();
    if s.len() > MAX_SHOWN_DIGITS {
        format!("<{} digits>", s.trim_start_matches('-').len())
    } else {
        s
    }
}

pub fn run(a: &BenchArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.engines.is_empty() || a.n.is_empty() {
        return Err(CliError::Usage("need at least one N and one engine".into()));
    }
    let mut problems = Vec::new();
    writeln!(out, "{:>4}  {:<12} {:>12}  value", "N", "engine", "micros")?;
    for &n in &a.n {
        let p = params(n, 0, a.m, a.kind)?;
        let mut reference: Option<(String, BigInt)> = None;
        for &engine in &a.engines {
            let start = Instant::now();
            let outcome = evaluate(&p, engine, a.modulus.as_ref());
            let micros = start.elapsed().as_micros();
            match outcome {
                Ok(report) => {
                    let v = report.value.value;
                    writeln!(out, "{n:>4}  {:<12} {micros:>12}  {}", engine.to_string(), show(&v))?;
                    if engine.is_exact() {
                        match &reference {
                            Some((name, r)) if *r != v => {
                                problems.push(format!("N = {n}: {engine} disagrees with {name}"));
                            }
                            Some(_) => {}
                            None => reference = Some((engine.to_string(), v)),
                        }
                    }
                }
                Err(e) => {
                    writeln!(out, "{n:>4}  {:<12} {:>12}  error: {e}", engine.to_string(), "-")?;
                    problems.push(format!("N = {n}: {engine}: {e}"));
                }
            }
        }
    }
    if problems.is_empty() {
        return Ok(());
    }
    Err(CliError::Failed(problems.join("; ")))
}
