use std::io::Write;

use lacunary::engines::eq17_probe;

use crate::args::ProbeArgs;
use crate::error::{CliError, CliResult};

pub fn run(a: &ProbeArgs, out: &mut dyn Write) -> CliResult<()> {
    if a.n.iter().any(|&n| n < 2) {
        return Err(CliError::Usage("every N must be at least 2".into()));
    }
    for (i, &n) in a.n.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        let probes = (0..=a.max_m).map(|m| eq17_probe(n, m)).collect::<lacunary::Result<Vec<_>>>()?;
        let labels: Vec<&str> = probes[0].readings.iter().map(|(l, _)| l.as_str()).collect();
        writeln!(out, "N = {n}: T*(N, 0, m) against ((a + bi)^e + (a - bi)^e)/2, entry (0, 0)")?;
        write!(out, "{:>4} {:>14}", "m", "T*(N, 0, m)")?;
        for l in &labels {
            write!(out, "  {l:>26}")?;
        }
        writeln!(out)?;
        let mut matches = vec![0usize; labels.len()];
        for probe in &probes {
            write!(out, "{:>4} {:>14}", probe.m, probe.reference)?;
            for (k, (_, v)) in probe.readings.iter().enumerate() {
                let cell = match v {
                    Some(v) if v.is_integer() && v.to_integer() == probe.reference => {
                        matches[k] += 1;
                        format!("{v} =")
                    }
                    Some(v) => format!("{v}  "),
                    None => "n/a  ".into(),
                };
                write!(out, "  {cell:>26}")?;
            }
            writeln!(out)?;
        }
        for (l, hits) in labels.iter().zip(&matches) {
            writeln!(out, "  {l}: matches {hits}/{}", probes.len())?;
        }
    }
    Ok(())
}
