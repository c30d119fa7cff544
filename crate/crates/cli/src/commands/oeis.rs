use std::io::Write;

use lacunary::evaluate;

use super::params;
use crate::args::OeisArgs;
use crate::bfile::BFile;
use crate::error::{CliError, CliResult};

pub fn run(a: &OeisArgs, out: &mut dyn Write) -> CliResult<()> {
    let file = BFile::read(&a.path)?;
    if file.offset < 0 {
        return Err(CliError::Usage(format!("{}: negative first index {}", a.path.display(), file.offset)));
    }
    let first = params(a.n, a.r, file.offset as u64, a.kind)?;
    for (index, want) in file.terms() {
        let p = first.with_m(index as u64);
        let got = evaluate(&p, a.engine, None)?.value.value;
        if &got != want {
            writeln!(out, "{}: first mismatch at m = {index}: file has {want}, {p} = {got}", file.id)?;
            return Err(CliError::Failed(format!("{} does not match {}", file.id, first.with_m(0))));
        }
    }
    let last = file.offset + file.values.len() as i64 - 1;
    let star = if a.kind == lacunary::Kind::Alternating { "*" } else { "" };
    writeln!(
        out,
        "{}: {} terms match T{star}({}, {}, m) for m = {}..{last}",
        file.id,
        file.values.len(),
        a.n,
        first.r(),
        file.offset
    )?;
    Ok(())
}
