//! Command-line front end for the `lacunary` crate.
//!
//! [`run`] parses arguments, dispatches a subcommand and returns the exit
//! code: 0 on success, 1 when a computation or verification fails, 2 for
//! usage and parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod args;
pub mod bfile;
mod commands;
pub mod error;
pub mod output;

pub use error::{CliError, CliResult};

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match commands::dispatch(&cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
