use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lacunary::{Engine, Kind};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(name = "lacunary", version, about = "Lacunary binomial sums T(N, r, m) and T*(N, r, m)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one sum with a chosen engine.
    Compute(ComputeArgs),
    /// Cross-check every engine and identity over a grid of parameters.
    Verify(VerifyArgs),
    /// Print recurrence coefficient rows.
    Table(TableArgs),
    /// Scan primes for T(N, 0, p) = 1 (mod p^2).
    FltScan(ScanArgs),
    /// Run the harmonic-sum and binomial congruence suites over a prime range.
    Congruence(CongruenceArgs),
    /// Compare computed terms with an OEIS b-file.
    OeisCheck(OeisArgs),
    /// Time engines against each other.
    Bench(BenchArgs),
    /// Compare candidate two-block readings for T*(N, 0, m) with the true value.
    #[command(name = "eq17-probe")]
    Eq17Probe(ProbeArgs),
}

/// `N` or `p2:P` (meaning `P^2`).
pub fn parse_modulus(s: &str) -> Result<BigInt, String> {
    let q = match s.strip_prefix("p2:") {
        Some(p) => {
            let p: BigInt = p.parse().map_err(|_| format!("bad prime in {s:?}"))?;
            &p * &p
        }
        None => s.parse().map_err(|_| format!("modulus must be an integer or p2:<P>, got {s:?}"))?,
    };
    if q < BigInt::from(2) {
        return Err(format!("modulus must be at least 2, got {q}"));
    }
    Ok(q)
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: lacunary::Error| e.to_string())
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse().map_err(|e: lacunary::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub r: i64,
    #[arg(long)]
    pub m: u64,
    #[arg(long, default_value = "plain", value_parser = parse_kind)]
    pub kind: Kind,
    #[arg(long, default_value = "poly", value_parser = parse_engine)]
    pub engine: Engine,
    /// Reduce into [0, q): an integer, or p2:P for P^2.
    #[arg(long, value_parser = parse_modulus)]
    pub modulus: Option<BigInt>,
    /// Skip the re-check against direct summation (done by default for m <= 200).
    #[arg(long)]
    pub no_verify: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "max-N", default_value_t = 8)]
    pub max_n: usize,
    #[arg(long = "max-m", default_value_t = 60)]
    pub max_m: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Test hook: perturb one engine's answers by one.
    #[arg(long, hide = true, value_parser = parse_engine)]
    pub corrupt: Option<Engine>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// plain, star, or both when omitted.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<Kind>,
    #[arg(long, default_value_t = 2)]
    pub from: usize,
    #[arg(long, default_value_t = 10)]
    pub to: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 5)]
    pub from: u64,
    #[arg(long, default_value_t = 100)]
    pub to: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CongruenceArgs {
    #[arg(long, default_value_t = 5)]
    pub from: u64,
    #[arg(long, default_value_t = 100)]
    pub to: u64,
    /// Largest N for the harmonic-sum checks.
    #[arg(long = "max-N", default_value_t = 10)]
    pub max_n: usize,
    /// Largest N for the binomial congruence.
    #[arg(long = "lehmer-max-N", default_value_t = 6)]
    pub lehmer_max_n: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    pub path: PathBuf,
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long, default_value = "plain", value_parser = parse_kind)]
    pub kind: Kind,
    #[arg(long, default_value_t = 0)]
    pub r: i64,
    #[arg(long, default_value = "poly", value_parser = parse_engine)]
    pub engine: Engine,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long = "N", value_delimiter = ',', default_value = "12")]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 1000)]
    pub m: u64,
    #[arg(long, value_delimiter = ',', default_value = "poly,circulant,recurrence", value_parser = parse_engine)]
    pub engines: Vec<Engine>,
    #[arg(long, default_value = "plain", value_parser = parse_kind)]
    pub kind: Kind,
    #[arg(long, value_parser = parse_modulus)]
    pub modulus: Option<BigInt>,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long = "N", value_delimiter = ',', default_value = "2,4,6")]
    pub n: Vec<usize>,
    #[arg(long = "max-m", default_value_t = 8)]
    pub max_m: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(parse_modulus("1000").unwrap(), BigInt::from(1000));
        assert_eq!(parse_modulus("p2:1000003").unwrap(), BigInt::from(1_000_003u64 * 1_000_003));
        assert!(parse_modulus("1").is_err());
        assert!(parse_modulus("p2:x").is_err());
        assert!(parse_modulus("ten").is_err());
    }

    #[test]
    fn flags_parse() {
        let cli = Cli::try_parse_from(["lacunary", "compute", "--N", "5", "--m", "19", "--engine", "split:5"]).unwrap();
        match cli.command {
            Command::Compute(a) => {
                assert_eq!((a.n, a.r, a.m), (5, 0, 19));
                assert_eq!(a.engine, Engine::Split(5));
                assert_eq!(a.kind, Kind::Plain);
            }
            other => panic!("{other:?}"),
        }
        assert!(Cli::try_parse_from(["lacunary", "compute", "--N", "5"]).is_err());
        assert!(Cli::try_parse_from(["lacunary", "compute", "--N", "5", "--m", "1", "--kind", "odd"]).is_err());
    }
}
