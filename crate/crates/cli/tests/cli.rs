use std::path::PathBuf;
use std::process::{Command, Output};

fn lacunary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lacunary")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn compute_plain_value() {
    let o = lacunary(&["compute", "--N", "3", "--m", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("= 349525"), "{}", stdout(&o));
}

#[test]
fn compute_matches_across_engines() {
    let mut seen = Vec::new();
    for engine in ["direct", "poly", "circulant", "recurrence", "split:2", "cosine"] {
        let o = lacunary(&["compute", "--N", "6", "--m", "40", "--engine", engine, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{engine}: {}", stderr(&o));
        let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        seen.push(v["value"].as_str().unwrap().to_string());
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]), "{seen:?}");
}

#[test]
fn compute_json_round_trip() {
    let o = lacunary(&["compute", "--N", "5", "--m", "10", "--kind", "star", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 10);
    assert!(v.get("modulus").is_none());
    let back = serde_json::to_string(&v).unwrap();
    let again: serde_json::Value = serde_json::from_str(&back).unwrap();
    assert_eq!(v, again);
}

#[test]
fn compute_negative_r_reduces() {
    let a = lacunary(&["compute", "--N", "4", "--r", "-1", "--m", "9"]);
    let b = lacunary(&["compute", "--N", "4", "--r", "3", "--m", "9"]);
    let value = |o: &Output| stdout(o).split('=').nth(1).unwrap().split_whitespace().next().unwrap().to_string();
    assert_eq!(value(&a), value(&b));
}

#[test]
fn compute_with_modulus() {
    let o = lacunary(&["compute", "--N", "12", "--m", "1000000", "--modulus", "p2:1000003", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["modulus"], "1000006000009");
}

#[test]
fn compute_usage_errors_exit_2() {
    for args in [
        vec!["compute", "--N", "1", "--m", "3"],
        vec!["compute", "--N", "3"],
        vec!["compute", "--N", "3", "--m", "3", "--engine", "nope"],
        vec!["compute", "--N", "3", "--m", "3", "--modulus", "0"],
    ] {
        let o = lacunary(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn compute_engine_failure_exit_1() {
    let o = lacunary(&["compute", "--N", "5", "--m", "100", "--engine", "cosine"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("range guard"));
}

#[test]
fn verify_passes() {
    let o = lacunary(&["verify", "--max-N", "6", "--max-m", "30", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("combinations agree"));
}

#[test]
fn verify_detects_corruption() {
    for engine in ["poly", "recurrence", "split:2"] {
        let o = lacunary(&["verify", "--max-N", "4", "--max-m", "10", "--corrupt", engine]);
        assert_eq!(o.status.code(), Some(1), "{engine}");
        assert!(stdout(&o).contains("MISMATCH"), "{engine}");
    }
}

#[test]
fn table_prints_rows() {
    let o = lacunary(&["table", "--to", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 3, "{text}");
}

#[test]
fn flt_scan_small_range() {
    let o = lacunary(&["flt-scan", "--from", "5", "--to", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let seven = text.lines().find(|l| l.starts_with("p=7 ")).unwrap();
    assert!(seven.contains("N=2:15"), "{seven}");
    assert!(text.contains("scanned 23 primes"), "{text}");
    assert!(text.contains("full obstruction met by: none"));
}

#[test]
fn flt_scan_flags_wieferich_prime() {
    let o = lacunary(&["flt-scan", "--from", "1093", "--to", "1093", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["p"], 1093);
    assert!(v["passing"].as_array().unwrap().contains(&serde_json::json!(2)));
}

#[test]
fn flt_scan_empty_range_is_silent() {
    let o = lacunary(&["flt-scan", "--from", "24", "--to", "28"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
}

#[test]
fn congruence_suites_pass() {
    let o = lacunary(&["congruence", "--from", "5", "--to", "60", "--max-N", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all congruence checks passed"));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn oeis_appendix_files_match() {
    let cases = [
        ("b011782.txt", "2", "plain"),
        ("b146559.txt", "2", "star"),
        ("b024493.txt", "3", "plain"),
        ("b057681.txt", "3", "star"),
        ("b038503.txt", "4", "plain"),
        ("b139398.txt", "5", "plain"),
    ];
    for (file, n, kind) in cases {
        let o = lacunary(&["oeis-check", &data(file), "--N", n, "--kind", kind]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}{}", stdout(&o), stderr(&o));
        assert!(stdout(&o).contains("20 terms match"), "{file}: {}", stdout(&o));
    }
}

#[test]
fn oeis_offset_and_dashes() {
    let o = lacunary(&["oeis-check", &data("tstar4_offset1.txt"), "--N", "4", "--kind", "star"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("m = 1..19"));
    let o = lacunary(&["oeis-check", &data("tstar5_dashes.txt"), "--N", "5", "--kind", "star", "--engine", "recurrence"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("21 terms match"));
}

#[test]
fn oeis_bad_files_exit_2() {
    let o = lacunary(&["oeis-check", &data("garbled.txt"), "--N", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 7"), "{}", stderr(&o));
    let o = lacunary(&["oeis-check", &data("gap.txt"), "--N", "3"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    let o = lacunary(&["oeis-check", &data("does_not_exist.txt"), "--N", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oeis_mismatch_exit_1() {
    let o = lacunary(&["oeis-check", &data("b024493.txt"), "--N", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first mismatch at m = 3"), "{}", stdout(&o));
}

#[test]
fn oeis_file_from_tempdir() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b000001.txt");
    std::fs::write(&path, "# T(2, 1, m)\n0 0\n1 1\n2 2\n3 4\n4 8\n").unwrap();
    let o = lacunary(&["oeis-check", path.to_str().unwrap(), "--N", "2", "--r", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).starts_with("b000001: 5 terms match T(2, 1, m)"), "{}", stdout(&o));
}

#[test]
fn bench_engines_agree() {
    let o = lacunary(&["bench", "--N", "12", "--m", "1000000", "--modulus", "p2:1000003", "--engines", "poly,circulant"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let values: Vec<&str> = text.lines().skip(1).map(|l| l.split_whitespace().last().unwrap()).collect();
    assert_eq!(values.len(), 2);
    assert_eq!(values[0], values[1]);
}

#[test]
fn bench_reports_engine_error() {
    let o = lacunary(&["bench", "--engines", "cosine", "--m", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("error:"));
}

#[test]
fn block_probe_finds_matching_reading() {
    let o = lacunary(&["eq17-probe", "--N", "4", "--max-m", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("C_N blocks, exponent m: matches 7/7"), "{}", stdout(&o));
}

#[test]
fn help_exits_zero() {
    let o = lacunary(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("compute"));
}
