//! End-to-end runs of the binary against the shipped data files.
//!
//! Reports are compared with `tests/golden/*.json` after zeroing
//! `duration_ms`. Set `BRAIDCHECK_BLESS=1` to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::Command;

use braidcheck::cli::CheckReport;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data")
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_braidcheck"))
        .args(args)
        .current_dir(data_dir())
        .env_remove("BRAIDCHECK_MAX_DIM")
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).expect("utf-8"), out.status.code().expect("exit code"))
}

fn strip_duration(report: &str) -> String {
    let lines: Vec<&str> = report
        .lines()
        .map(|l| if l.trim_start().starts_with("\"duration_ms\"") { "  \"duration_ms\": 0" } else { l })
        .collect();
    lines.join("\n") + "\n"
}

/// `(golden name, arguments, expected exit code)`
const CASES: &[(&str, &[&str], i32)] = &[
    ("factorizable_dz2", &["factorizable", "dz2.hopf"], 0),
    ("factorizable_cz5", &["factorizable", "cz5.hopf"], 1),
    ("factorizable_ds3", &["factorizable", "ds3.hopf"], 0),
    ("factorizable_uq3", &["factorizable", "uq3.hopf"], 0),
    ("report_dz3", &["invertibility-report", "dz3.hopf"], 0),
    ("report_cz2", &["invertibility-report", "cz2.hopf"], 1),
    ("report_sweedler1", &["invertibility-report", "sweedler1.hopf"], 1),
    ("report_dsweedler", &["invertibility-report", "dsweedler.hopf"], 0),
    ("muger_rep_z2", &["muger-center", "rep_z2_symmetric.mod"], 1),
    ("muger_semion", &["muger-center", "semion.mod"], 0),
    ("modular_check_ds3", &["modular-check", "ds3.mod"], 0),
    ("modular_check_rep_z2", &["modular-check", "rep_z2_symmetric.mod"], 1),
    ("witt_product", &["witt-op", "product", "semion.mod", "dz2.mod"], 0),
    ("witt_reverse", &["witt-op", "reverse", "semion.mod"], 0),
    ("witt_double", &["witt-op", "double", "z3.group"], 0),
    ("azumaya_m2", &["azumaya", "m2.alg"], 0),
    ("azumaya_qxq", &["azumaya", "qxq.alg"], 1),
    ("azumaya_dual_numbers", &["azumaya", "dual_numbers.alg"], 1),
    ("azumaya_gaussian", &["azumaya", "gaussian.alg"], 1),
    ("verify_cz2_module", &["verify", "cz2.hopf", "z2_sign.module"], 0),
    ("verify_s3", &["verify", "s3.group"], 0),
    ("verify_bad_coassoc", &["verify", "bad_coassoc.hopf"], 2),
    ("verify_bad_index", &["verify", "bad_index.hopf"], 2),
    ("build_sweedler", &["build-example", "sweedler:1"], 0),
];

#[test]
fn golden_reports_and_exit_codes() {
    let bless = std::env::var_os("BRAIDCHECK_BLESS").is_some();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, args, code) in CASES {
        let (out, got) = run(args);
        assert_eq!(got, *code, "{args:?}");
        let stable = strip_duration(&out);
        let path = golden.join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, &stable).unwrap();
        } else {
            let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
            assert_eq!(stable, want, "{args:?}");
        }
        let parsed: CheckReport = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", out, "JSON round trip for {name}");
    }
}

#[test]
fn every_shipped_file_has_an_exit_code() {
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let path = entry.unwrap().path();
        let file = path.file_name().unwrap().to_str().unwrap().to_string();
        let (_, code) = run(&["verify", &file]);
        // symmetric data has a singular S, a valid negative result
        let expect = match file.as_str() {
            f if f.starts_with("bad_") || f.ends_with(".module") => 2,
            "rep_z2_symmetric.mod" => 1,
            _ => 0,
        };
        assert_eq!(code, expect, "verify {file}");
    }
}

#[test]
fn reports_are_deterministic() {
    let (a, _) = run(&["invertibility-report", "ds3.hopf"]);
    let (b, _) = run(&["invertibility-report", "ds3.hopf"]);
    assert_eq!(strip_duration(&a), strip_duration(&b));
}

#[test]
fn max_dim_and_field_limits() {
    let (_, code) = run(&["factorizable", "ds3.hopf", "--max-dim", "16"]);
    assert_eq!(code, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_braidcheck"))
        .args(["factorizable", "ds3.hopf"])
        .current_dir(data_dir())
        .env("BRAIDCHECK_MAX_DIM", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));

    assert_eq!(run(&["modular-check", "semion.mod", "--field", "zeta(8)"]).1, 0);
    assert_eq!(run(&["modular-check", "semion.mod", "--field", "zeta(4)"]).1, 2);
}

#[test]
fn text_format_and_usage_errors() {
    let (out, code) = run(&["factorizable", "dz2.hopf", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("[pass] drinfeld map bijective (rank 4 of 4)"));
    assert!(out.ends_with("verdict: true\n"));
    assert_eq!(run(&["no-such-command"]).1, 2);
    assert_eq!(run(&["factorizable", "missing.hopf"]).1, 2);
    assert_eq!(run(&["azumaya", "dz2.hopf"]).1, 2);
}
