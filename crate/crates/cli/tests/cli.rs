#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::path::Path;
use std::process::{Command, Output};

use redisc_core::{parse_poly, BigInt, FamilySpec, VarTable};
use serde_json::Value;

fn redisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_redisc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema_validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(include_str!("../schema/theorem-report.schema.json")).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

#[test]
fn ddisc_prints_the_cubic_expansion() {
    let o = redisc(&["ddisc", "--n", "3", "--k", "1", "--format", "text", "--letters"]);
    assert_eq!(o.status.code(), Some(0));
    let t = VarTable::family_letters(3).unwrap();
    let p = |s: &str| parse_poly(s, &t).unwrap();
    let expected = (&p("c") * &p("b^3 - 27*c^2").pow(3)).scale(&BigInt::from(-64));
    assert_eq!(stdout(&o), format!("{expected}\n"));
}

#[test]
fn default_naming_is_indexed() {
    let o = redisc(&["discriminant", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let t = VarTable::family(3).unwrap();
    assert_eq!(
        parse_poly(stdout(&o).trim(), &t).unwrap(),
        parse_poly("4*a1^3*a3 - a1^2*a2^2 - 18*a1*a2*a3 + 4*a2^3 + 27*a3^2", &t).unwrap()
    );
}

#[test]
fn quartic_discriminant_round_trips_bit_exactly() {
    let o = redisc(&["discriminant", "--n", "4", "--letters"]);
    let text = stdout(&o);
    let fam = FamilySpec::with_letters(4).unwrap();
    let parsed = parse_poly(text.trim(), fam.table()).unwrap();
    assert_eq!(parsed, support::printed(support::R4, fam.table()));
    assert_eq!(format!("{parsed}\n"), text);
}

#[test]
fn verify_theorem_reproduces_the_quartic_factors() {
    let o = redisc(&["verify-theorem", "--n", "4", "--k", "all", "--format", "json", "--letters"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let reports: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let fam = FamilySpec::with_letters(4).unwrap();
    let validator = schema_validator();
    for (rep, (k, constant, d, m, t)) in reports.iter().zip(support::QUARTIC_FACTORS) {
        assert!(validator.is_valid(rep));
        assert_eq!(rep["k"], k);
        assert_eq!(rep["d"], d);
        assert_eq!(rep["c"]["num"], constant.to_string());
        assert_eq!(rep["c"]["den"], "1");
        let got_m = parse_poly(rep["M"].as_str().unwrap(), fam.table()).unwrap();
        let got_t = parse_poly(rep["T"].as_str().unwrap(), fam.table()).unwrap();
        assert_eq!(got_m, support::printed(m, fam.table()));
        assert_eq!(got_t, support::printed(t, fam.table()));
        assert!(rep["timings_ms"].is_null());
    }
}

#[test]
fn timings_flag_fills_the_timings_field() {
    let o = redisc(&["verify-theorem", "--n", "3", "--k", "2", "--format", "json", "--timings"]);
    assert_eq!(o.status.code(), Some(0));
    let rep: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(schema_validator().is_valid(&rep));
    assert!(rep["timings_ms"]["pipeline"].as_f64().unwrap() >= 0.0);
    // M is trivial below n = 4
    assert_eq!(rep["M"], "1");
}

#[test]
fn schema_rejects_malformed_reports() {
    let v = schema_validator();
    let bad: Value = serde_json::json!({"n": 4, "k": 1, "d": 2, "c": {"num": "6912"}, "M": "1", "T": "1",
        "qhd": {}, "checks": {"x": true}, "timings_ms": null});
    assert!(!v.is_valid(&bad));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify-theorem", "--n", "2", "--k", "1"][..],
        &["ddisc", "--n", "9", "--k", "1"],
        &["ddisc", "--n", "1", "--k", "1"],
        &["ddisc", "--n", "4", "--k", "0"],
        &["ddisc", "--n", "4", "--k", "5"],
        &["ddisc", "--n", "4"],
        &["ddisc", "--n", "4", "--k", "two"],
        &["discriminant", "--n", "4", "--format", "xml"],
        &["tk", "--n", "2", "--k", "1"],
        &["ddisc", "--n", "2", "--k", "2"],
        &["frobnicate"],
    ] {
        assert_eq!(redisc(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(redisc(&["--help"]).status.code(), Some(0));
}

#[test]
fn failed_checks_exit_1() {
    // the printed degree of dR/da_k is off for k >= n-1
    let o = redisc(&["verify-qhd", "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] (4) QHD(R_a3)"));
    // the restriction of R to a1 = a3 = 0 keeps three terms
    let o = redisc(&["verify-lemmas", "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] k=2"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-theorem", "--n", "4", "--k", "all", "--seed", "9"];
    assert_eq!(redisc(&args).stdout, redisc(&args).stdout);
    let j = ["verify-lemmas", "--n", "3", "--format", "json"];
    assert_eq!(redisc(&j).stdout, redisc(&j).stdout);
}

fn cache_files(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut v: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn cache_hits_are_byte_identical_and_corruption_recovers() {
    let dir = tempfile::tempdir().unwrap();
    let cd = dir.path().to_str().unwrap();
    let args = ["verify-theorem", "--n", "4", "--k", "1", "--cache-dir", cd, "--format", "json"];
    let first = redisc(&args);
    assert_eq!(first.status.code(), Some(0));
    let files = cache_files(dir.path());
    assert_eq!(files.len(), 1);
    assert!(files[0].extension().is_some_and(|e| e == "poly"));
    let stored = std::fs::read_to_string(&files[0]).unwrap();
    assert!(stored.starts_with("vars: a1 a2 a3 a4\n"));
    assert!(stored.lines().last().unwrap().starts_with("checksum: "));

    let second = redisc(&args);
    assert_eq!(second.stdout, first.stdout);
    assert!(second.stderr.is_empty());

    std::fs::write(&files[0], stored.replacen('1', "7", 3)).unwrap();
    let third = redisc(&args);
    assert_eq!(third.status.code(), Some(0));
    assert_eq!(third.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("discarding cache entry"));
    assert_eq!(std::fs::read_to_string(&files[0]).unwrap(), stored);

    let uncached = redisc(&["verify-theorem", "--n", "4", "--k", "1", "--format", "json"]);
    assert_eq!(uncached.stdout, first.stdout);
}

#[test]
fn letters_do_not_change_cache_entries() {
    let dir = tempfile::tempdir().unwrap();
    let cd = dir.path().to_str().unwrap();
    let plain = redisc(&["ddisc", "--n", "3", "--k", "3", "--cache-dir", cd]);
    let lettered = redisc(&["ddisc", "--n", "3", "--k", "3", "--cache-dir", cd, "--letters"]);
    assert_eq!(cache_files(dir.path()).len(), 1);
    assert_ne!(plain.stdout, lettered.stdout);
    let t = VarTable::family_letters(3).unwrap();
    assert_eq!(
        parse_poly(stdout(&lettered).trim(), &t).unwrap(),
        parse_poly("a^2 - 3*b", &t).unwrap().pow(3).scale(&BigInt::from(-432))
    );
}
