//! End-to-end tests of the `stieltjes` binary: output documents, exit codes
//! and the result cache.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_stieltjes"));
    c.env_remove("STIELTJES_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn euler_constant_to_thirty_digits() {
    let o = run(&["compute", "gamma_m", "-m", "0", "-x", "1", "--digits", "30"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc = json(&o);
    assert!(doc["value"].as_str().unwrap().starts_with("0.577215664901532860606512090082"));
    for field in ["quantity", "params", "method", "value", "err_estimate", "terms_used", "digits", "converged"] {
        assert!(doc.get(field).is_some(), "missing {field}");
    }
    assert!(doc["metadata"]["elapsed_ms"].is_u64());
}

#[test]
fn gamma1_at_one_half_reports_its_closed_form() {
    let o = run(&["compute", "gamma_m", "-m", "1", "-x", "1/2", "--method", "hasse"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["params"]["x"], "1/2");
    assert_eq!(doc["closed_form"]["form"], "gamma1-half-closed-form");
    assert_eq!(doc["closed_form"]["value"], doc["value"]);
    let residual: f64 = doc["closed_form"]["residual"].as_str().unwrap().parse().unwrap();
    assert!(residual < 1e-18);
}

#[test]
fn basel_value() {
    // Σ_{n≤N} 1/n² + 1/N − 1/(2N²) + 1/(6N³) with N = 10⁴ is accurate to ~1e-20.
    let n = 10_000u64;
    let mut s = 0.0f64;
    for k in (1..=n).rev() {
        s += 1.0 / (k as f64 * k as f64);
    }
    let nf = n as f64;
    s += 1.0 / nf - 0.5 / (nf * nf) + 1.0 / (6.0 * nf * nf * nf);
    let o = run(&["compute", "zeta", "-s", "2", "-x", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: f64 = json(&o)["value"].as_str().unwrap().parse().unwrap();
    assert!((v - s).abs() < 1e-14);
    assert!(json(&o)["value"].as_str().unwrap().starts_with("1.64493406684822643"));
}

#[test]
fn complex_value_has_an_imaginary_part() {
    let o = run(&["compute", "sondow_gamma", "--angle", "1/2", "--method", "2q"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let a = json(&o);
    let o = run(&["compute", "sondow_gamma", "--angle", "1/2"]);
    let b = json(&o);
    let (ar, br): (f64, f64) = (a["value"].as_str().unwrap().parse().unwrap(), b["value"].as_str().unwrap().parse().unwrap());
    let (ai, bi): (f64, f64) = (a["imag"].as_str().unwrap().parse().unwrap(), b["imag"].as_str().unwrap().parse().unwrap());
    assert!((ar - br).abs() < 1e-12 && (ai - bi).abs() < 1e-12);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "nonsense", "-x", "1"][..],
        &["compute", "gamma_m", "-x", "abc"],
        &["compute", "gamma_m", "-x", "1", "--digits", "5"],
        &["compute", "gamma_m", "-x", "1", "--digits", "500"],
        &["compute", "gamma_m", "-x", "1/0"],
        &["compute", "gamma_m", "-x", "-1"],
        &["compute", "gamma_m", "-x", "1", "--method", "fourier"],
        &["compute", "zeta", "-x", "1"],
        &["compute", "zeta", "-s", "1", "-x", "1"],
        &["validate", "--suite", ""],
        &["validate", "--suite", "no-such-suite"],
        &["table", "digamma", "--grid", "0:1:3"],
        &["table", "digamma", "--grid", "1:2"],
        &["table", "digamma", "--grid", "1:2:0"],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn non_convergence_exits_3_with_a_document() {
    let o = run(&["compute", "gamma_m", "-m", "1", "-x", "1", "--method", "bell", "--max-terms", "3"]);
    assert_eq!(code(&o), 3);
    let doc = json(&o);
    assert_eq!(doc["converged"], false);
    assert!(doc["value"].is_string());
    assert!(stderr(&o).contains("no convergence"));
}

#[test]
fn adamchik_suite_covers_three_fractions() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["validate", "--suite", "adamchik", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let metas: Vec<&str> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["id"] == "eq-3.36-adamchik")
        .map(|r| r["meta"].as_str().unwrap())
        .collect();
    assert_eq!(metas, ["p/q = 1/3", "p/q = 1/4", "p/q = 2/5"]);
    for r in doc["reports"].as_array().unwrap() {
        assert!(r["residual"].is_string() && r["pass"] == true);
    }
}

#[test]
fn full_suite_passes_and_records_discrepancies() {
    let o = run(&["validate", "--suite", "all", "--digits", "20", "--json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc = json(&o);
    let reports = doc["reports"].as_array().unwrap();
    let ids: std::collections::BTreeSet<&str> = reports.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert!(ids.len() >= 40, "{} distinct identities", ids.len());
    let sorted: Vec<&str> = reports.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
    let quarter = reports.iter().find(|r| r["id"] == "ramanujan-closed-form-gamma-1-4").unwrap();
    assert_eq!(quarter["pass"], false);
    assert!(quarter["meta"].as_str().unwrap().contains("paper-discrepancy"));
    let three_quarters = reports.iter().find(|r| r["id"] == "ramanujan-closed-form-gamma-3-4").unwrap();
    assert_eq!(three_quarters["pass"], true);
    assert_eq!(doc["summary"]["unexpected"].as_array().unwrap().len(), 0);
}

#[test]
fn validation_is_deterministic() {
    let a = json(&run(&["validate", "--suite", "ramanujan,adamchik", "--json"]));
    let b = json(&run(&["validate", "--suite", "adamchik,ramanujan", "--json"]));
    assert_eq!(a["reports"], b["reports"]);
    assert_eq!(a["summary"], b["summary"]);
}

#[test]
fn digamma_table() {
    let o = run(&["table", "digamma", "--grid", "1:5:5"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let mut r = csv::Reader::from_reader(&o.stdout[..]);
    assert_eq!(r.headers().unwrap(), vec!["x", "value", "err_estimate", "terms_used", "converged"]);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);
    let gamma = 0.5772156649015329;
    let mut harmonic = 0.0;
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(row[0].parse::<f64>().unwrap(), (k + 1) as f64);
        let v: f64 = row[1].parse().unwrap();
        assert!((v - (harmonic - gamma)).abs() < 1e-14, "ψ({})", k + 1);
        harmonic += 1.0 / (k + 1) as f64;
    }
    assert!((harmonic - 1.0 / 5.0 - 25.0 / 12.0).abs() < 1e-15);
}

#[test]
fn gamma1_table_is_antisymmetric_about_one_half() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = run(&["table", "gamma_m", "-m", "1", "--grid", "0.1:0.9:9", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    let xs: Vec<&str> = rows.iter().map(|r| r["x"].as_str().unwrap()).collect();
    assert_eq!(xs, ["0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"]);
    let v: Vec<f64> = rows.iter().map(|r| r["value"].as_str().unwrap().parse().unwrap()).collect();
    // D(x) = γ_1(1−x) − γ_1(x) is odd about x = ½ and positive on (0, ½).
    for i in 0..4 {
        let d = v[8 - i] - v[i];
        assert!(d > 0.0);
        assert!((d + (v[i] - v[8 - i])).abs() < 1e-15);
    }
    // Cross-check one row against a direct compute.
    let single = json(&run(&["compute", "gamma_m", "-m", "1", "-x", "0.3"]));
    assert_eq!(single["value"], rows[2]["value"]);
}

#[test]
fn single_point_table() {
    let o = run(&["table", "log_gamma", "--grid", "2.5:2.5:1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().count(), 2);
}

fn cached_compute(dir: &Path, digits: &str) -> Output {
    bin()
        .env("STIELTJES_CACHE_DIR", dir)
        .args(["compute", "gamma_m", "-m", "1", "-x", "1/3", "--digits", digits])
        .output()
        .unwrap()
}

#[test]
fn cache_round_trip_and_precision_rule() {
    let dir = tempfile::tempdir().unwrap();
    let first = cached_compute(dir.path(), "25");
    assert_eq!(code(&first), 0);
    assert_eq!(json(&first)["metadata"]["cache"], "miss");
    let second = cached_compute(dir.path(), "25");
    assert_eq!(json(&second)["metadata"]["cache"], "hit");
    let (mut a, mut b) = (json(&first), json(&second));
    a.as_object_mut().unwrap().remove("metadata");
    b.as_object_mut().unwrap().remove("metadata");
    assert_eq!(a, b);

    let higher = cached_compute(dir.path(), "30");
    assert_eq!(json(&higher)["metadata"]["cache"], "miss");
    assert_ne!(json(&higher)["value"], a["value"]);

    // The flag overrides the environment variable.
    let other = tempfile::tempdir().unwrap();
    let o = bin()
        .env("STIELTJES_CACHE_DIR", dir.path())
        .args(["--cache-dir", other.path().to_str().unwrap(), "compute", "gamma_m", "-m", "1", "-x", "1/3", "--digits", "25"])
        .output()
        .unwrap();
    assert_eq!(json(&o)["metadata"]["cache"], "miss");
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = json(&cached_compute(dir.path(), "20"));
    for entry in fs::read_dir(dir.path()).unwrap() {
        fs::write(entry.unwrap().path(), b"{\"key\": truncated").unwrap();
    }
    let o = cached_compute(dir.path(), "20");
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"), "{}", stderr(&o));
    assert_eq!(json(&o)["value"], fresh["value"]);
    assert_eq!(json(&cached_compute(dir.path(), "20"))["metadata"]["cache"], "hit");
}

#[test]
fn unwritable_cache_degrades_to_compute() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, b"not a directory").unwrap();
    let o = cached_compute(&blocker.join("cache"), "20");
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"));
    assert!(json(&o)["value"].is_string());
}
