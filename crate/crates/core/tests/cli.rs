use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qturan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qturan"))
        .args(args)
        .env_remove("QTURAN_DIGITS")
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_linearization_exact() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = qturan(&[
        "verify", "--identity", "linearization", "--mu", "1", "--alpha", "1", "--beta", "1", "--q", "1/2", "--order", "30",
        "--mode", "exact", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&out);
    assert_eq!(r["residuals"][0]["exact_zero"], Value::Bool(true));
    assert_eq!(r["config"]["q"], "1/2");
    assert_eq!(r["config"]["params"]["mu"][0], "1/1");
    assert!(r["timing"].is_null());
}

#[test]
fn degenerate_turanian_is_zero() {
    let o = qturan(&["turanian", "--family", "heine-f", "--mu", "1", "--alpha", "0", "--beta", "2", "--q", "1/2", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["verdicts"][0]["verdict"], "identically_zero");
    assert_eq!(r["verdicts"][0]["passes"], Value::Bool(true));
}

#[test]
fn example_one_scan() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("scan.csv");
    let o = qturan(&[
        "scan", "--family", "g", "--a", "2,3", "--b", "1,2", "--q", "1/2", "--mu-grid", "0.5:3:0.5", "--alpha", "1", "--beta", "2",
        "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    let verdicts = r["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 6);
    for v in verdicts {
        assert_eq!(v["expected"], "all_non_neg");
        assert_eq!(v["passes"], Value::Bool(true));
    }
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,mu,alpha,beta,q,verdict,expected,passes,min_margin"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn exact_reports_are_reproducible_across_pool_sizes() {
    let args = ["scan", "--family", "heine-f", "--mu", "1/2:2:1/2", "--alpha", "1,2", "--beta", "1/2", "--p", "3/4", "--order", "12"];
    let one = qturan(&[&args[..], &["--threads", "1"]].concat());
    let many = qturan(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let r: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(r["config"]["q"], "9/16");
    assert_eq!(r["config"]["p"], "3/4");
    // ordered by grid index
    let idx: Vec<u64> = r["verdicts"].as_array().unwrap().iter().map(|v| v["index"].as_u64().unwrap()).collect();
    assert_eq!(idx, (0..8).collect::<Vec<_>>());
}

#[test]
fn failing_points_give_exit_one_with_the_point() {
    let o = qturan(&["scan", "--family", "g", "--a", "2,3", "--b", "1,2", "--q", "1/2", "--mu", "1", "--alpha", "1/3", "--order", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("alpha=1/3"), "{err}");
    let skipped = qturan(&[
        "scan", "--family", "g", "--a", "2,3", "--b", "1,2", "--q", "1/2", "--mu", "1", "--alpha", "1/3,1", "--order", "5",
        "--skip-unsupported",
    ]);
    assert_eq!(skipped.status.code(), Some(0));
}

#[test]
fn off_grid_exponents_are_rejected_in_exact_mode() {
    let o = qturan(&["turanian", "--family", "heine-f", "--mu", "1/3", "--q", "1/2", "--order", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exact mode cannot represent"));
    let f = qturan(&["turanian", "--family", "heine-f", "--mu", "1/3", "--q", "1/2", "--order", "5", "--mode", "float", "--digits", "30"]);
    assert_eq!(f.status.code(), Some(0));
}

#[test]
fn config_errors_exit_two() {
    assert_eq!(qturan(&["scan", "--family", "heine-f", "--mu", "1", "--q", "2"]).status.code(), Some(2));
    assert_eq!(qturan(&["scan", "--family", "heine-f", "--mu", "1:0:1", "--q", "1/2"]).status.code(), Some(2));
    assert_eq!(qturan(&["scan", "--family", "nope", "--mu", "1", "--q", "1/2"]).status.code(), Some(2));
    assert_eq!(qturan(&["verify", "--identity", "rahman", "--nu", "1", "--p", "1/2"]).status.code(), Some(2));
    assert_eq!(qturan(&["scan", "--family", "heine-f", "--mu", "1", "--q", "1/2", "--p", "1/2"]).status.code(), Some(2));
}

#[test]
fn digits_come_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qturan"))
        .args(["verify", "--identity", "connection", "--alpha", "1/2", "--x", "1", "--q", "1/2", "--mode", "float"])
        .env("QTURAN_DIGITS", "40")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["config"]["digits"], 40);
}

#[test]
fn report_command_rereads_and_reexits() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let bad = dir.path().join("bad.json");
    qturan(&["conditions", "--a", "1,1,1", "--b", "2,2", "--q", "1/2", "--y", "0.1:10:0.1", "--out", good.to_str().unwrap()]);
    let r = json(&good);
    assert_eq!(r["verdicts"][0]["verdict"], "case_a");
    assert_eq!(r["verdicts"][2]["verdict"], "increasing");
    let o = qturan(&["report", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    qturan(&["scan", "--family", "g", "--a", "2,3", "--b", "1,2", "--q", "1/2", "--mu", "1", "--alpha", "5", "--order", "5", "--out", bad.to_str().unwrap()]);
    let csv = dir.path().join("bad.csv");
    let o = qturan(&["report", bad.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(std::fs::read_to_string(csv).unwrap().starts_with("kind,index,name,point,result,passes\n"));
}

#[test]
fn eval_writes_one_row_per_coefficient() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("e.csv");
    let o = qturan(&["eval", "--family", "heine-f", "--mu", "1,2", "--q", "1/2", "--order", "4", "--x", "1/2", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * 5);
    // 1 / ((q;q)_1 (q;q)_1) = 4 at mu = 1
    assert!(text.lines().any(|l| l == "heine-f,1/1,1/2,1,4/1"), "{text}");
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["margins"].as_array().unwrap().len(), 2);
}
