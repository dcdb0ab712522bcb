use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vsecant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn column(v: &Value, key: &str) -> Vec<u64> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[key].as_u64().unwrap())
        .collect()
}

fn ring_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn dims_of_conic_veronese() {
    let v = json(&[
        "dims", "--vars", "2", "--r", "1", "--d", "2", "--n-max", "3",
    ]);
    assert_eq!(column(&v, "dim"), [0, 1, 3]);
    assert_eq!(v["command"], "dims");
    assert_eq!(v["ring"]["vars"], 2);
    assert!(v["rows"][0].get("generated").is_none());
}

#[test]
fn dims_of_one_variable_vanish() {
    for r in ["1", "2", "3"] {
        let v = json(&[
            "dims", "--vars", "1", "--r", r, "--d-max", "4", "--n-max", "3",
        ]);
        assert!(column(&v, "dim").iter().all(|&d| d == 0));
    }
}

#[test]
fn dims_of_secant_lines_to_quartic() {
    let v = json(&[
        "dims", "--vars", "2", "--r", "2", "--d", "4", "--n-max", "3",
    ]);
    assert_eq!(column(&v, "dim"), [0, 0, 1]);
}

#[test]
fn profile_summaries() {
    let cases = [
        (["--vars", "2", "--r", "1", "--d", "3"], 2),
        (["--vars", "2", "--r", "2", "--d", "4"], 3),
        (["--vars", "1", "--r", "1", "--d", "3"], 0),
    ];
    for (args, expected) in cases {
        let mut full = vec!["profile", "--n-max", "4"];
        full.extend(args);
        let v = json(&full);
        assert_eq!(v["summary"]["max_new_n"], expected, "{args:?}");
    }
}

#[test]
fn di_profile_of_secant_lines() {
    let v = json(&[
        "profile", "--mode", "di", "--vars", "2", "--r", "2", "--d-max", "5", "--n-max", "4",
    ]);
    assert_eq!(v["summary"]["max_new_n"], 3);
    for row in v["rows"].as_array().unwrap() {
        assert!(row["new"] == 0 || row["n"] == 3, "{row}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--seed", "7", "--trials", "15"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = [
        "profile", "--mode", "di", "--vars", "2", "--d-max", "3", "--n-max", "3",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn csv_mirrors_json() {
    let base = [
        "profile", "--vars", "2", "--r", "2", "--d-max", "4", "--n-max", "4",
    ];
    let v = json(&base);
    let mut with_csv = base.to_vec();
    with_csv.extend(["--format", "csv"]);
    let out = run(&with_csv);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d,n,dim,generated,new"));
    let from_json: Vec<String> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            format!(
                "{},{},{},{},{}",
                r["d"], r["n"], r["dim"], r["generated"], r["new"]
            )
        })
        .collect();
    assert_eq!(lines.map(str::to_string).collect::<Vec<_>>(), from_json);
}

#[test]
fn ring_spec_file() {
    let f = ring_file(r#"{"vars": 3, "relations": ["x0*x2 - x1^2"]}"#);
    let path = f.path().to_str().unwrap();
    let v = json(&[
        "dims", "--ring", path, "--r", "1", "--d", "1", "--n-max", "2",
    ]);
    // the conic itself: one quadric relation among the three linear forms
    assert_eq!(column(&v, "dim"), [0, 1]);
    assert_eq!(v["ring"]["relations"][0], "x0*x2 - x1^2");
}

#[test]
fn input_errors_exit_two() {
    let bad = ring_file(r#"{"vars": 2, "relations": ["x0^2 - x1"]}"#);
    let unknown = ring_file(r#"{"vars": 2, "extra": 1}"#);
    for path in [
        bad.path().to_str().unwrap(),
        unknown.path().to_str().unwrap(),
        "/nonexistent/ring.json",
    ] {
        let out = run(&["dims", "--ring", path, "--d", "2", "--n-max", "2"]);
        assert_eq!(out.status.code(), Some(2), "{path}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(
        run(&["dims", "--d", "2", "--n-max", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["dims", "--vars", "2", "--n-max", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["dims", "--vars", "2", "--d", "0", "--n-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["profile", "--vars", "2", "--d", "2", "--n-max", "2", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn limits_exit_three_unless_forced() {
    for args in [
        ["--vars", "4", "--d", "1", "--n-max", "2", "--r", "1"],
        ["--vars", "2", "--d", "6", "--n-max", "2", "--r", "1"],
        ["--vars", "2", "--d", "1", "--n-max", "5", "--r", "1"],
        ["--vars", "2", "--d", "1", "--n-max", "2", "--r", "4"],
    ] {
        let mut full = vec!["dims"];
        full.extend(args);
        assert_eq!(run(&full).status.code(), Some(3), "{args:?}");
        full.push("--force");
        assert_eq!(run(&full).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn verify_with_no_trials_passes_vacuously() {
    let v = json(&["verify", "--trials", "0"]);
    assert_eq!(v["summary"]["passed"], true);
    assert_eq!(v["summary"]["checks"], 0);
}

#[test]
fn verify_passes_at_seed_42() {
    let v = json(&[
        "verify", "--seed", "42", "--trials", "100", "--vars", "2", "--d-max", "3", "--n-max", "3",
    ]);
    assert_eq!(v["summary"]["passed"], true);
    assert_eq!(v["summary"]["failures"], 0);
    assert!(v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["failures"] == 0));
}
