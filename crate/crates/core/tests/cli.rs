use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rho-bounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("rho-bounds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn compute_prints_record() {
    let o = bin(&["compute", "C(6)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rho: 2^3 * 3^4"), "{out}");
    assert!(out.contains("psi: 21"));
    assert!(out.contains("omega: {1, 2, 3, 6}"));

    let o = bin(&["compute", "Frob(7,3)", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rho"], "3^14 * 7^6");
    assert_eq!(v["omega"], serde_json::json!([1, 3, 7]));
}

#[test]
fn classify_reports_flags() {
    let o = bin(&["classify", "S(4)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in [
        "cyclic=false",
        "nilpotent=false",
        "supersoluble=false",
        "sylow_tower=false",
        "metacyclic_paper=false",
    ] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
    let o = bin(&["classify", "Dic(3)", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["supersoluble"], true);
    assert_eq!(v["sylow_splits"][0]["centralizer_order"], 2);
}

#[test]
fn default_corpus_verifies_and_formats_agree() {
    let json_path = scratch("report.json");
    let csv_path = scratch("report.csv");
    let o = bin(&[
        "verify",
        "--corpus",
        "default",
        "--format",
        "json",
        "--out",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = bin(&[
        "verify",
        "--corpus",
        "default",
        "--format",
        "csv",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));

    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let rows = report["rows"].as_array().unwrap();
    assert!(report["corpus_hash"].as_str().unwrap().len() == 64);

    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        [
            "label",
            "tag",
            "applicable",
            "holds",
            "tight",
            "lhs",
            "rhs",
            "notes"
        ]
    );
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(rows) {
        let holds = match &row["holds"] {
            Value::Null => "N/A".to_string(),
            v => v.to_string(),
        };
        let expected = [
            row["label"].as_str().unwrap().to_string(),
            row["tag"].as_str().unwrap().to_string(),
            row["applicable"].to_string(),
            holds,
            row["tight"].to_string(),
            row["lhs"].as_str().unwrap().to_string(),
            row["rhs"].as_str().unwrap().to_string(),
            row["notes"].as_str().unwrap().to_string(),
        ];
        let got: Vec<&str> = rec.iter().collect();
        assert_eq!(got, expected);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = bin(&["verify", "--corpus", "default"]);
    let b = bin(&["--jobs", "1", "verify", "--corpus", "default"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn violations_and_usage_errors_have_distinct_codes() {
    let path = scratch("over-cap.corpus");
    std::fs::write(&path, "big: C(600)\n").unwrap();
    let o = bin(&[
        "verify",
        "--corpus",
        path.to_str().unwrap(),
        "--tags",
        "GP_GLOBAL",
    ]);
    assert_eq!(o.status.code(), Some(1));
    // raising the cap makes the same corpus pass
    let o = bin(&[
        "--cap",
        "600",
        "verify",
        "--corpus",
        path.to_str().unwrap(),
        "--tags",
        "GP_GLOBAL",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let bad = scratch("bad.corpus");
    std::fs::write(&bad, "a: C(2)\nb: Dic 3\n").unwrap();
    let o = bin(&["verify", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains(":2:4:"), "{err}");

    assert_eq!(bin(&["compute"]).status.code(), Some(2));
    assert_eq!(bin(&["compute", "SD(5,3,2)"]).status.code(), Some(2));
}

#[test]
fn numeric_subcommands() {
    let o = bin(&[
        "remarks",
        "--p-max",
        "97",
        "--alpha-max",
        "8",
        "--qp-max",
        "100",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["REMARK_QP"]["applicable"], 5050);
    assert_eq!(v["summary"]["REMARK_P"]["violations"], 0);

    let o = bin(&["abelian", "--n-max", "64"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ABELIAN_DISTINGUISH  applicable=64 holds=64"));

    let o = bin(&["table", "--n-max", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 41);
    assert_eq!(bin(&["table", "--n-max", "1000"]).status.code(), Some(2));
}
