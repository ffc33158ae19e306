use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rotabrace(args: &[&str], catalog: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rotabrace"));
    cmd.args(args).env_remove("ROTABRACE_CATALOG");
    if let Some(dir) = catalog {
        cmd.env("ROTABRACE_CATALOG", dir);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn enumerate_builtins() {
    let out = rotabrace(&["enumerate-rb", "builtin:Z2"], None);
    assert!(out.status.success());
    assert_eq!(json(&out)["count"], 2);
    let out = rotabrace(&["enumerate-rb", "CS3", "--workers", "3"], None);
    assert_eq!(
        json(&out)["operators"],
        serde_json::json!([[0, 0, 0], [0, 0, 2], [0, 1, 2]])
    );
}

#[test]
fn brace_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let op = dir.path().join("proj.json");
    fs::write(&op, r#"{"carrier": "S3", "images": [0, 1, 1, 1, 0, 0]}"#).unwrap();
    let out = rotabrace(&["verify", op.to_str().unwrap()], None);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = rotabrace(&["build-brace", "S3", op.to_str().unwrap()], None);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let brace = dir.path().join("brace.json");
    fs::write(&brace, &out.stdout).unwrap();

    let v = json(&rotabrace(&["verify", brace.to_str().unwrap()], None));
    assert_eq!(
        (v["kind"].as_str(), v["skew"].as_bool()),
        (Some("brace"), Some(true))
    );

    let out = rotabrace(&["check-ybe", brace.to_str().unwrap()], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["braid"], true);
    assert_eq!(v["inverse_is_opposite"], true);

    let v = json(&rotabrace(&["ideals", brace.to_str().unwrap()], None));
    assert_eq!(v["ideals"][0], serde_json::json!([0]));

    let out = rotabrace(&["quotient", brace.to_str().unwrap(), "0,1,2,3,4,5"], None);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json(&out)["brace"]["order"], 1);
}

#[test]
fn bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\n \"order\": 2,\n \"table\": [[0 1], [1, 0]]\n}").unwrap();
    let out = rotabrace(&["verify", bad.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":3:"));

    let left_zero = dir.path().join("lz.json");
    fs::write(&left_zero, r#"{"order": 2, "table": [[0, 0], [1, 1]]}"#).unwrap();
    let out = rotabrace(&["verify", left_zero.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("verification failed"));

    let out = rotabrace(&["report", "Z2", "--stages", "enumerate,ybe"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("needs stage braces"));
}

#[test]
fn catalog_directories_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("Z5.json"),
        r#"{"order": 5, "table": [[0,1,2,3,4],[1,2,3,4,0],[2,3,4,0,1],[3,4,0,1,2],[4,0,1,2,3]]}"#,
    )
    .unwrap();
    let out = rotabrace(&["enumerate-rb", "Z5"], Some(dir.path()));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json(&out)["count"], 5);
    let out = rotabrace(&["enumerate-rb", "Z5"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_map_is_a_reported_non_solution() {
    let out = rotabrace(&["check-ybe", "--random", "3", "--seed", "11"], None);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["braid"], false);
    assert!(v["witness"].is_array());
    let again = rotabrace(&["check-ybe", "--random", "3", "--seed", "11"], None);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn report_renderings() {
    let out = rotabrace(&["report", "CS3", "--text"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("operators              3"));
    assert!(text.ends_with("overall: PASS\n"));

    let v = json(&rotabrace(
        &["report", "S3", "--stages", "enumerate,classify"],
        None,
    ));
    let r = &v["reports"][0];
    assert_eq!(v["schema_version"], 1);
    assert_eq!(
        r["operators"]["count"],
        r["operators"]["images"].as_array().unwrap().len()
    );
    let members: usize = r["classes"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["members"].as_array().unwrap().len())
        .sum();
    assert_eq!(members, r["operators"]["images"].as_array().unwrap().len());
    assert!(r.get("braces").is_none());
    assert!(r.get("timing_ms").is_none());

    let v = json(&rotabrace(
        &["report", "Z2", "--stages", "enumerate", "--timing"],
        None,
    ));
    assert!(v["reports"][0]["timing_ms"].is_u64());
}
