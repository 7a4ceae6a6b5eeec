use std::process::{Command, Output};

fn coxinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn coxinv_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxinv"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn roots_b3_reports_nine_roots_and_the_adjoint_weight() {
    let out = coxinv(&["roots", "--family", "B", "--rank", "3", "--format", "json"]);
    let json = stdout_json(&out);
    assert_eq!(json["positive_root_count"], 9);
    assert_eq!(json["positive_roots"].as_array().unwrap().len(), 9);
    assert_eq!(json["highest_long_root"]["weight"], serde_json::json!([0, 1, 0]));
    assert_eq!(json["highest_long_root"]["root"], serde_json::json!([1, 2, 2]));
}

#[test]
fn roots_a1_has_one_positive_root() {
    let out = coxinv(&["roots", "--family", "A", "--rank", "1"]);
    let json = stdout_json(&out);
    assert_eq!(json["positive_root_count"], 1);
}

#[test]
fn roots_rejects_inadmissible_rank_with_exit_2() {
    let out = coxinv(&["roots", "--family", "E", "--rank", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("not admissible"), "stderr: {stderr}");
}

#[test]
fn bad_flag_exits_2() {
    let out = coxinv(&["roots", "--family", "B"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_a2_has_three_polynomial_rows() {
    let out = coxinv(&[
        "classify", "--family", "A", "--rank", "2", "--height-bound", "12",
    ]);
    let json = stdout_json(&out);
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["polynomial_by_theorem"] == serde_json::json!(true)));
    assert_eq!(json["parameters"]["height_bound"], 12);
}

#[test]
fn classify_b2_has_two_polynomial_rows() {
    let out = coxinv(&[
        "classify", "--family", "B", "--rank", "2", "--height-bound", "12",
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn classify_a4_includes_the_nonpolynomial_hook_character() {
    let out = coxinv(&[
        "classify", "--family", "A", "--rank", "4", "--height-bound", "20",
    ]);
    let json = stdout_json(&out);
    let hook = json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["chi_weight"] == serde_json::json!([2, 0, 1, 0]))
        .expect("2ω1+ω3 row present");
    assert_eq!(hook["polynomial_by_theorem"], serde_json::json!(false));
    assert_eq!(hook["zero_weight_dim"], 6);
    assert_eq!(hook["krull_dim"], 5);
}

#[test]
fn classify_is_byte_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.json");
    let four = dir.path().join("four.json");
    let args = |path: &std::path::Path| {
        vec![
            "classify".to_string(),
            "--family".into(),
            "A".into(),
            "--rank".into(),
            "3".into(),
            "--height-bound".into(),
            "16".into(),
            "--out".into(),
            path.display().to_string(),
        ]
    };
    let a1: Vec<String> = args(&one);
    let out = coxinv_with_env(
        &a1.iter().map(String::as_str).collect::<Vec<_>>(),
        "COXINV_THREADS",
        "1",
    );
    assert!(out.status.success());
    let a4: Vec<String> = args(&four);
    let out = coxinv_with_env(
        &a4.iter().map(String::as_str).collect::<Vec<_>>(),
        "COXINV_THREADS",
        "4",
    );
    assert!(out.status.success());
    assert_eq!(
        std::fs::read(&one).unwrap(),
        std::fs::read(&four).unwrap(),
        "reports must not depend on the worker count"
    );
}

#[test]
fn enumerate_b2_lists_the_two_characters() {
    let out = coxinv(&[
        "enumerate", "--family", "B", "--rank", "2", "--height-bound", "12",
    ]);
    let json = stdout_json(&out);
    let roots: Vec<Vec<i64>> = json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r["chi_root"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_i64().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(roots, vec![vec![1, 1], vec![1, 2]]);
}

#[test]
fn coxeter_d4_lists_eight_elements() {
    let out = coxinv(&["coxeter", "--family", "D", "--rank", "4"]);
    let json = stdout_json(&out);
    assert_eq!(json["count"], 8);
    for e in json["elements"].as_array().unwrap() {
        assert_eq!(e["length"], 4);
        assert!(!e["descents"].as_array().unwrap().is_empty());
    }
}

#[test]
fn multiplicity_with_oracle_agrees() {
    let out = coxinv(&[
        "multiplicity", "--family", "D", "--rank", "4",
        "--highest", "2,0,0,0", "--weight", "0,0,0,0", "--oracle",
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["multiplicity"], 3);
    assert_eq!(json["oracle"], 3);
    assert_eq!(json["oracle_match"], serde_json::json!(true));
}

#[test]
fn multiplicity_rejects_wrong_arity() {
    let out = coxinv(&[
        "multiplicity", "--family", "A", "--rank", "2",
        "--highest", "1,1,1", "--weight", "0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_reports_the_single_known_finding_and_exits_1() {
    let out = coxinv(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = json["checks"].as_array().unwrap();
    let failed: Vec<&serde_json::Value> = checks
        .iter()
        .filter(|c| c["pass"] == serde_json::json!(false))
        .collect();
    assert_eq!(failed.len(), 1, "exactly one finding expected");
    assert_eq!(failed[0]["name"], "enumeration_a3_height16");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("[FAIL] enumeration_a3_height16"));
    assert!(stderr.contains("checks passed"));
}

#[test]
fn verify_paper_bodies_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for path in [&first, &second] {
        let out = coxinv(&[
            "verify-paper",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(1));
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "canonical bodies must be byte-stable");
}

#[test]
fn verify_paper_tsv_renders() {
    let out = coxinv(&["verify-paper", "--format", "tsv", "--max-rank", "4"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("check\tname\tpass"));
    assert!(stdout.contains("root_count_e8\tpass"));
}
