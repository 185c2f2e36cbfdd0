//! End-to-end tests against the built binary.

use std::process::{Command, Output};

fn stl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stl"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn table_csv_matches_spec_example() {
    let out = stl(&["table", "--family", "tanh", "--n", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# family=tanh"));
    assert!(text.trim_end().ends_with("0,-2,0,1"), "{text}");
}

#[test]
fn table_csv_round_trip_is_byte_identical() {
    let out = stl(&["table", "--family", "lah", "--n", "6", "--format", "csv"]);
    let text = stdout(&out);
    // re-serialize by hand: header line + comma-joined rows
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    let mut rebuilt = format!("{header}\n");
    for line in lines {
        let cells: Vec<i128> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let back: Vec<String> = cells.iter().map(|v| v.to_string()).collect();
        rebuilt.push_str(&back.join(","));
        rebuilt.push('\n');
    }
    assert_eq!(rebuilt, text);
}

#[test]
fn table_json_round_trip_is_byte_identical() {
    let out = stl(&["table", "--family", "s1", "--n", "5", "--format", "json"]);
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim_end());
    assert_eq!(value["family"], "s1");
    assert_eq!(value["rows"][3][1], "8");
}

#[test]
fn convert_rule_reproduces_target() {
    let out = stl(&["convert", "--rule", "tanh-from-s2", "--n", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS convert/tanh-from-s2"), "{text}");
}

#[test]
fn convert_json_reports_match() {
    let out = stl(&["convert", "--rule", "s1-from-arctanh", "--n", "6", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(value["matches_target"], true);
    assert_eq!(value["rule"], "s1-from-arctanh");
}

#[test]
fn poly_text_and_json() {
    let out = stl(&["poly", "--family", "delta", "--k", "4"]);
    let text = stdout(&out);
    assert!(text.contains("1/18*x - 7/90"), "{text}");
    assert!(text.contains("degree: 1"));
    let out = stl(&["poly", "--family", "lambda", "--k", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(value["coeffs"][0], "-1/2");
    assert_eq!(value["coeffs"][1], "1/2");
    assert_eq!(value["degree"], 1);
}

#[test]
fn poly_lambda_zero_is_usage_error() {
    let out = stl(&["poly", "--family", "lambda", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_coefficients_are_exact() {
    let out = stl(&["series", "--family", "arctanh", "--m", "1", "--order", "5"]);
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().ends_with("0,1,0,1/3,0,1/5"), "{text}");
}

#[test]
fn cumulants_matches_spec_example() {
    let out = stl(&["cumulants", "--r", "1", "--lambda", "1/2", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("a=3/4 b=1 c=1/4"), "{text}");
    assert!(text.contains("nb cumulants: 1/2, 3/4, 3/2"));
    assert!(text.contains("sg cumulants: 1/2, 3/4, 3/2"));
}

#[test]
fn cumulants_reciprocity_json() {
    let out = stl(&[
        "cumulants", "--r", "16/15", "--lambda", "3/2", "--n", "6",
        "--check-reciprocity", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(value["matched"]["a"], "1");
    assert_eq!(value["matched"]["b"], "2");
    assert_eq!(value["reciprocity"]["passed"], true);
}

#[test]
fn cumulants_lambda_zero_is_usage_error() {
    let out = stl(&["cumulants", "--r", "1", "--lambda", "0", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("lambda"), "{err}");
}

#[test]
fn verify_known_suite_exits_zero() {
    let out = stl(&["verify", "--suite", "orthogonality", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_all_reduced_range() {
    let out = stl(&["verify", "--suite", "all", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS verify:"));
    // one line per suite plus the summary
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
}

#[test]
fn no_color_output_has_no_ansi_escapes() {
    let out = stl(&["verify", "--suite", "m1", "--n-max", "8"]);
    assert!(!stdout(&out).contains('\u{1b}'));
}

#[test]
fn unknown_flag_exits_2_with_usage_on_stderr() {
    let out = stl(&["table", "--family", "tanh", "--n", "3", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("Usage") || err.contains("usage"), "{err}");
}

#[test]
fn unknown_family_and_suite_exit_2() {
    let out = stl(&["table", "--family", "pascal", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = stl(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = stl(&["convert", "--rule", "nonsense", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
