use std::process::{Command, Output};

use num_bigint::BigUint;
use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpartite-ao"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut argv = args.to_vec();
    argv.push("--json");
    let out = cli(&argv);
    let text = stdout(&out);
    assert!(
        text.ends_with('\n') && text.lines().count() == 1,
        "{text:?}"
    );
    serde_json::from_str(&text).unwrap()
}

#[test]
fn plain_values() {
    let out = cli(&["--parts", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "14\n");
    assert_eq!(stdout(&cli(&["--parts", "1,1,1"])), "6\n");
    assert_eq!(stdout(&cli(&["--parts", "3,1", "--mode", "hp"])), "0\n");
    assert_eq!(
        stdout(&cli(&[
            "--parts",
            "2,2",
            "--mode",
            "ao-plus-edge",
            "--plus-edge-part",
            "1"
        ])),
        "18\n"
    );
}

#[test]
fn structured_output_fields() {
    let v = json(&["--parts", "3,0,2"]);
    assert_eq!(v["input"], serde_json::json!([3, 0, 2]));
    assert_eq!(v["normalized"], serde_json::json!([3, 2]));
    assert_eq!(v["mode"], "ao");
    assert!(v["result"].is_string());
    assert_eq!(v["lattice_cells"], 6);
    assert!(v["elapsed_ms"].is_f64());
    assert!(v.get("checks").is_none());
}

#[test]
fn deterministic_modulo_timing() {
    let args = ["--parts", "7,5,3", "--mode", "ao"];
    let mut a = json(&args);
    let mut b = json(&args);
    a["elapsed_ms"] = Value::Null;
    b["elapsed_ms"] = Value::Null;
    assert_eq!(a.to_string(), b.to_string());
}

#[test]
fn big_result_round_trips() {
    let v = json(&["--parts", "40,40"]);
    let text = v["result"].as_str().unwrap();
    let parsed: BigUint = text.parse().unwrap();
    assert_eq!(parsed.to_string(), text);
    assert!(parsed > BigUint::from(u128::MAX));
    assert_eq!(
        stdout(&cli(&["--parts", "40,40"])).trim_end(),
        text,
        "plain and structured agree"
    );
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["--parts", "0,0"][..],
        &["--parts", "2", "--frobnicate"],
        &["--parts", "a,b"],
        &[
            "--parts",
            "1,1",
            "--mode",
            "ao-plus-edge",
            "--plus-edge-part",
            "1",
        ],
        &["--mode", "ao"],
    ] {
        let out = cli(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert_eq!(
            stderr(&out).lines().count(),
            1,
            "{args:?}: {}",
            stderr(&out)
        );
    }
    assert!(stderr(&cli(&["--parts", "2", "--frobnicate"])).contains("--frobnicate"));
}

#[test]
fn capacity_error_exits_3() {
    let out = cli(&["--parts", "100,100,100", "--memory-cells", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn time_goes_to_stderr() {
    let out = cli(&["--parts", "2,2", "--time"]);
    assert_eq!(stdout(&out), "14\n");
    assert!(stderr(&out).contains("ms"));
}

#[test]
fn stirling_mode() {
    assert_eq!(
        stdout(&cli(&["--parts", "5", "--mode", "stirling"])),
        "0 1 15 25 10 1\n"
    );
}

#[test]
fn verify_full_default_cap() {
    let v = json(&["--parts", "2,2", "--mode", "verify"]);
    assert_eq!(v["result"], "14");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 8);
    for c in checks {
        assert_eq!(c["status"], "pass", "{c}");
    }
}

#[test]
fn verify_skips_out_of_range_input_checks() {
    let out = cli(&["--parts", "5,4,3", "--mode", "verify", "--verify-cap", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with(&format!(
        "{}\n",
        stdout(&cli(&["--parts", "5,4,3"])).trim_end()
    )));
    assert!(text.contains("input:oracles: skipped"), "{text}");
    assert!(text.contains("input:closed-form: skipped"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}
