//! End-to-end checks of the installed binary: golden stdout bytes, exit
//! codes, the environment override, and JSON round-trip stability.

use std::process::{Command, Output};

fn qmobius(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmobius"))
        .args(args)
        .env_remove("QSERIES_ORACLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn series_psi_q_text_bytes() {
    let out = qmobius(&["series", "psiQ", "--order", "6", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "1, -1, -1/2, -1/6, 1/24, 43/120, -233/720\n"
    );
}

#[test]
fn series_fq_hat_defaults_to_text() {
    let out = qmobius(&["series", "FQhat", "--order", "6"]);
    assert_eq!(stdout_of(&out), "0, 1, 2, 3, 4, 4, 8\n");
}

#[test]
fn series_pa_short_order_flag() {
    let out = qmobius(&["series", "Pa", "--a", "1", "-N", "4"]);
    assert_eq!(stdout_of(&out), "0, 1, 1, 1, 1\n");
}

#[test]
fn table_qhat_values() {
    let out = qmobius(&["table", "Qhat", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "1\t1\n2\t2\n3\t3\n4\t4\n5\t4\n6\t8\n");
}

#[test]
fn table_q_values() {
    let out = qmobius(&["table", "Q", "--n-max", "6"]);
    assert_eq!(stdout_of(&out), "1\t1\n2\t1\n3\t2\n4\t2\n5\t3\n6\t4\n");
}

#[test]
fn verify_small_passes_with_exit_zero() {
    let out = qmobius(&[
        "verify",
        "theorem1",
        "--order",
        "12",
        "--oracle-limit",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "theorem1 order=12 pass combinatorial-to=12\n"
    );
}

#[test]
fn verify_all_small_grid() {
    let out = qmobius(&[
        "verify",
        "all",
        "--order",
        "15",
        "--a",
        "1..3",
        "--oracle-limit",
        "15",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = stdout_of(&out);
    assert_eq!(stdout.lines().count(), 4 + 1 + 3 + 3 + 3);
    assert!(stdout.lines().all(|line| line.contains(" pass")));
}

#[test]
fn unknown_identity_is_usage_error() {
    let out = qmobius(&["verify", "nosuch", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_series_is_usage_error() {
    let out = qmobius(&["series", "nosuch", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_parameter_is_usage_error() {
    let out = qmobius(&["series", "Ba", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn oracle_limit_flag_gives_exit_three() {
    let out = qmobius(&["table", "Q", "--n-max", "10", "--oracle-limit", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn oracle_limit_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_qmobius"))
        .args(["table", "Q", "--n-max", "10"])
        .env("QSERIES_ORACLE_LIMIT", "9")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));

    // ... and the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_qmobius"))
        .args(["table", "Q", "--n-max", "10", "--oracle-limit", "10"])
        .env("QSERIES_ORACLE_LIMIT", "9")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["verify", "all", "--order", "10", "--format", "json"];
    let first = qmobius(&args);
    let second = qmobius(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}

#[test]
fn json_documents_round_trip_through_serde() {
    for args in [
        vec!["series", "jacobi", "--order", "12", "--format", "json"],
        vec![
            "table", "baHat", "--a", "2", "--n-max", "8", "--format", "json",
        ],
        vec![
            "verify", "theorem2", "--order", "12", "--a", "1..2", "--format", "json",
        ],
    ] {
        let out = qmobius(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = stdout_of(&out);
        let trimmed = text.trim_end();
        let value: serde_json::Value = serde_json::from_str(trimmed).expect("well-formed JSON");
        assert_eq!(
            serde_json::to_string(&value).unwrap(),
            trimmed,
            "round-trip for {args:?}"
        );
    }
}

#[test]
fn verify_json_single_document_shape() {
    let out = qmobius(&["verify", "pentagonal", "--order", "12", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&out).trim_end()).unwrap();
    assert_eq!(value["kind"], "report");
    assert_eq!(value["order"], 12);
    assert_eq!(value["reports"][0]["identity"], "pentagonal");
    assert_eq!(value["reports"][0]["status"], "pass");
}
