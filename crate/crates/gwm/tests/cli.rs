//! End-to-end checks of the command-line interface: output bytes, exit
//! codes and determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gwm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn power_json_matches_the_wire_format() {
    let out = gwm(&[
        "power", "--n1", "2", "--n2", "3", "--a", "1", "--b", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"game":{"n1":2,"n2":3,"a":1,"b":2},"c1":7,"c2":5,"ss":["1/4","1/6"],"bz_rel":["7/29","5/29"],"bz_abs":["7/16","5/16"]}"#
    );
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for args in [
        vec![
            "power", "--n1", "3", "--n2", "7", "--a", "2", "--b", "4", "--format", "json",
        ],
        vec![
            "rank", "--n1", "3", "--n2", "7", "--index", "bz-rel", "--format", "json",
        ],
        vec!["verify-conjecture", "--n-max", "10", "--format", "json"],
        vec![
            "enumerate",
            "--family",
            "weighted",
            "--n-max",
            "12",
            "--r",
            "1",
            "--format",
            "json",
        ],
    ] {
        let first = gwm(&args);
        let second = gwm(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        let parsed: serde_json::Value = serde_json::from_str(stdout(&first).trim()).unwrap();
        drop(parsed);
    }
}

#[test]
fn rank_prints_the_paper_chain() {
    let out = gwm(&["rank", "--n1", "3", "--n2", "7", "--index", "ss"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "(3,0)=(2,0)=(1,0)>(3,1)>(3,2)>(2,1)>(3,3)>(2,2)>(3,4)>(1,1)>(2,3)>(3,5)>(1,2)>(2,4)>\
         (3,6)>(1,3)>(2,5)>(1,4)>(2,6)>(1,5)>(1,6)"
    );
}

#[test]
fn enumerate_single_and_sweep() {
    let out = gwm(&["enumerate", "--family", "weighted", "--n", "6", "--r", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "61");

    let out = gwm(&[
        "enumerate",
        "--family",
        "complete",
        "--n-max",
        "4",
        "--r",
        "1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,t,r,family,count\n1,*,1,complete,1\n2,*,1,complete,3\n3,*,1,complete,7\n4,*,1,complete,15\n"
    );
}

#[test]
fn domain_errors_exit_one_with_structured_json() {
    let out = gwm(&[
        "enumerate",
        "--family",
        "complete",
        "--n",
        "8",
        "--r",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(parsed["error"]
        .as_str()
        .unwrap()
        .contains("no closed formula"));

    // invalid invariants from stdin
    let mut child = Command::new(env!("CARGO_BIN_EXE_gwm"))
        .args(["classify", "--game", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":[2,3],"M":[[2,1],[1,2]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("condition (ii)"), "stderr: {stderr}");
}

#[test]
fn usage_errors_exit_two() {
    let out = gwm(&["power", "--n1", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gwm(&["power", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gwm(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_and_dual_round_trip_through_files() {
    let dir = std::env::temp_dir().join("gwm-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("canada.json");
    std::fs::write(&path, r#"{"n":[2,8],"M":[[1,6]]}"#).unwrap();
    let path = path.to_str().unwrap();

    let out = gwm(&["validate", "--game", path]);
    assert!(out.status.success());

    let out = gwm(&["dual", "--game", path, "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"n":[2,8],"M":[[2,0],[0,4]]}"#);

    let out = gwm(&["classify", "--game", path, "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"stripped_null_classes":0,"stripped_veto_classes":0,"weighted":false}"#
    );
}

#[test]
fn selfcheck_exits_zero() {
    let out = gwm(&["selfcheck", "--n-max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ok complete-counts"));
    assert!(text.contains("5/5 suites passed"));
}

#[test]
fn oracle_flag_cross_checks_the_answer() {
    let out = gwm(&[
        "power", "--n1", "2", "--n2", "8", "--a", "1", "--b", "6", "--oracle",
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("oracle check: ok"));

    let out = gwm(&[
        "classify", "--n1", "5", "--n2", "10", "--a", "5", "--b", "4", "--oracle",
    ]);
    assert!(out.status.success());
}

#[test]
fn semivalue_ranking_with_weight_file() {
    let dir = std::env::temp_dir().join("gwm-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("shapley4.json");
    // Shapley coefficients for n = 4: 1/(4 C(3, j-1))
    std::fs::write(&path, r#"["1/4","1/12","1/12","1/4"]"#).unwrap();
    let path = path.to_str().unwrap();

    let semivalue = gwm(&[
        "rank",
        "--n1",
        "2",
        "--n2",
        "2",
        "--index",
        "semivalue",
        "--weights",
        path,
    ]);
    assert!(semivalue.status.success());
    let ss = gwm(&["rank", "--n1", "2", "--n2", "2", "--index", "ss"]);
    assert_eq!(stdout(&semivalue), stdout(&ss));

    // semivalue requires the weights file
    let out = gwm(&["rank", "--n1", "2", "--n2", "2", "--index", "semivalue"]);
    assert_eq!(out.status.code(), Some(2));
}
