//! End-to-end checks of the binary: exit-status contract, the worked
//! command lines, and the JSON report schema.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nonstd-cones"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).trim().to_string()
}

#[test]
fn member_worked_example() {
    let out = run(&[
        "member",
        "--dialect",
        "riesz",
        "-n",
        "2",
        "--index",
        "[(1,0)],[(0,1)]",
        "--term",
        r"0 /\ x0 /\ x1 /\ (x0 - 3*x1)",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "true");
}

#[test]
fn decompose_worked_example() {
    let out = run(&["decompose", "-n", "2", "--point", "(1, e)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("1 : (1, 0)"), "{text}");
    assert!(text.contains("e : (0, 1)"), "{text}");
    assert!(text.contains("index: [(1, 0)], [(0, 1)]"), "{text}");
}

#[test]
fn reduce_worked_example_with_preset() {
    let out = run(&[
        "reduce",
        "-n",
        "3",
        "--field",
        "sqrt2",
        "--index",
        "[(1,th,0)],[(th,-1,1)],[(-th,1,3)]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[(1, th, 0)], [(0, 0, 1)]");
}

#[test]
fn preset_directory_env_var() {
    let presets = concat!(env!("CARGO_MANIFEST_DIR"), "/../../presets");
    let out = bin()
        .env("NONSTD_CONES_PRESETS", presets)
        .args([
            "eval",
            "--field",
            "sqrt2sqrt3",
            "-n",
            "1",
            "--term",
            "th*x0",
            "--real-point",
            "(th^3)",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "-1+10*th^2");
}

#[test]
fn witness_and_precondition_exit_codes() {
    let out = run(&[
        "witness",
        "-n",
        "2",
        "--dialect",
        "riesz",
        "--field",
        "sqrt2",
        "--x",
        "(1, th + e)",
        "--y",
        "(1, th)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("value at y: 0"));
    // Specializing points have no witness: domain error, status 1.
    let out = run(&[
        "witness",
        "-n",
        "2",
        "--dialect",
        "riesz",
        "--x",
        "(1, 0)",
        "--y",
        "(1, e)",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("specialize"));
}

#[test]
fn malformed_inputs_exit_one() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["eval", "-n", "2", "--term", "x0 +", "--point", "(1, e)"],
        vec!["eval", "-n", "2", "--term", "x0", "--point", "(1"],
        vec!["eval", "-n", "2", "--term", "x5", "--point", "(1, e)"],
        vec!["decompose", "-n", "2", "--point", "(0, 0)"],
        vec![
            "member",
            "-n",
            "2",
            "--index",
            "[(1,0)],[(1,1)]",
            "--term",
            "x0",
        ],
        vec![
            "member",
            "--dialect",
            "lgroup",
            "-n",
            "1",
            "--index",
            "[(1)]",
            "--term",
            "1/2*x0",
        ],
        vec![
            "eval",
            "--field",
            "nosuchfield",
            "-n",
            "1",
            "--term",
            "x0",
            "--point",
            "(e)",
        ],
        vec!["fan", "-n", "4", "--term", "x0", "--point"],
    ];
    for args in cases {
        let out = run(&args);
        assert_ne!(out.status.code(), Some(0), "{args:?} should fail");
        assert!(
            out.status.code() == Some(1) || out.status.code() == Some(2),
            "{args:?} gave {:?}",
            out.status.code()
        );
    }
}

#[test]
fn json_reports_follow_schema() {
    let out = run(&[
        "--json",
        "member",
        "--dialect",
        "riesz",
        "-n",
        "2",
        "--index",
        "[(1,0)],[(0,1)]",
        "--term",
        r"0 /\ x0 /\ x1 /\ (x0 - 3*x1)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["query"]["verb"], "member");
    assert_eq!(v["result"], true);

    let out = run(&[
        "--json",
        "witness",
        "-n",
        "2",
        "--dialect",
        "lgroup",
        "--x",
        "(0, 1)",
        "--y",
        "(1, 0)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert!(v["witness"].is_array());
    assert!(v["result"]["at_x"].is_string());

    // The decompose report round-trips through the documented index schema.
    let out = run(&[
        "--json",
        "decompose",
        "-n",
        "2",
        "--point",
        "(1, th + e)",
        "--field",
        "sqrt2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let spec = nonstd_cones::NumberFieldSpec::sqrt2();
    let index =
        nonstd_cones::Index::from_json(&v["result"]["index"], &spec).expect("index parses back");
    assert_eq!(index.len(), 2);

    // Series values round-trip through the series schema.
    let out = run(&[
        "--json",
        "eval",
        "-n",
        "1",
        "--term",
        "x0",
        "--point",
        "(3 + 5*e)",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let series = nonstd_cones::EpsSeries::from_json(&v["result"]["series"]).unwrap();
    assert_eq!(series.to_string(), "3 + 5*e");
}

#[test]
fn unit_check_and_vcone() {
    let out = run(&[
        "unit-check",
        "-n",
        "2",
        "--relator",
        "0",
        "--candidate",
        "|x0| + |x1|",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true");

    let out = run(&[
        "vcone",
        "-n",
        "2",
        "--dialect",
        "lgroup",
        "--term",
        r"0 /\ x0 /\ x1 /\ (x0 - x1)",
        "--index",
        "[(1,0)],[(0,1)]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("radii:"));

    let out = run(&[
        "vcone",
        "-n",
        "1",
        "--dialect",
        "lgroup",
        "--term",
        "x0",
        "--index",
        "[(1)]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("none"));
}

#[test]
fn appendix_verb() {
    let out = run(&["appendix", "-n", "3", "--m-max", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("all vanish: true"), "{text}");
    let out = run(&["--json", "appendix", "-n", "2", "--m-max", "8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["result"]["passed"], true);
}

#[test]
fn leq_both_modes() {
    let out = run(&[
        "leq",
        "-n",
        "2",
        "--left",
        "[(1,0)]",
        "--right",
        "[(1,0)],[(0,1)]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true");
    let out = run(&[
        "leq",
        "-n",
        "2",
        "--dialect",
        "lgroup",
        "--x",
        "(1, 0)",
        "--y",
        "(1, e)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true");
    let out = run(&["leq", "-n", "2", "--x", "(0, 1)", "--y", "(1, e)"]);
    assert_eq!(stdout(&out), "false");
}

#[test]
fn maximal_from_point() {
    let out = run(&["maximal", "-n", "2", "--point", "(3, 4)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "riesz prime at [(1, 4/3)]");
    // The zero point names nothing.
    let out = run(&["maximal", "-n", "2", "--point", "(0, 0)"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 9, "{text}");
}
