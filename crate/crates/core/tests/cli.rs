use std::path::PathBuf;
use std::process::Command;

use serde_json::Value as Json;

use chebcat::cli::run;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chebcat"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn json(args: &[&str]) -> (i32, Json) {
    let mut argv = vec!["chebcat", "--format", "json"];
    argv.extend_from_slice(args);
    let out = run(argv);
    (
        out.code,
        serde_json::from_str(&out.stdout).expect("valid JSON"),
    )
}

#[test]
fn golden_text_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["verify", "theorem1", "--n", "4"],
            "verify_theorem1_n4.txt",
        ),
        (&["catalan", "3"], "catalan_3.txt"),
        (&["cheb", "show", "5"], "cheb_show_5.txt"),
        (&["cheb", "ratio", "4"], "cheb_ratio_4.txt"),
        (
            &["eval", "1/x - catalan()", "--order", "3"],
            "eval_second_root.txt",
        ),
        (
            &["cf", "expand", "1/(1-x)", "--order", "6"],
            "cf_expand_geometric.txt",
        ),
    ];
    for (args, file) in cases {
        let (code, stdout, _) = bin(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(stdout, golden(file), "{args:?}");
    }
}

#[test]
fn golden_json_output() {
    let (code, stdout, _) = bin(&["--format", "json", "eval", "G(4)", "--order", "8"]);
    assert_eq!(code, 0);
    let got: Json = serde_json::from_str(&stdout).unwrap();
    let want: Json = serde_json::from_str(&golden("eval_g4.json")).unwrap();
    assert_eq!(got, want);
}

#[test]
fn json_reports_share_a_schema() {
    let commands: &[&[&str]] = &[
        &["cheb", "show", "3"],
        &["cheb", "ratio", "5"],
        &["catalan", "6"],
        &["verify", "theorem1", "--n", "6"],
        &[
            "verify", "theorem1", "--n", "3", "--sweep", "8", "--jobs", "2",
        ],
        &["verify", "quadratic", "--order", "20"],
        &["verify", "closeness", "--trials", "20"],
        &["verify", "trig", "--n", "5", "--samples", "50"],
        &["cf", "expand", "1+x+x^2"],
        &["eval", "cheb(3)*cheb(2)"],
        &["demo", "fibonacci", "--n", "20"],
    ];
    for args in commands {
        let (code, report) = json(args);
        assert_eq!(code, 0, "{args:?}");
        for key in ["command", "inputs", "result", "pass"] {
            assert!(report.get(key).is_some(), "{args:?} lacks {key}");
        }
        assert_eq!(report["pass"], Json::Bool(true), "{args:?}");
        assert!(report["command"].as_str().unwrap().starts_with(args[0]));
    }
}

#[test]
fn series_json_layout() {
    let (_, report) = json(&["eval", "1/x - catalan()", "--order", "3"]);
    let result = &report["result"];
    assert_eq!(result["valuation"], -1);
    assert_eq!(result["order"], 3);
    let coeffs: Vec<&str> = result["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "-1", "-1", "-2", "-5"]);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["verify", "theorem1", "--n", "1"]).0, 2);
    assert_eq!(bin(&["frobnicate"]).0, 2);
    assert_eq!(bin(&["cheb", "show", "0"]).0, 2);
    assert_eq!(bin(&["eval", "x + y"]).0, 2);
    assert_eq!(bin(&["--help"]).0, 0);
    let (code, _, stderr) = bin(&["eval", "1/(1-x"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("offset 6"), "{stderr}");
}

#[test]
fn out_flag_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(["chebcat", "--out", path.to_str().unwrap(), "catalan", "4"]);
    assert_eq!(out.code, 0);
    let report: Json = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["command"], "catalan");
    let values: Vec<&str> = report["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "1", "2", "5", "14"]);
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = [
        "chebcat",
        "--format",
        "json",
        "verify",
        "closeness",
        "--trials",
        "50",
        "--seed",
        "11",
    ];
    assert_eq!(run(args).stdout, run(args).stdout);
}

#[test]
fn sweep_is_independent_of_job_count() {
    let (_, one) = json(&[
        "verify", "theorem1", "--n", "3", "--sweep", "12", "--jobs", "1",
    ]);
    let (_, four) = json(&[
        "verify", "theorem1", "--n", "3", "--sweep", "12", "--jobs", "4",
    ]);
    assert_eq!(one["result"], four["result"]);
}
