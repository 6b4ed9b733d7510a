use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quillen"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn structured(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let out = run(&all);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn hqc_on_alt5() {
    let r = structured(&["hqc", "--group", "alt5.spec", "--p", "2"]);
    assert_eq!(r["schema"], "quillen-report/1");
    assert_eq!(r["result"]["verdict"], "holds");
    assert_eq!(
        r["result"]["evidence"]["betti"]["values"],
        serde_json::json!([4])
    );
}

#[test]
fn prop68_on_a8() {
    let r = structured(&["prop68", "--group", "a8-in-s8.spec", "--p", "2", "--k", "2"]);
    assert_eq!(r["result"]["verdict"], "holds");
}

#[test]
fn euler_formula_on_s8() {
    let r = structured(&["euler-formula", "--group", "sym8.spec", "--p", "2"]);
    assert_eq!(r["result"]["formula"], 512);
    assert_eq!(r["result"]["complex"], 512);
}

#[test]
fn spec_files_on_disk_are_accepted() {
    let r = structured(&["betti", "--group", "specs/sym5.spec", "--p", "2"]);
    assert_eq!(r["group"]["order"], 120);
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &["thm410", "--group", "a5a5-er", "--p", "2"][..],
        &[
            "conditions",
            "--group",
            "a5a5-er",
            "--p",
            "2",
            "--format",
            "structured",
        ][..],
        &["image-poset", "--group", "sym6", "--p", "2"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn failing_verdict_still_exits_zero() {
    let r = structured(&[
        "thm41",
        "--group",
        "a5a5-er",
        "--p",
        "2",
        "--restrict-to-product",
    ]);
    assert_eq!(r["result"]["verdict"], "fails");
}

#[test]
fn bad_input_exits_two() {
    let out = run(&["hqc", "--group", "no-such-group", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = run(&["hqc", "--group", "alt5", "--p", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("quillen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = ["ap", "--group", "d10", "--p", "2", "--format", "structured"];
    let direct = run(&args);
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    assert_eq!(run(&with_file).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
