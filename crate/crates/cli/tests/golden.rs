//! End-to-end runs of the `osx` binary against checked-in golden reports.
//!
//! Set `OSX_BLESS=1` to rewrite the golden files from the current output.

use std::path::{Path, PathBuf};
use std::process::Command;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(format!("{name}.json")).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_osx")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn golden(name: &str, args: &[&str], expected_code: i32) {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, expected_code, "exit code for {args:?}; stderr: {stderr}");
    let (code2, again, _) = run(args);
    assert_eq!((code2, &again), (code, &stdout), "output is not reproducible for {args:?}");
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("OSX_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}; rerun with OSX_BLESS=1", path.display()));
    assert_eq!(stdout, want, "output differs from {}", path.display());
}

#[test]
fn analyze_cross() {
    golden("analyze_cross.json", &["analyze", &fixture("cross")], 0);
}

#[test]
fn analyze_nine32() {
    golden("analyze_nine32.json", &["analyze", &fixture("nine32")], 0);
}

#[test]
fn analyze_cross_text() {
    golden("analyze_cross.txt", &["analyze", &fixture("cross"), "--format", "text"], 0);
}

#[test]
fn check_nine32_quadratic() {
    golden("check_nine32_quadratic.json", &["check", &fixture("nine32"), "--criterion", "quadratic"], 1);
}

#[test]
fn check_nine32_three_independent() {
    golden("check_nine32_pindep3.json", &["check", &fixture("nine32"), "--criterion", "pindep:3"], 0);
}

#[test]
fn check_cross_three_independent() {
    golden("check_cross_pindep3.json", &["check", &fixture("cross"), "--criterion", "pindep:3"], 1);
}

#[test]
fn check_cross_line_closed() {
    golden("check_cross_lcl.json", &["check", &fixture("cross"), "--criterion", "lcl"], 0);
}

#[test]
fn check_u35_quadratic() {
    golden("check_u35_quadratic.json", &["check", &fixture("u35"), "--criterion", "quadratic"], 1);
}

#[test]
fn annihilator_u23() {
    golden("annihilator_u23_1.json", &["annihilator", &fixture("u23"), "--degree", "1"], 0);
}

#[test]
fn annihilator_k4() {
    golden("annihilator_k4_3.json", &["annihilator", &fixture("k4"), "--degree", "3"], 0);
}

#[test]
fn groebner_verify_nine32() {
    golden("groebner_verify_nine32.json", &["groebner-verify", &fixture("nine32"), "--validate-axioms"], 0);
}

#[test]
fn zbasis_cross() {
    golden("zbasis_cross_2.json", &["zbasis", &fixture("cross"), "--degree", "2"], 0);
}

#[test]
fn presentation_cross() {
    golden(
        "presentation_cross.json",
        &["presentation", &fixture("cross"), "--trees", "--relations", "--verify-basis"],
        0,
    );
}

#[test]
fn presentation_nine32_counts() {
    golden("presentation_nine32.json", &["presentation", &fixture("nine32"), "--verify-basis"], 0);
}

#[test]
fn casestudy_cross() {
    golden("casestudy_cross.json", &["casestudy", "cross"], 0);
}

#[test]
fn casestudy_nine32() {
    golden("casestudy_nine32.json", &["casestudy", "nine32"], 0);
}

#[test]
fn malformed_file_exits_2() {
    let dir = std::env::temp_dir().join(format!("osx-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("both.json", r#"{"ground_set": 3, "circuits": [[1, 2, 3]], "lines": [[1, 2, 3]]}"#, "exactly one"),
        ("short.json", r#"{"ground_set": 3, "circuits": [[1, 2]]}"#, "circuits"),
        ("syntax.json", "{\"ground_set\": 3,\n \"circuits\": [[1, 2, 3]", "line 2"),
        ("overlap.json", r#"{"ground_set": 5, "lines": [[1, 2, 3], [1, 2, 4]]}"#, "lines"),
    ];
    for (name, text, needle) in cases {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        let (code, stdout, stderr) = run(&["analyze", path.to_str().unwrap()]);
        assert_eq!(code, 2, "{name}");
        assert!(stdout.is_empty());
        assert!(stderr.contains(needle), "{name}: {stderr}");
    }
    let (code, _, _) = run(&["analyze", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn enumeration_limit_exits_2() {
    let (code, _, stderr) = run(&["check", &fixture("nine32"), "--criterion", "lcl", "--max-n", "8"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("exceeds"));
}

#[test]
fn bad_parameters_exit_2() {
    assert_eq!(run(&["check", &fixture("cross"), "--criterion", "pindep:9"]).0, 2);
    assert_eq!(run(&["check", &fixture("cross"), "--criterion", "purity"]).0, 2);
    assert_eq!(run(&["annihilator", &fixture("u23"), "--degree", "4"]).0, 2);
    assert_eq!(run(&["casestudy", "fano"]).0, 2);
}
