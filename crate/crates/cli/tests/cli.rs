use std::path::PathBuf;
use std::process::{Command, Output};

fn uaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uaut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn poset_queries() {
    let o = uaut(&["poset", "leq", "r2", "r1*r1"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "true"));
    let o = uaut(&["poset", "leq", "r1", ""]);
    assert_eq!(stdout(&o).trim(), "false");
    let o = uaut(&["poset", "down-set", "r1*r1"]);
    assert_eq!(stdout(&o), "r2\nr1*r1\n");
    let o = uaut(&[
        "poset",
        "saturated",
        "--set",
        "{r1*r1}",
        "--format",
        "machine",
    ]);
    assert!(stdout(&o).contains("saturated=false"));
}

#[test]
fn hom_queries() {
    let o = uaut(&["hom", "count", "r1*r1", "r1*r1*r2^-1*r1*r1"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "2"));
    let o = uaut(&[
        "hom",
        "enumerate",
        "r1*r1",
        "r1*r1*r2^-1*r1*r1",
        "--format",
        "machine",
    ]);
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = uaut(&["hom", "count", "r3", "r1", "--d", "3"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn endomorphism_dimension() {
    let o = uaut(&["end", "--set", "{,r1}", "--builtin", "polynomial(2)"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "5"));
    let o = uaut(&["end", "--set", "{r1*r1}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_exit_codes() {
    let o = uaut(&["analyze", "--builtin", "polynomial(2)", "--N", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certified"));

    let dual = temp_file(
        "dual_numbers.toml",
        "label = \"k[x]/(x^2)\"\ndimV = 1\nrelations = [[\"1\"]]\n",
    );
    let o = uaut(&[
        "analyze",
        "--algebra",
        dual.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(
        out.contains("koszul_through=5") && out.contains("AS_regular=false"),
        "{out}"
    );

    let bad = temp_file("malformed.toml", "dimV = \"two\"\n");
    assert_eq!(
        uaut(&["analyze", "--algebra", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        uaut(&["analyze", "--builtin", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        uaut(&["analyze", "--algebra", "/nonexistent.toml"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(uaut(&["poset", "leq", "r3", "r1"]).status.code(), Some(2));
    assert_eq!(uaut(&["hom", "count", "r1"]).status.code(), Some(2));
    assert_eq!(uaut(&["eval", "--max-len", "0"]).status.code(), Some(2));
    assert_eq!(uaut(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn presentation_matches_golden_file() {
    let o = uaut(&["present", "--d", "2", "--format", "machine"]);
    assert_eq!(
        stdout(&o),
        include_str!("../../core/tests/golden/uaut_d2.txt")
    );
    let o = uaut(&["present", "--d", "3"]);
    assert!(stdout(&o).contains("relations (38):"));
}

#[test]
fn eval_is_deterministic() {
    let a = uaut(&["eval", "--builtin", "quantum_plane(2)", "--max-len", "2"]);
    let b = uaut(&["eval", "--builtin", "quantum_plane(2)", "--max-len", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a)
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["r1*r1", "4", "3", "4", "3"]));
}

#[test]
fn check_suite_passes() {
    let o = uaut(&["check", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));
}
