//! Runs the `rly` binary end to end and checks exit codes and output.

use std::path::PathBuf;
use std::process::{Command, Output};

use rly_cli::commands::{self, CohomologyOutcome, VerifyOutcome};
use rly_cli::Workspace;
use rly_core::ComplexKind;

fn sample() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("samples/two_dim.toml")
}

fn rly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rly")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    let file = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    std::fs::write(file.path(), text).unwrap();
    file
}

#[test]
fn sample_operator_passes() {
    let s = sample();
    let out = rly(&["verify", s.to_str().unwrap(), "--name", "T"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("operator T: PASS"));
}

#[test]
fn flipped_weight_exits_with_one_and_prints_the_witness() {
    let text = std::fs::read_to_string(sample()).unwrap().replace("weight = \"-1/5\"", "weight = \"1/5\"");
    let file = write_temp(&text);
    let out = rly(&["verify", file.path().to_str().unwrap(), "--name", "T"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL") && text.contains("at (x=0, y=1)") && text.contains("[-8, 0]"), "{text}");
}

#[test]
fn empty_algebra_passes_vacuously() {
    let file = write_temp("[algebras.point]\ndim = 0\n");
    let out = rly(&["verify", file.path().to_str().unwrap(), "--name", "point"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn input_errors_exit_with_two() {
    let missing = rly(&["verify", "/nonexistent/file.toml", "--name", "x"]);
    assert_eq!(missing.status.code(), Some(2));
    let broken = write_temp("[algebras.a\n");
    let out = rly(&["verify", broken.path().to_str().unwrap(), "--name", "a"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    let s = sample();
    assert_eq!(rly(&["verify", s.to_str().unwrap(), "--name", "nope"]).status.code(), Some(2));
    assert_eq!(
        rly(&["cohomology", s.to_str().unwrap(), "--algebra", "two_dim", "--rep", "adj", "--complex", "xyz"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(rly(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cohomology_prints_the_table_and_checks() {
    let s = sample();
    let out = rly(&[
        "cohomology",
        s.to_str().unwrap(),
        "--algebra",
        "two_dim",
        "--operator",
        "T",
        "--rep",
        "adj",
        "--complex",
        "rly",
        "--max-degree",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let dims: Vec<usize> = text
        .lines()
        .filter_map(|l| {
            let cols: Vec<&str> = l.split_whitespace().collect();
            (cols.len() == 5 && cols[0].parse::<usize>().is_ok()).then(|| cols[1].parse().unwrap())
        })
        .collect();
    assert_eq!(dims, vec![4, 10, 12], "{text}");
    assert!(text.contains("d^2 d^1 = 0: PASS") && text.contains("chain map in degree 2: PASS"), "{text}");
}

#[test]
fn json_output_matches_the_library_result() {
    let s = sample();
    let ws = Workspace::load(std::slice::from_ref(&s)).unwrap();
    let out = rly(&["--json", "verify", s.to_str().unwrap(), "--name", "adj"]);
    let parsed: VerifyOutcome = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed, commands::verify(&ws, "adj").unwrap());
    let out = rly(&[
        "cohomology",
        s.to_str().unwrap(),
        "--algebra",
        "two_dim",
        "--operator",
        "T",
        "--rep",
        "adj",
        "--complex",
        "ly",
        "--json",
    ]);
    let parsed: CohomologyOutcome = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed, commands::cohomology(&ws, "two_dim", Some("T"), "adj", ComplexKind::Ly, 3).unwrap());
    assert_eq!(parsed.table.unwrap().dims(), vec![4, 6, 6]);
}

#[test]
fn classify_and_deform_check_run() {
    let s = sample();
    let out =
        rly(&["classify-extensions", s.to_str().unwrap(), "--algebra", "two_dim", "--operator", "T", "--rep", "adj"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("betti(2) = 2"));
    let out = rly(&["deform-check", s.to_str().unwrap(), "--order", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = rly(&["deform-check", s.to_str().unwrap(), "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let s = sample();
    let args = ["classify-extensions", s.to_str().unwrap(), "--algebra", "two_dim", "--operator", "T", "--rep", "adj"];
    assert_eq!(rly(&args).stdout, rly(&args).stdout);
}
