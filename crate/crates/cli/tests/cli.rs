//! End-to-end tests of the `arrcomb` binary: pipelines, file formats,
//! exit codes, and report determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use arrcomb_cli::formats::ArrangementFile;
use arrcomb_cli::report::Report;

fn arrcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrcomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = arrcomb(args);
    assert!(
        out.status.success(),
        "arrcomb {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exited")
}

#[test]
fn analyze_ceva_json() {
    let json = stdout_of(&["analyze", "--family", "monomial", "--m", "3", "--json"]);
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.n, 9);
    assert_eq!(report.beta.get(&3), Some(&2));
    assert_eq!(report.multinets.len(), 4);
    assert_eq!(report.verdict.status, "NOT_1_FORMAL");
    assert!(report.multinets.iter().all(|m| m.net && m.reduced));
    // Lossless serialization round-trip.
    let round: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(report, round);
    assert_eq!(json.trim_end(), report.to_json());
}

#[test]
fn analyze_braid3_text() {
    let text = stdout_of(&["analyze", "--family", "braid3", "--text"]);
    assert!(text.contains("(t - 1)^5 (t^2 + t + 1)"), "{text}");
    assert!(text.contains("verdict: UNKNOWN"), "{text}");
    assert!(text.contains("NONTRIVIAL_MONODROMY_NO_CRITERION"), "{text}");
    assert!(text.contains("b1(F): 7"), "{text}");
}

#[test]
fn text_and_json_agree_on_values() {
    let json = stdout_of(&["analyze", "--family", "hessian", "--json"]);
    let report: Report = serde_json::from_str(&json).unwrap();
    let text = stdout_of(&["analyze", "--family", "hessian", "--text"]);
    assert_eq!(report.render_text(), text.trim_end().to_string() + "\n");
    assert!(text.contains("beta_2 = 2"));
    assert!(text.contains("FOUR_NET_CASE"));
    assert_eq!(report.verdict.status, "UNKNOWN");
}

#[test]
fn analyze_is_deterministic() {
    let first = stdout_of(&["analyze", "--family", "monomial", "--m", "4", "--json"]);
    let second = stdout_of(&["analyze", "--family", "monomial", "--m", "4", "--json"]);
    assert_eq!(first, second);
}

#[test]
fn emit_parse_emit_identity_and_reanalysis() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hessian.json");
    let out = arrcomb(&["family", "emit", "hessian", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);

    let text = fs::read_to_string(&path).unwrap();
    let file = ArrangementFile::parse(&text).unwrap();
    let geo = file.geometric.as_ref().unwrap();
    assert_eq!(geo.cyclotomic_order, 3);
    assert_eq!(geo.hyperplanes.len(), 12);
    assert_eq!(file.to_json(), text);

    // Re-analyzing the emitted file: same combinatorics, but without the
    // family tag the composite divisors stay open.
    let json = stdout_of(&["analyze", path.to_str().unwrap(), "--json"]);
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.beta.get(&2), Some(&2));
    assert_eq!(report.verdict.status, "UNKNOWN");
    assert!(report
        .verdict
        .reasons
        .contains(&"PARTIAL_DELTA1".to_string()));
}

#[test]
fn emit_pencil() {
    let json = stdout_of(&["family", "emit", "pencil", "--n", "5"]);
    let file = ArrangementFile::parse(&json).unwrap();
    let geo = file.geometric.unwrap();
    assert_eq!(geo.cyclotomic_order, 5);
    assert_eq!(geo.hyperplanes.len(), 5);
    // phi(5) = 4 coefficient pairs per coordinate.
    assert_eq!(geo.hyperplanes[0][0].len(), 4);
}

#[test]
fn family_list_names_all_tags() {
    let text = stdout_of(&["family", "list"]);
    for tag in ["pencil", "braid3", "monomial", "hessian"] {
        assert!(text.contains(tag), "missing {tag}: {text}");
    }
}

#[test]
fn validation_failures_exit_one() {
    let out = arrcomb(&["family", "emit", "monomial", "--m", "0"]);
    assert_eq!(exit_code(&out), 1);

    let out = arrcomb(&["analyze", "--family", "nosuch"]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown family"));

    let out = arrcomb(&["analyze", "--family", "pencil"]);
    assert_eq!(exit_code(&out), 1); // missing --n

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(
        &path,
        r#"{"name":"broken","combinatorial":{"n":4,"flats":[[1,2,3],[1,2,4]]}}"#,
    )
    .unwrap();
    let out = arrcomb(&["analyze", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("pair {1, 2}"), "{stderr}");
}

#[test]
fn io_failures_exit_two() {
    let out = arrcomb(&["analyze", "/nonexistent/path.json"]);
    assert_eq!(exit_code(&out), 2);
    let out = arrcomb(&[
        "analyze",
        "--family",
        "braid3",
        "--out",
        "/nonexistent/dir/report.json",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn analyze_combinatorial_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("braid-comb.json");
    fs::write(
        &path,
        r#"{
  "name": "braid3-combinatorial",
  "combinatorial": { "n": 6, "flats": [[1,3,6],[1,4,5],[2,3,5],[2,4,6]] }
}"#,
    )
    .unwrap();
    let json = stdout_of(&["analyze", path.to_str().unwrap(), "--json"]);
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.beta.get(&3), Some(&1));
    assert_eq!(report.multinets.len(), 1);
    assert_eq!(report.multinets[0].rendered, "(12|34|56)");
    assert_eq!(report.verdict.status, "UNKNOWN");
}

#[test]
fn out_flag_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let stdout = stdout_of(&["analyze", "--family", "braid3", "--json"]);
    let out = arrcomb(&[
        "analyze",
        "--family",
        "braid3",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let written = fs::read_to_string(&path).unwrap();
    assert_eq!(stdout.trim_end(), written.trim_end());
    assert!(!Path::new(&path.with_extension("tmp")).exists());
}

#[test]
fn no_enumerate_and_primes_flags() {
    let json = stdout_of(&[
        "analyze",
        "--family",
        "monomial",
        "--m",
        "3",
        "--no-enumerate",
        "--primes",
        "3,7",
        "--json",
    ]);
    let report: Report = serde_json::from_str(&json).unwrap();
    assert!(report.multinets.is_empty());
    assert_eq!(report.beta.keys().copied().collect::<Vec<_>>(), vec![3, 7]);
    // The beta_3 criterion still decides without enumeration.
    assert_eq!(report.verdict.status, "NOT_1_FORMAL");
    assert_eq!(report.resonance.essential, 0);
}

#[test]
fn version_prints() {
    let text = stdout_of(&["version"]);
    assert!(text.starts_with("arrcomb "));
}
