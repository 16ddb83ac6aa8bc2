//! End-to-end runs of the binary: ingestion, formats, exit codes.

use std::io::Write as _;
use std::process::{Command, Output};

fn kervaire(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kervaire"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 output")
}

fn temp_toml(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new()
        .suffix(".toml")
        .tempfile()
        .expect("temp file");
    f.write_all(content.as_bytes()).expect("write");
    f
}

#[test]
fn bundled_assignment_table_drives_the_default_run() {
    let out = kervaire(&["jones-arf"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("q(AC over a) = 0, q(AD over a b1 a^-1) = 1, q(BC over b2) = 1"));
    assert!(text.contains("arf/recorded-pairing  1"));
}

#[test]
fn inconsistent_assignments_are_a_usage_failure() {
    let table = temp_toml(
        "[[assignment]]\nloop = \"b1\"\nfiber = \"CD\"\nq = 0\n\n\
         [[assignment]]\nloop = \"a b1 a^-1\"\nfiber = \"AD\"\nq = 1\n",
    );
    let out = kervaire(&["jones-arf", "--q-table", table.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("refinement rule"));
}

#[test]
fn unknown_catalog_entries_are_rejected() {
    let table = temp_toml("[[assignment]]\nloop = \"z\"\nfiber = \"AB\"\nq = 1\n");
    let out = kervaire(&["jones-arf", "--q-table", table.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("no catalog entry"));
}

#[test]
fn unknown_keys_are_rejected() {
    let file = temp_toml("truncations = [4]\npi = [[1]]\nextra = 1\n");
    let out = kervaire(&["gysin", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown field"));
}

#[test]
fn gysin_reproduces_the_projective_product_cover() {
    let file = temp_toml("truncations = [8, 8]\npi = [[1, 0], [0, 1]]\n");
    let out = kervaire(&["gysin", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("1,1,1,1,1,1,1,2,1,1,1,1,1,1,1"));
}

#[test]
fn wang_requires_one_matrix_per_degree() {
    let file = temp_toml("dims = [1, 1]\nmatrices = [[[1]]]\n");
    let out = kervaire(&["wang", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr_of(&out).is_empty());
}

#[test]
fn wang_handles_empty_degrees() {
    let file = temp_toml("dims = [1, 0, 2]\nmatrices = [[[1]], [], [[1, 0], [1, 1]]]\n");
    let out = kervaire(&["wang", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn flat_bundles_must_kill_the_relator() {
    let file = temp_toml(
        "[[generator]]\nperm = [1, 2, 3, 0]\nsigns = [1, 1, 1, 1]\n\n\
         [[generator]]\nperm = [0, 1, 2, 3]\nsigns = [1, 1, 1, 1]\n\n\
         [[generator]]\nperm = [0, 1, 2, 3]\nsigns = [1, 1, 1, 1]\n",
    );
    let out = kervaire(&["sw-flat", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn custom_flat_bundles_report_their_identities() {
    let file = temp_toml(
        "[[generator]]\nperm = [2, 1, 0, 3]\nsigns = [1, 1, 1, 1]\n\n\
         [[generator]]\nperm = [1, 0, 3, 2]\nsigns = [1, 1, 1, 1]\n\n\
         [[generator]]\nperm = [3, 2, 1, 0]\nsigns = [1, 1, 1, 1]\n",
    );
    let out = kervaire(&["sw-flat", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("flat/pin-difference"));
    assert!(text.contains("0 hard failures"));
}

#[test]
fn machine_format_is_versioned_json() {
    let out = kervaire(&["--format", "machine", "jones-betti"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["summary"]["clean"], true);
    assert_eq!(doc["summary"]["hard_failures"], 0);
    assert!(doc["checks"].as_array().expect("array").len() > 5);
}

#[test]
fn text_output_is_stable_across_runs() {
    let first = kervaire(&["jones-gram"]);
    let second = kervaire(&["jones-gram"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}

#[test]
fn failed_identities_exit_one() {
    let out = kervaire(&[
        "--format",
        "machine",
        "octonion",
        "--samples",
        "2",
        "--tolerance",
        "1e-300",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(doc["summary"]["clean"], false);
}

#[test]
fn bad_gram_matrices_are_rejected() {
    let file = temp_toml("gram = [[1]]\nq = [0]\n");
    let out = kervaire(&["arf", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("not alternating"));
}
