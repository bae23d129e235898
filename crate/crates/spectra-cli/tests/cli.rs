//! End-to-end runs of the `spectra` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("spectra-cli-test-{name}"));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_sierpinski_is_spectral() {
    let file = write_temp(
        "sierpinski.json",
        r#"{"kind":"topology","points":["1","2"],"opens":[[],["1"],["1","2"]]}"#,
    );
    let out = spectra(&["classify", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("spectral: true"), "{text}");
}

#[test]
fn classify_template_x5_reports_the_cut_witness() {
    let file = write_temp("x5.json", r#"{"kind":"template","blocks":[{"name":"Q","type":"eta"}]}"#);
    let out = spectra(&["classify", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("almost_sober: false — witness: cut below"), "{text}");
}

#[test]
fn malformed_opens_fail_with_a_named_pair() {
    let file = write_temp(
        "bad.json",
        r#"{"kind":"topology","points":["1","2","3"],"opens":[[],["1"],["2"],["1","2","3"]]}"#,
    );
    let out = spectra(&["classify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not closed under union"), "{err}");
}

#[test]
fn spec_of_a_ring_ideal_prints_empty_spectrum() {
    let file = write_temp(
        "even.json",
        r#"{"kind":"ring","ideal_of":{"modulus":8},"carrier":["0","2","4","6"]}"#,
    );
    let out = spectra(&["spec", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Spec is empty."), "{text}");
}

#[test]
fn spec_writes_dot_output() {
    let file = write_temp(
        "chain3.json",
        r#"{"kind":"lattice","elements":["0","1","2"],"le":[["0","1"],["1","2"]]}"#,
    );
    let dot_path = std::env::temp_dir().join("spectra-cli-test-chain3.dot");
    let out = spectra(&["spec", file.to_str().unwrap(), "--dot", dot_path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.contains("digraph specialization"), "{dot}");
    assert!(dot.contains("->"), "Sierpiński has one cover edge: {dot}");
}

#[test]
fn audit_diagram_exits_zero_with_seven_passes() {
    let out = spectra(&["audit", "diagram"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("suite diagram: 7/7 passed"), "{text}");
}

#[test]
fn audit_symbolic_oracle_requires_a_seed() {
    let out = spectra(&["audit", "symbolic-oracle"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--seed"), "{err}");
}

#[test]
fn audit_symbolic_oracle_with_seed_passes() {
    let out = spectra(&["audit", "symbolic-oracle", "--seed", "7", "--trials", "25"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("suite symbolic-oracle: 25/25 passed"), "{text}");
}

#[test]
fn audit_unknown_suite_is_an_error() {
    let out = spectra(&["audit", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts_posets_on_three_points() {
    let out = spectra(&["enumerate", "posets", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("19"), "{text}");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let file = write_temp(
        "det.json",
        r#"{"kind":"topology","points":["a","b","c"],"opens":[[],["a","b"],["a","b","c"]]}"#,
    );
    let a = spectra(&["classify", file.to_str().unwrap()]);
    let b = spectra(&["classify", file.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let s1 = spectra(&["audit", "symbolic-oracle", "--seed", "11", "--trials", "40"]);
    let s2 = spectra(&["audit", "symbolic-oracle", "--seed", "11", "--trials", "40"]);
    assert_eq!(s1.stdout, s2.stdout, "parallel workers must not change bytes");
}

#[test]
fn roundtrip_spaces_audit_reports_219_t0_spaces() {
    let out = spectra(&["audit", "roundtrip-spaces", "--max-points", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4 points: 355 topologies, 219 T0"), "{text}");
}
