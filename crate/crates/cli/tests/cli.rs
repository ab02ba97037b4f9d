use std::path::Path;
use std::process::{Command, Output};

fn hatcraft(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hatcraft"))
        .args(args)
        .current_dir(dir)
        .env_remove("HATCRAFT_MAX_CONFIGS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// The report without its timing trailer.
fn payload(o: &Output) -> String {
    let out = stdout(o);
    let (body, trailer) = out.split_once("\n--\n").expect("report has a trailer");
    assert!(trailer.starts_with("elapsed-ms "));
    body.to_string()
}

fn scratch() -> tempfile::TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn construct_then_verify_k22() {
    let dir = scratch();
    let built = hatcraft(dir.path(), &["construct", "k22", "-o", "k22.hg", "-s", "k22.hs"]);
    assert_eq!(built.status.code(), Some(0));
    let checked = hatcraft(dir.path(), &["verify", "-g", "k22.hg", "-s", "k22.hs", "-q", "3"]);
    assert_eq!(checked.status.code(), Some(0));
    let body = payload(&checked);
    assert!(body.contains("verdict solved"));
    assert!(body.contains("input graph k22.hg sha256 "));
}

#[test]
fn even_cycle_losing_set() {
    let dir = scratch();
    let built = hatcraft(dir.path(), &["construct", "even-cycle", "4", "-o", "c.hg", "-s", "c.hs"]);
    assert_eq!(built.status.code(), Some(0));
    let out = hatcraft(dir.path(), &["losing", "-g", "c.hg", "-s", "c.hs", "-q", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let body = payload(&out);
    assert!(body.contains("losing-count 3"));
    assert_eq!(body.lines().filter(|l| l.split(' ').count() == 8).count(), 3);
}

#[test]
fn counting_bound_holds() {
    let dir = scratch();
    let out = hatcraft(dir.path(), &["bound", "counting", "--n", "4", "--I", "3", "--q", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(payload(&out).contains("counting-bound holds"));
    let out = hatcraft(dir.path(), &["bound", "counting", "--n", "6", "--I", "0", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn payloads_are_deterministic() {
    let dir = scratch();
    hatcraft(dir.path(), &["construct", "clique", "3", "-o", "k3.hg", "-s", "k3.hs"]);
    let runs: Vec<&[&str]> = vec![
        &["verify", "-g", "k3.hg", "-s", "k3.hs", "-q", "3", "--sample", "5000", "--seed", "7"],
        &["losing", "-g", "k3.hg", "-s", "k3.hs", "-q", "3"],
        &["solve", "-g", "k3.hg", "-q", "3"],
        &["compose", "gadgets", "--kind", "cycle3", "-p", "3"],
        &["--threads", "1", "compose", "gadgets", "--kind", "cycle3", "-p", "3"],
    ];
    for args in runs {
        let a = hatcraft(dir.path(), args);
        let b = hatcraft(dir.path(), args);
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
        assert_eq!(payload(&a), payload(&b), "{args:?}");
    }
    // thread count changes the echo but not the verdict
    let par = payload(&hatcraft(dir.path(), &["compose", "gadgets", "--kind", "cycle3", "-p", "3"]));
    let seq = payload(&hatcraft(
        dir.path(),
        &["--threads", "1", "compose", "gadgets", "--kind", "cycle3", "-p", "3"],
    ));
    let strip = |s: &str| s.lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&par), strip(&seq));
}

#[test]
fn sampling_defaults_to_seed_zero() {
    let dir = scratch();
    hatcraft(dir.path(), &["construct", "clique", "3", "-o", "k3.hg", "-s", "k3.hs"]);
    let out = hatcraft(dir.path(), &["verify", "-g", "k3.hg", "-s", "k3.hs", "-q", "3", "--sample", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(payload(&out).contains("seed 0"));
}

#[test]
fn config_cap_from_the_environment() {
    let dir = scratch();
    hatcraft(dir.path(), &["construct", "clique", "3", "-o", "k3.hg", "-s", "k3.hs"]);
    let out = Command::new(env!("CARGO_BIN_EXE_hatcraft"))
        .args(["verify", "-g", "k3.hg", "-s", "k3.hs", "-q", "3"])
        .current_dir(dir.path())
        .env("HATCRAFT_MAX_CONFIGS", "10")
        .output()
        .unwrap();
    assert!(out.status.code().unwrap() >= 64);
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds cap 10"));
}

#[test]
fn usage_and_io_errors() {
    let dir = scratch();
    let out = hatcraft(dir.path(), &["verify", "-g", "x.hg", "-q", "3"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--strategy"));
    let out = hatcraft(dir.path(), &["verify", "-g", "missing.hg", "-s", "x.hs", "-q", "3"]);
    assert_eq!(out.status.code(), Some(66));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.hg"));
    std::fs::write(dir.path().join("bad.hg"), "not a graph\n").unwrap();
    let out = hatcraft(dir.path(), &["solve", "-g", "bad.hg", "-q", "2"]);
    assert_eq!(out.status.code(), Some(65));
    let out = hatcraft(dir.path(), &["construct", "path", "3", "-o", "p.hg", "-s", "p.hs"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn solve_writes_a_strategy_that_verifies() {
    let dir = scratch();
    hatcraft(dir.path(), &["construct", "directed-cycle", "3", "-o", "c3.hg"]);
    let out = hatcraft(dir.path(), &["solve", "-g", "c3.hg", "-q", "2", "-s", "c3.hs"]);
    assert_eq!(out.status.code(), Some(0));
    let out = hatcraft(dir.path(), &["verify", "-g", "c3.hg", "-s", "c3.hs", "-q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = hatcraft(dir.path(), &["solve", "-g", "c3.hg", "-q", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn certificates_and_criticality() {
    let dir = scratch();
    hatcraft(dir.path(), &["construct", "path", "4", "-o", "p.hg"]);
    let out = hatcraft(dir.path(), &["bound", "certify", "-g", "p.hg", "-q", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(payload(&out).contains("certificate "));
    hatcraft(dir.path(), &["construct", "k22", "-o", "k.hg", "-s", "k.hs"]);
    let out = hatcraft(dir.path(), &["critical", "-g", "k.hg", "-s", "k.hs", "-q", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(payload(&out).contains("critical edge-critical"));
    let out = hatcraft(dir.path(), &["gadget", "check", "--kind", "six-vertex"]);
    assert_eq!(out.status.code(), Some(0));
}
