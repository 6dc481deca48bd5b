use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const CSV_HEADER: &str = "trial,seed,n,m,mu,k_r1,js_r1,cert,edits_or_t,verified,ms";

fn specstab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specstab"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}\nstderr: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn probe_twice_gives_identical_csv() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &'static str| {
        vec!["probe", "--n", "24", "--r", "2", "--trials", "4", "--seed", "9", "--out", out]
    };
    ok(&specstab(dir.path(), &args("a.json")));
    ok(&specstab(dir.path(), &args("b.json")));
    let a = fs::read_to_string(dir.path().join("a.csv")).unwrap();
    let b = fs::read_to_string(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.lines().next(), Some(CSV_HEADER));
    assert_eq!(a.lines().count(), 5);
    assert!(dir.path().join("a.json").exists());
}

#[test]
fn probe_without_out_prints_csv() {
    let dir = tempfile::tempdir().unwrap();
    let stdout = ok(&specstab(dir.path(), &["probe", "--n", "12", "--trials", "2", "--m", "30"]));
    let rows: Vec<&str> = stdout.lines().collect();
    assert_eq!(rows[0], CSV_HEADER);
    assert!(rows[1].starts_with("0,0,12,30,"));
    assert!(rows[2].starts_with("1,1,12,30,"));
}

#[test]
fn generate_dichotomy_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    ok(&specstab(dir.path(), &["generate", "--n", "15", "--turan", "3", "--out", "g.txt"]));
    let text = fs::read_to_string(dir.path().join("g.txt")).unwrap();
    assert!(text.starts_with("15 75\n"));

    let out = specstab(
        dir.path(),
        &["dichotomy", "--in", "g.txt", "--r", "3", "--joint-threshold", "1", "--out", "c.json"],
    );
    ok(&out);
    assert!(String::from_utf8_lossy(&out.stderr).contains("condition B (0), verified: true"));
    assert_eq!(ok(&specstab(dir.path(), &["verify", "--in", "g.txt", "--cert", "c.json"])), "valid\n");

    // the certificate does not fit a different graph
    ok(&specstab(dir.path(), &["generate", "--n", "15", "--m", "80", "--seed", "2", "--out", "h.txt"]));
    let out = specstab(dir.path(), &["verify", "--in", "h.txt", "--cert", "c.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("invalid"));
}

#[test]
fn analyze_reports_spectral_radius() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("k4.txt"), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let stdout = ok(&specstab(dir.path(), &["analyze", "--in", "k4.txt", "--r", "2"]));
    assert!(stdout.contains("\"k_r1\": 4"));
    assert!(stdout.contains("\"js_r1\": 2"));
    assert!(stdout.contains("\"mu\": 3.0") || stdout.contains("\"mu\": 2.99999"));
}

#[test]
fn malformed_input_fails_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "3 2\n0 1\n2 1\n").unwrap();
    let out = specstab(dir.path(), &["analyze", "--in", "bad.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn unknown_flag_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = specstab(dir.path(), &["probe", "--n", "10", "--bogus"]);
    assert!(!out.status.success());
}
