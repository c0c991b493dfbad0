//! Golden tests for the `lpf` binary: exact output bytes and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lpf_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lpf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn pf_generic_4_canonical_output() {
    let out = lpf(&["pf", "--pattern", "generic", "--size", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "-l*a[1,3]*a[2,4] + l*a[1,4]*a[2,3] + a[1,2]*a[3,4]\n"
    );
}

#[test]
fn pf_ones_6_both_algorithms() {
    let out = lpf(&["pf", "--pattern", "ones", "--size", "6", "--algorithm", "both"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1\nalgorithms agree\n");
}

#[test]
fn pf_condensation_zero_pivot_exits_2() {
    let document = "\
size = 6
1,2 = 1
1,3 = 1
1,4 = 1
1,5 = 1
1,6 = 1
2,3 = 1
2,4 = 1
2,5 = 1
2,6 = 1
3,4 = 0
3,5 = 1
3,6 = 1
4,5 = 1
4,6 = 1
5,6 = 1
";
    let out = lpf_stdin(&["pf", "--input", "-", "--algorithm", "condensation"], document);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("pivot"), "{}", stderr_of(&out));
    // the expansion algorithm still works on the same document
    let out = lpf_stdin(&["pf", "--input", "-", "--algorithm", "expansion"], document);
    assert!(out.status.success());
}

#[test]
fn pf_lambda_rational_specialization() {
    let out = lpf(&["pf", "--pattern", "generic", "--size", "4", "--lambda", "1/2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "(2*a[1,2]*a[3,4] - a[1,3]*a[2,4] + a[1,4]*a[2,3])/2\n"
    );
    let out = lpf(&["pf", "--pattern", "generic", "--size", "4", "--lambda", "1"]);
    assert_eq!(
        stdout_of(&out),
        "a[1,2]*a[3,4] - a[1,3]*a[2,4] + a[1,4]*a[2,3]\n"
    );
    let out = lpf(&["pf", "--pattern", "generic", "--size", "4", "--lambda", "-1"]);
    assert_eq!(
        stdout_of(&out),
        "a[1,2]*a[3,4] + a[1,3]*a[2,4] - a[1,4]*a[2,3]\n"
    );
}

#[test]
fn pf_explicit_entries_from_file() {
    let dir = std::env::temp_dir().join("lpf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("doc4.txt");
    std::fs::write(
        &path,
        "# 4x4 with polynomial entries\nsize = 4\n1,2 = l\n1,3 = 0\n1,4 = 1\n2,3 = 1\n2,4 = 0\n3,4 = x[1]\n",
    )
    .unwrap();
    let out = lpf(&["pf", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    // l * x[1] + l * (nothing for 13/24) + 1*1 with statistics weights:
    // m=((1,2),(3,4)): +a12 a34 = l*x1; m=((1,3),(2,4)): -l*0*0 = 0;
    // m=((1,4),(2,3)): +l*1*1 = l
    assert_eq!(stdout_of(&out), "l*x[1] + l\n");
}

#[test]
fn pf_document_errors_exit_2() {
    let out = lpf_stdin(&["pf", "--input", "-"], "size = 4\npattern = generic\n1,2 = 1\n");
    assert_eq!(out.status.code(), Some(2));
    let out = lpf_stdin(&["pf", "--input", "-"], "size = 3\npattern = generic\n");
    assert_eq!(out.status.code(), Some(2));
    let out = lpf_stdin(&["pf", "--input", "-"], "size = 2\n1,2 = a[2,1]\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("i < j"), "{}", stderr_of(&out));
}

#[test]
fn matchings_n1_with_stats() {
    let out = lpf(&["matchings", "--n", "1", "--stats"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "((1,2)) cross=0 nest=0 sign=+ lpow=0\ntotal = 1\n");
}

#[test]
fn matchings_n2_statistics_lines() {
    let out = lpf(&["matchings", "--n", "2", "--stats"]);
    assert_eq!(
        stdout_of(&out),
        "((1,2),(3,4)) cross=0 nest=0 sign=+ lpow=0\n\
         ((1,3),(2,4)) cross=1 nest=0 sign=- lpow=1\n\
         ((1,4),(2,3)) cross=0 nest=1 sign=+ lpow=1\n\
         total = 1\n"
    );
}

#[test]
fn matchings_n5_weighted_total_collapses_to_one() {
    let out = lpf(&["matchings", "--n", "5", "--stats"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 946);
    assert_eq!(lines[945], "total = 1");
}

#[test]
fn matchings_bounds() {
    let out = lpf(&["matchings", "--n", "8", "--stats"]);
    assert_eq!(out.status.code(), Some(64));
    let out = lpf(&["matchings", "--n", "0"]);
    assert_eq!(out.status.code(), Some(64));
    let out = lpf(&["matchings", "--n", "1"]);
    assert_eq!(stdout_of(&out), "((1,2))\n");
}

#[test]
fn audit_n2_summary_and_exit() {
    let out = lpf(&["audit", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("elements: 6\n"));
    assert!(text.contains("orbits: 3\n"));
    assert!(text.ends_with("all_cancelled: true\n"));
}

#[test]
fn audit_n3_summary_block() {
    let out = lpf(&["audit", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "elements: 42\norbits: 21\ncase 1: 5\ncase 2: 5\ncase 3: 5\n\
         case 4: 2\ncase 5: 2\ncase 6: 2\nall_cancelled: true\n"
    );
}

#[test]
fn audit_orbit_lines_render_in_figure_style() {
    let out = lpf(&["audit", "--n", "2", "--orbits"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let first = text.lines().next().unwrap();
    assert_eq!(first, "pi: () / m: (1,2)(3,4) / case: 1 / cancels: yes");
}

#[test]
fn audit_bounds() {
    let out = lpf(&["audit", "--n", "5"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn check_unknown_identity_exits_64() {
    let out = lpf(&["check", "--identity", "nosuch"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn check_xixj_lines_end_ok() {
    let out = lpf(&["check", "--identity", "xixj", "--max-n", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text
        .lines()
        .all(|line| line.ends_with("... ok")), "{text}");
    assert!(text.contains("(1-l)^2 * (x[1]-x[2])*(x[3]-x[4])*(x[5]-x[6])"));
}

#[test]
fn check_vandermonde_runs_only_when_named() {
    let out = lpf(&["check", "--identity", "all", "--max-n", "2"]);
    assert!(out.status.success());
    assert!(!stdout_of(&out).contains("vandermonde1"));
    let out = lpf(&["check", "--identity", "vandermonde1", "--max-n", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("vandermonde1 n=2"));
    assert!(text.contains("lambda=1 only"));
}

#[test]
fn usage_errors() {
    assert_eq!(lpf(&[]).status.code(), Some(64));
    assert_eq!(lpf(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(lpf(&["pf"]).status.code(), Some(64));
    assert_eq!(lpf(&["pf", "--pattern", "generic"]).status.code(), Some(64));
    assert_eq!(
        lpf(&["pf", "--pattern", "generic", "--size", "4", "--algorithm", "magic"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        lpf(&["pf", "--pattern", "generic", "--size", "4", "--lambda", "x"])
            .status
            .code(),
        Some(64)
    );
    assert!(lpf(&["help"]).status.success());
}
