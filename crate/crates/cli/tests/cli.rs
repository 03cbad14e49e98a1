//! The `hnnpat` binary end to end.

use std::process::{Command, Output};

fn hnnpat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hnnpat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ball_csv_at_radius_zero() {
    let o = hnnpat(&["ball", "--radius", "0", "--format", "csv", "--no-cache"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "radius,sphere_size\n0,1\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hnnpat(&["ball", "--presentation", "bs12", "--radius", "1", "--no-cache"]).status.code(), Some(2));
    assert_eq!(hnnpat(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn nonreg_rows() {
    let o = hnnpat(&["nonreg", "--n-max", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<String>> =
        stdout(&o).lines().skip(1).map(|l| l.split(',').take(2).map(String::from).collect()).collect();
    assert_eq!(rows, [["1", "1"], ["2", "3"]]);
}

#[test]
fn one_move_patterns() {
    let o = hnnpat(&["moves", "--depth", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(-1)(0)(10)(1)"), "{out}");
}

#[test]
fn almost_convex_small_radius_passes() {
    let o = hnnpat(&["ac", "--radius", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"passed\": true"));
}

#[test]
fn normalize_word() {
    let o = hnnpat(&["normalize", "s' a s c'"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}
