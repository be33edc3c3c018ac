//! End-to-end runs of the `essence` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use essence::syntax::parse;
use essence::{Calculus, Syntax};

fn essence(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_essence")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn parse_prints_back() {
    let o = essence(&["parse", "-e", "let x = v w in x"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "let x = v w in x");
    let o = essence(&["parse", "--calculus", "q", "-e", "cut(^(\\x. ^x), y. y(w, z. ^z))"]);
    assert_eq!(stdout(&o).trim(), "cut_v(\\x. ^x, y. y(w, z. ^z))");
}

#[test]
fn parse_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_essence"))
        .args(["parse", "--calculus", "vfs"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"cut_v(f, (x, y. ^y))\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o).trim(), "cut_v(f, (x, y. ^y))");
}

#[test]
fn syntax_errors_are_usage_errors() {
    let o = essence(&["parse", "-e", "\\x. )"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:5"));
    assert_eq!(essence(&["parse", "-e", "\\k. k"]).status.code(), Some(2));
}

#[test]
fn translate_stages() {
    let o = essence(&["translate", "-e", "x", "--pipeline", "vfs_translate", "--format", "structured"]);
    let out = stdout(&o);
    assert!(out.contains("stage:vfs_translate\tcalculus:vfs\tterm:cut_v(x, z"), "{out}");
    let two = essence(&["translate", "-e", "(\\x. x) y", "--pipeline", "vfs_translate,negative", "--format", "structured"]);
    let one = essence(&["translate", "-e", "(\\x. x) y", "--pipeline", "cps_translate", "--format", "structured"]);
    let last = |o: &Output| stdout(o).lines().last().unwrap().rsplit("term:").next().unwrap().to_string();
    let two = parse(Calculus::Cps, &last(&two)).unwrap();
    assert!(two.alpha_eq(&parse(Calculus::Cps, &last(&one)).unwrap()));
    let o = essence(&["translate", "-e", "x", "--pipeline", ""]);
    assert_eq!(stdout(&o).lines().count(), 1);
    assert_eq!(essence(&["translate", "-e", "x", "--pipeline", "negative"]).status.code(), Some(2));
}

#[test]
fn normalize_and_fuel() {
    let o = essence(&["normalize", "-e", "(\\x. x) ((\\y. y) z)"]);
    assert_eq!(stdout(&o).trim(), "z");
    let o = essence(&["normalize", "-e", "(\\x. x) ((\\y. y) z)", "--trace"]);
    assert!(stdout(&o).contains("[lc/B @ root]"));
    let o = essence(&["normalize", "-e", "f (g x) (h y)", "--rules", "let_1,let_2,assoc", "--calculus", "lc"]);
    let o2 = essence(&["parse", "--calculus", "anf", "-e", stdout(&o).trim()]);
    assert_eq!(o2.status.code(), Some(0));
    let o = essence(&["normalize", "-e", "(\\x. x x) (\\x. x x)", "--max-steps", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn typecheck_with_ascription() {
    let o = essence(&["typecheck", "-e", "\\x. f x : a -> a", "--context", "f : a -> a"]);
    assert_eq!(stdout(&o).trim(), "\\x. f x : a -> a");
    let o = essence(&["typecheck", "-e", "\\x. x"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_suites() {
    let o = essence(&["check", "thm4-ves-vfs", "--samples", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS thm4-ves-vfs"));
    let o = essence(&["check", "thm3-roundtrip", "--samples", "50", "--format", "structured"]);
    assert!(stdout(&o).lines().all(|l| l.starts_with("record:")));
    assert_eq!(essence(&["check", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn check_other_seed_passes() {
    for suite in ["thm4-ves-vfs", "thm5-cnf-cps", "refl-q-lnf"] {
        let o = essence(&["check", suite, "--seed", "42"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}
