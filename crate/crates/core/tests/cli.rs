//! End-to-end tests for the `hecke-trace` binary: golden outputs, exit
//! codes, and byte-for-byte determinism across repeated invocations.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-trace"))
        .args(args)
        .output()
        .expect("failed to spawn hecke-trace")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout not UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr not UTF-8")
}

#[test]
fn satake_gl2_golden() {
    let out = run(&["satake", "2", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "q^(1/2)*X1^1 + q^(1/2)*X2^1\n");
}

#[test]
fn min_reps_golden() {
    let out = run(&["min-reps", "--shape", "2,1", "--type", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1,2,3\n1,3,2\n");
}

#[test]
fn speh_expand_golden() {
    let out = run(&["speh-expand", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "Std[St(2;-|-1/2),St(2;-|1/2)] + -Std[St(3;-|0),St(1;-|0)]\n"
    );
}

#[test]
fn closed_form_odd_n_is_domain_error() {
    let out = run(&[
        "trace",
        "closed-form",
        "--case",
        "3",
        "--n",
        "5",
        "--lambda",
        "3/5:5",
        "--rep",
        "Speh(2,3;-|0)",
        "--alpha",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("Prop 5.3(3) requires n even"),
        "unexpected stderr: {}",
        stderr(&out)
    );
    assert!(stdout(&out).is_empty());
}

#[test]
fn non_coprime_proper_induction_is_unsupported() {
    let out = run(&[
        "trace",
        "engine",
        "--lambda",
        "1/2:4",
        "--rep",
        "Std[St(2;-|0),St(2;-|0)]",
        "--alpha",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(
        stderr(&out).contains("Prop 5.1/Lemma 5.1"),
        "unexpected stderr: {}",
        stderr(&out)
    );
}

#[test]
fn trace_engine_golden() {
    let out = run(&[
        "trace", "engine", "--lambda", "1:1,0:1", "--rep", "St(2;-|0)", "--alpha", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "# provenance=engine sign=proof\n1\n");
}

#[test]
fn bad_usage_exits_nonzero() {
    let out = run(&["satake", "2", "1"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let argvs: [&[&str]; 3] = [
        &["satake", "4", "2", "2"],
        &[
            "trace",
            "engine",
            "--lambda",
            "2/3:3,1/3:3",
            "--rep",
            "Speh(2,3;eps|0)",
            "--alpha",
            "1",
        ],
        &["truncate", "chi", "4", "1", "2", "--m1", "3,1", "--m2", "3,1"],
    ];
    for argv in argvs {
        let a = run(argv);
        let b = run(argv);
        assert_eq!(a.status.code(), Some(0), "argv {argv:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {argv:?}");
        assert!(!a.stdout.is_empty());
    }
}
