//! Acceptance gate: runs every verification suite A1–A10 and prints one
//! pass/fail line per criterion.

use hecke_trace::verify::run_suite;

#[test]
fn acceptance_criteria() {
    let reports = run_suite(None);
    assert_eq!(reports.len(), 10);
    let mut failed = 0usize;
    for r in &reports {
        println!("{}", r.line());
        if !r.passed {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
