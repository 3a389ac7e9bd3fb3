use std::io::Write;

use polycount::verify::run_criterion;
use polycount::Budget;

fn criterion(id: u32) {
    let report = run_criterion(id, &Budget::default()).expect("criterion runs");
    // Written to the raw handle so the lines survive libtest output capture.
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{}", report.status_line());
    for c in report.failures() {
        let tag = if c.known_erratum { "known erratum" } else { "unexpected" };
        let _ = writeln!(err, "  {tag}: {}: {}", c.name, c.detail);
    }
    drop(err);
    let unexpected: Vec<_> = report.unexpected_failures().map(|c| c.name.clone()).collect();
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
    let stale: Vec<_> = report.stale_errata().map(|c| c.name.clone()).collect();
    assert!(stale.is_empty(), "registered errata now pass: {stale:?}");
}

#[test]
fn criterion_1_automaton_matches_expansion() {
    criterion(1);
}

#[test]
fn criterion_2_repunit_powers_of_one_plus_x() {
    criterion(2);
}

#[test]
fn criterion_3_repunit_generating_functions() {
    criterion(3);
}

#[test]
fn criterion_4_qpow_laws() {
    criterion(4);
}

#[test]
fn criterion_5_runs_of_ones_and_lucas() {
    criterion(5);
}

#[test]
fn criterion_6_consecutive_linear_forms() {
    criterion(6);
}

#[test]
fn criterion_7_lattice_counts() {
    criterion(7);
}

#[test]
fn criterion_8_traveling_products() {
    criterion(8);
}

#[test]
fn criterion_9_automaton_invariants() {
    criterion(9);
}
