//! The acceptance suite: one test per criterion, each printing its
//! pass/fail line. Everything is exact; there are no tolerances to tune.

use nonstd_cones::selftest;

fn check(report: selftest::CriterionReport) {
    println!("{report}");
    assert!(report.passed, "{report}");
}

#[test]
fn criterion_1_decomposition_round_trip() {
    check(selftest::decomposition_round_trip());
}

#[test]
fn criterion_2_sign_oracle_coherence() {
    check(selftest::sign_oracle_coherence());
}

#[test]
fn criterion_3_closure_theorems() {
    check(selftest::closure_theorems());
}

#[test]
fn criterion_4_reduction_laws() {
    check(selftest::reduction_laws());
}

#[test]
fn criterion_5_worked_examples() {
    check(selftest::worked_examples());
}

#[test]
fn criterion_6_panti_cross_check() {
    check(selftest::panti_cross_check());
}

#[test]
fn criterion_7_galois_and_closed_sets() {
    check(selftest::galois_and_closed_sets());
}

#[test]
fn criterion_8_strong_order_units() {
    check(selftest::strong_order_units());
}

#[test]
fn criterion_9_appendix_checks() {
    check(selftest::appendix_checks());
}
