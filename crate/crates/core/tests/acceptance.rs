//! Release gate: every criterion of the full acceptance suite must pass.
//!
//! Each test prints its pass/fail line; `suite_summary` prints the whole
//! board again in order at the end.

use krank::acceptance::{self, CriterionResult, Suite};
use krank::partition::PartitionTable;
use std::sync::{Arc, OnceLock};

fn table() -> &'static Arc<PartitionTable> {
    static TABLE: OnceLock<Arc<PartitionTable>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Arc::new(PartitionTable::new(acceptance::table_size_for(Suite::Full)).unwrap())
    })
}

fn assert_pass(r: CriterionResult) {
    println!("{}", r.line());
    assert!(r.passed, "{}", r.line());
}

#[test]
fn criterion_01_oracle_triple_agreement() {
    assert_pass(acceptance::criterion_1(table()));
}

#[test]
fn criterion_02_two_route_agreement() {
    assert_pass(acceptance::criterion_2(table()));
}

#[test]
fn criterion_03_row_sum_identity() {
    assert_pass(acceptance::criterion_3(table()));
}

#[test]
fn criterion_04_crank_special_values() {
    assert_pass(acceptance::criterion_4(table()));
}

#[test]
fn criterion_05_logconcavity_scan_to_1000() {
    assert_pass(acceptance::criterion_5(table(), 1000));
}

#[test]
fn criterion_06_unimodality_scan_to_1000() {
    assert_pass(acceptance::criterion_6(table(), 1000));
}

#[test]
fn criterion_07_ht_sign_changes() {
    assert_pass(acceptance::criterion_7(table()));
}

#[test]
fn criterion_08_lc_figure_tolerance() {
    assert_pass(acceptance::criterion_8(table()));
}

#[test]
fn criterion_09_sech2_regime() {
    assert_pass(acceptance::criterion_9(table()));
}

#[test]
fn criterion_10_expansion_vs_exact() {
    assert_pass(acceptance::criterion_10(table()));
}

#[test]
fn criterion_11_pdiff_sign_law() {
    assert_pass(acceptance::criterion_11(table()));
}

#[test]
fn criterion_12_hhat_truncation() {
    assert_pass(acceptance::criterion_12());
}

#[test]
fn criterion_13_false_theta() {
    assert_pass(acceptance::criterion_13());
}

#[test]
fn criterion_14_eta_main_term() {
    assert_pass(acceptance::criterion_14());
}

#[test]
fn criterion_15_monotonicity_ratio() {
    assert_pass(acceptance::criterion_15(table()));
}

#[test]
fn gamma_consistency_gate_detects_tampering() {
    let clean = acceptance::gamma_consistency_check(false);
    println!("{}", clean.line());
    assert!(clean.passed);
    let tampered = acceptance::gamma_consistency_check(true);
    assert!(!tampered.passed, "a negated gamma_1(mu,1) must be caught");
    assert!(tampered.detail.contains("gamma_1"));
}
