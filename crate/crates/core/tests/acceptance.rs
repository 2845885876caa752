//! Acceptance criteria, one test and one `PASS`/`FAIL` line each.
//!
//! Run with `cargo test -p homdim --test acceptance -- --nocapture` to see the lines.
//! All criteria compare exact integers; the only tolerances are the runtime
//! budgets (5 s for criteria 1 to 3, 60 s for criterion 6).

use homdim::verify::{self, CriterionReport, Counts};
use homdim::Caps;

const SEED: u64 = 20_240_611;

fn report(r: CriterionReport) {
    println!("{}", r.summary());
    for item in r.failures() {
        println!("    {}: {}", item.name, item.detail);
    }
    assert!(r.passed, "criterion {} failed", r.id);
}

#[test]
fn criterion_1_trivial_extension_example() {
    report(verify::criterion_1(Caps::default()));
}

#[test]
fn criterion_2_hypersurface() {
    report(verify::criterion_2(Caps::default()));
}

#[test]
fn criterion_3_regular_ring() {
    report(verify::criterion_3(Caps::default()));
}

#[test]
fn criterion_4_poincare_identities() {
    let n = Counts::default().poincare;
    assert!(n >= 20);
    report(verify::criterion_4(SEED, n));
}

#[test]
fn criterion_5_syzygy_reduction() {
    let n = Counts::default().reduction;
    assert!(n >= 20);
    report(verify::criterion_5(SEED + 1, n));
}

#[test]
fn criterion_6_structural_suite() {
    report(verify::criterion_6(SEED + 2, Counts::default().structural));
}

#[test]
fn criterion_7_two_of_three() {
    let n = Counts::default().two_of_three;
    assert!(n >= 10);
    report(verify::criterion_7(SEED + 3, n));
}

#[test]
fn criterion_8_complete_intersection_detection() {
    report(verify::criterion_8(Caps::default()));
}
