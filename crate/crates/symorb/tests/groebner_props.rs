mod common;

#[test]
fn membership_matches_linear_algebra_oracle() {
    assert!(common::props::run_gb_membership_cases(100) >= 100);
}

#[test]
fn reduced_bases_are_canonical() {
    common::props::run_gb_determinism_cases(50);
}

#[test]
fn elimination_preserves_projected_zeros() {
    let checks = common::props::run_elimination_soundness_cases(100);
    assert!(checks >= 100);
}
