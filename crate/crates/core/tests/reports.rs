//! The assembled reports as an external consumer sees them.

use kervaire_core::report::{Category, Status};
use kervaire_core::verify;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn the_full_report_is_clean_with_known_disagreements() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let report = verify::full_report(&mut rng);
    assert!(report.is_clean());
    let disagreeing: Vec<&str> = report
        .checks()
        .iter()
        .filter(|c| c.status == Status::Mismatch)
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(
        disagreeing,
        [
            "stages/punctured",
            "stages/middle",
            "stages/boundary-kernel",
            "catalog/dual-pair-2",
            "catalog/dual-pair-3",
            "catalog/dual-pair-4",
            "arf/computed-pairing",
            "flat/base-euler",
        ]
    );
}

#[test]
fn categories_constrain_the_possible_statuses() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let report = verify::full_report(&mut rng);
    for check in report.checks() {
        match check.category {
            Category::Identity => assert_ne!(check.status, Status::Mismatch, "{}", check.name),
            Category::Recorded => assert_ne!(check.status, Status::Fail, "{}", check.name),
        }
    }
}

#[test]
fn equal_seeds_give_equal_reports() {
    let mut first = ChaCha8Rng::seed_from_u64(99);
    let mut second = ChaCha8Rng::seed_from_u64(99);
    assert_eq!(
        verify::full_report(&mut first),
        verify::full_report(&mut second)
    );
}
