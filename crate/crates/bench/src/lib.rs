//! Semigroup workloads shared by the criterion benches.

use arfcodes_core::{towers, NumericalSemigroup};

/// Named semigroups of increasing conductor.
pub fn workloads() -> Vec<(&'static str, NumericalSemigroup)> {
    vec![
        (
            "klein",
            NumericalSemigroup::from_small_elements(&[0, 3, 5]).unwrap(),
        ),
        (
            "hyperelliptic_2_41",
            NumericalSemigroup::from_generators(&[2, 41]).unwrap(),
        ),
        ("gs_q2_n8", towers::gs_tower_semigroup(2, 8).unwrap()),
        ("gs_q3_n5", towers::gs_tower_semigroup(3, 5).unwrap()),
    ]
}
