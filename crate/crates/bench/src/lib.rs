//! Shared inputs for the benchmarks.

use sgbrick::NumericalSemigroup;

/// Semigroups of increasing Frobenius number, used across benchmarks.
pub const SEMIGROUPS: &[&[i64]] = &[
    &[10, 11, 13, 17, 19],
    &[14, 15, 20, 21],
    &[21, 28, 36, 48],
    &[27, 30, 36, 44],
    &[45, 46, 47, 48],
];

pub fn semigroup(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::new(gens).expect("fixture generators are coprime")
}
