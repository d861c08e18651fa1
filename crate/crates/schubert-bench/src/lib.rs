//! Shared fixtures for the benchmarks.

use schubert::Permutation;

/// The Gorenstein running example in S_8.
pub fn gorenstein_s8() -> Permutation {
    Permutation::new(vec![3, 7, 1, 4, 8, 2, 6, 5]).unwrap()
}

/// The infeasible sample system in S_7.
pub fn infeasible_s7() -> Permutation {
    Permutation::new(vec![5, 3, 1, 7, 4, 2, 6]).unwrap()
}

/// A non-Gorenstein Grassmannian permutation (mixed corner distances).
pub fn mixed_corners_s6() -> Permutation {
    Permutation::new(vec![1, 3, 4, 6, 2, 5]).unwrap()
}
