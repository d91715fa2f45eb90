//! Longest common almost-increasing subsequence.
//!
//! Given sequences `A`, `B` and a tolerance `delta >= 0`, find the longest
//! common subsequence `s` in which every element plus `delta` strictly
//! exceeds every element before it.
//!
//! ```
//! use lcais::{lcais_divide_conquer, sparse_lcais, validate_witness, Delta};
//!
//! let a = [3, 1, 4, 5, 2, 4, 5, 1];
//! let b = [4, 2, 3, 1, 2, 5, 3, 1];
//! let delta = Delta::new(3).unwrap();
//!
//! let w = lcais_divide_conquer(&a, &b, delta);
//! assert_eq!(w.len(), 4);
//! assert!(validate_witness(&w, &a, &b, delta).is_ok());
//! assert_eq!(sparse_lcais(&a, &b, delta).len(), 4);
//! ```
//!
//! Solvers:
//!
//! - [`brute_force_lcais`]: exhaustive, for tiny inputs and tests.
//! - [`dense::reference_lcais`]: full `n × m × ℓ` table.
//! - [`lcais_divide_conquer`]: `O(n·m·ℓ)` time, `O(n + m·ℓ)` space.
//! - [`sparse_lcais`]: DP over matching pairs, fast when few positions match.
//!
//! [`lcs`] holds the linear-space LCS the divide-and-conquer is modelled on.
//! The guide under `book/` walks through each of them.

mod brute;
pub mod dense;
mod error;
pub mod lcs;
pub mod match_index;
mod problem;
mod solver;
pub mod sparse;
mod stats;

pub use brute::{brute_force_lcais, BRUTE_FORCE_LIMIT};
pub use dense::lcais_divide_conquer;
pub use error::LcaisError;
pub use problem::{
    is_almost_increasing, is_subsequence, validate_witness, Delta, Value, Witness, WitnessEntry,
    WitnessViolation,
};
pub use solver::{solve, Algorithm, Solution, UnknownAlgorithm};
pub use sparse::sparse_lcais;
pub use stats::StatsRecord;

// The guide's code listings run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/problem.md")]
    mod problem {}
    #[doc = include_str!("../../../book/src/lcs.md")]
    mod lcs {}
    #[doc = include_str!("../../../book/src/tuple-lists.md")]
    mod tuple_lists {}
    #[doc = include_str!("../../../book/src/divide-and-conquer.md")]
    mod divide_and_conquer {}
    #[doc = include_str!("../../../book/src/sparse.md")]
    mod sparse {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
