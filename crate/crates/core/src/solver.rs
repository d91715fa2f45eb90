use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dense::{lcais_divide_conquer_with_stats, ReferenceTables};
use crate::sparse::sparse_lcais_with_stats;
use crate::{brute_force_lcais, Delta, LcaisError, StatsRecord, Value, Witness};

/// The four interchangeable solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Exhaustive search; `min(n, m)` must not exceed
    /// [`BRUTE_FORCE_LIMIT`](crate::BRUTE_FORCE_LIMIT).
    Brute,
    /// Full three-dimensional table; bounded by a cell budget.
    Dp3,
    /// Linear-space divide-and-conquer.
    Dc,
    /// Matching-pair graph.
    Sparse,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Brute,
        Algorithm::Dp3,
        Algorithm::Dc,
        Algorithm::Sparse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Dp3 => "dp3",
            Algorithm::Dc => "dc",
            Algorithm::Sparse => "sparse",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub String);

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown algorithm `{}` (expected brute, dp3, dc or sparse)",
            self.0
        )
    }
}

impl std::error::Error for UnknownAlgorithm {}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub witness: Witness,
    pub stats: StatsRecord,
}

/// Runs one solver and returns its witness with the counters it collected.
pub fn solve(
    algorithm: Algorithm,
    a: &[Value],
    b: &[Value],
    delta: Delta,
) -> Result<Solution, LcaisError> {
    let (witness, stats) = match algorithm {
        Algorithm::Brute => (brute_force_lcais(a, b, delta)?, StatsRecord::new()),
        Algorithm::Dp3 => {
            let tables = ReferenceTables::build(a, b, delta)?;
            (tables.witness(), StatsRecord::new())
        }
        Algorithm::Dc => lcais_divide_conquer_with_stats(a, b, delta),
        Algorithm::Sparse => sparse_lcais_with_stats(a, b, delta),
    };
    Ok(Solution { witness, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>(), Ok(algo));
        }
        assert!("fast".parse::<Algorithm>().is_err());
    }

    #[test]
    fn all_solvers_agree_on_worked_example() {
        let a = [3, 1, 4, 5, 2, 4, 5, 1];
        let b = [4, 2, 3, 1, 2, 5, 3, 1];
        let delta = Delta::new(3).unwrap();
        for algo in Algorithm::ALL {
            let s = solve(algo, &a, &b, delta).unwrap();
            assert_eq!(s.witness.len(), 4, "{algo}");
            assert_eq!(crate::validate_witness(&s.witness, &a, &b, delta), Ok(()));
        }
    }
}
