use std::fmt;
use std::time::Instant;

use lcais::match_index::{count_compatible_sweep, count_matches};
use lcais::{
    solve, validate_witness, Algorithm, Delta, LcaisError, StatsRecord, Value, Witness,
    WitnessViolation,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub values: Vec<Value>,
    /// 1-based positions in `A`.
    pub a_indices: Vec<usize>,
    /// 1-based positions in `B`.
    pub b_indices: Vec<usize>,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        WitnessReport {
            values: w.values(),
            a_indices: w.a_indices(),
            b_indices: w.b_indices(),
        }
    }
}

/// Everything `solve` prints. Serialized as JSON with `--json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub algorithm: Algorithm,
    pub n: usize,
    pub m: usize,
    pub delta: Value,
    /// Number of matching position pairs.
    pub matches: u64,
    /// Number of ordered compatible pairs of matching pairs.
    pub compatible: u64,
    pub length: usize,
    pub witness: WitnessReport,
    pub stats: StatsRecord,
    pub wall_millis: u64,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Solver(#[from] LcaisError),
    #[error("witness failed verification: {0}")]
    Verification(WitnessViolation),
}

/// Runs `algorithm` and gathers the report. With `verify`, the witness is
/// checked against the inputs before the report is returned.
pub fn run_solve(
    algorithm: Algorithm,
    a: &[Value],
    b: &[Value],
    delta: Delta,
    verify: bool,
) -> Result<SolveReport, SolveError> {
    let start = Instant::now();
    let solution = solve(algorithm, a, b, delta)?;
    let wall_millis = start.elapsed().as_millis() as u64;
    if verify {
        validate_witness(&solution.witness, a, b, delta).map_err(SolveError::Verification)?;
    }
    Ok(SolveReport {
        algorithm,
        n: a.len(),
        m: b.len(),
        delta: delta.get(),
        matches: count_matches(a, b),
        compatible: count_compatible_sweep(a, b),
        length: solution.witness.len(),
        witness: WitnessReport::from(&solution.witness),
        stats: solution.stats,
        wall_millis,
    })
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algorithm  {}", self.algorithm)?;
        writeln!(f, "n, m       {}, {}", self.n, self.m)?;
        writeln!(f, "delta      {}", self.delta)?;
        writeln!(f, "M, C       {}, {}", self.matches, self.compatible)?;
        writeln!(f, "length     {}", self.length)?;
        writeln!(f, "values     {}", list(&self.witness.values))?;
        writeln!(f, "a indices  {}", list(&self.witness.a_indices))?;
        writeln!(f, "b indices  {}", list(&self.witness.b_indices))?;
        let s = &self.stats;
        writeln!(
            f,
            "stats      inner_steps={} edges_relaxed={} range_queries={} live_tuples_peak={} recursion_calls={} recursion_depth={}",
            s.inner_steps, s.edges_relaxed, s.range_queries, s.live_tuples_peak, s.recursion_calls, s.recursion_depth
        )?;
        write!(f, "wall       {} ms", self.wall_millis)
    }
}
