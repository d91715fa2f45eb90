//! Benchmark sweeps.
//!
//! A sweep file is TOML:
//!
//! ```toml
//! repetitions = 2          # optional, default 1
//!
//! [[sweep]]
//! dist = "constant"
//! sigma = 1                # optional for permutation, where it equals n
//! delta = 1
//! seed = 0                 # optional, default 0
//! sizes = [100, 200, 400]  # n = m = size
//! algos = ["dc", "sparse"]
//! ```
//!
//! Each (size, repetition, algorithm) yields one CSV row. Repetitions solve
//! the same seeded instance again, so only `wall_millis` may differ.

use std::io::Write;
use std::time::Instant;

use lcais::match_index::{count_compatible_sweep, count_matches};
use lcais::{solve, Algorithm, Delta, LcaisError, Value};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::generate::{generate, Distribution, GenError, GenSpec};

pub const CSV_HEADER: &str =
    "n,m,delta,sigma,M,C,ell,algo,inner_steps,edges_relaxed,live_tuples_peak,wall_millis";

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchSpec {
    #[serde(default = "one")]
    pub repetitions: u32,
    #[serde(default)]
    pub sweep: Vec<Sweep>,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub dist: Distribution,
    pub sigma: Option<u64>,
    pub delta: Value,
    #[serde(default)]
    pub seed: u64,
    pub sizes: Vec<usize>,
    pub algos: Vec<Algorithm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub delta: Value,
    pub sigma: u64,
    #[serde(rename = "M")]
    pub matches: u64,
    #[serde(rename = "C")]
    pub compatible: u64,
    pub ell: usize,
    pub algo: Algorithm,
    pub inner_steps: u64,
    pub edges_relaxed: u64,
    pub live_tuples_peak: u64,
    pub wall_millis: u64,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid bench spec: {0}")]
    Spec(#[from] toml::de::Error),
    #[error("sweep {index}: sigma is required for the {dist} distribution")]
    MissingSigma { index: usize, dist: Distribution },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Solver(#[from] LcaisError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl BenchSpec {
    pub fn parse(text: &str) -> Result<Self, BenchError> {
        Ok(toml::from_str(text)?)
    }
}

/// Runs every sweep in order and returns the rows.
pub fn run_bench(spec: &BenchSpec) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    for (index, sweep) in spec.sweep.iter().enumerate() {
        let delta = Delta::new(sweep.delta)?;
        for &size in &sweep.sizes {
            let sigma = match (sweep.dist, sweep.sigma) {
                (Distribution::Permutation, None) => size as u64,
                (_, Some(s)) => s,
                (dist, None) => return Err(BenchError::MissingSigma { index, dist }),
            };
            let gen = GenSpec {
                n: size,
                m: size,
                sigma,
                dist: sweep.dist,
                seed: sweep.seed,
            };
            let inst = generate(&gen)?;
            let matches = count_matches(&inst.a, &inst.b);
            let compatible = count_compatible_sweep(&inst.a, &inst.b);
            for _ in 0..spec.repetitions {
                for &algo in &sweep.algos {
                    let start = Instant::now();
                    let sol = solve(algo, &inst.a, &inst.b, delta)?;
                    let wall_millis = start.elapsed().as_millis() as u64;
                    rows.push(BenchRow {
                        n: size,
                        m: size,
                        delta: sweep.delta,
                        sigma,
                        matches,
                        compatible,
                        ell: sol.witness.len(),
                        algo,
                        inner_steps: sol.stats.inner_steps,
                        edges_relaxed: sol.stats.edges_relaxed,
                        live_tuples_peak: sol.stats.live_tuples_peak,
                        wall_millis,
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// Writes the header and rows as CSV.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
