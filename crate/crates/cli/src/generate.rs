//! Seeded workload generators.
//!
//! Output depends only on the [`GenSpec`]: the RNG is ChaCha8 seeded from
//! the 64-bit seed, so a given spec yields the same instance on every
//! platform.

use std::fmt;
use std::str::FromStr;

use lcais::Value;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    /// Independent draws from `1..=sigma`.
    Uniform,
    /// `A` is a permutation of `1..=sigma` (so `n = sigma`); `B` lists `m`
    /// distinct values of `1..=sigma` in random order.
    Permutation,
    /// Every element equals `sigma`; every position pair matches.
    Constant,
    /// Short increasing runs riding on a slowly rising trend, perturbed
    /// independently in `A` and `B`. Produces long almost-increasing common
    /// subsequences.
    Blocks,
}

impl Distribution {
    pub fn name(self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Permutation => "permutation",
            Distribution::Constant => "constant",
            Distribution::Blocks => "blocks",
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Distribution {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Distribution::Uniform),
            "permutation" => Ok(Distribution::Permutation),
            "constant" => Ok(Distribution::Constant),
            "blocks" => Ok(Distribution::Blocks),
            other => Err(GenError::UnknownDistribution(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown distribution `{0}` (expected uniform, permutation, constant or blocks)")]
    UnknownDistribution(String),
    #[error("sigma must be at least 1")]
    EmptyAlphabet,
    #[error("permutation needs n = sigma and m <= sigma (got n={n}, m={m}, sigma={sigma})")]
    BadPermutation { n: usize, m: usize, sigma: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub sigma: u64,
    pub dist: Distribution,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.sigma == 0 || self.sigma > Value::MAX as u64 {
            return Err(GenError::EmptyAlphabet);
        }
        if self.dist == Distribution::Permutation
            && (self.n as u64 != self.sigma || self.m as u64 > self.sigma)
        {
            return Err(GenError::BadPermutation {
                n: self.n,
                m: self.m,
                sigma: self.sigma,
            });
        }
        Ok(())
    }

    /// Header line written above generated instances.
    pub fn describe(&self) -> String {
        format!(
            "n={} m={} sigma={} dist={} seed={}",
            self.n, self.m, self.sigma, self.dist, self.seed
        )
    }
}

pub fn generate(spec: &GenSpec) -> Result<Instance, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let sigma = spec.sigma as Value;
    let (a, b) = match spec.dist {
        Distribution::Uniform => {
            let a = (0..spec.n).map(|_| rng.random_range(1..=sigma)).collect();
            let b = (0..spec.m).map(|_| rng.random_range(1..=sigma)).collect();
            (a, b)
        }
        Distribution::Permutation => {
            let mut a: Vec<Value> = (1..=sigma).collect();
            a.shuffle(&mut rng);
            let mut b: Vec<Value> = (1..=sigma).collect();
            b.shuffle(&mut rng);
            b.truncate(spec.m);
            (a, b)
        }
        Distribution::Constant => (vec![sigma; spec.n], vec![sigma; spec.m]),
        Distribution::Blocks => {
            let template = blocks_template(spec.n.max(spec.m), sigma, &mut rng);
            let a = perturb(&template[..spec.n], sigma, &mut rng);
            let b = perturb(&template[..spec.m], sigma, &mut rng);
            (a, b)
        }
    };
    Ok(Instance { a, b })
}

fn blocks_template(len: usize, sigma: Value, rng: &mut ChaCha8Rng) -> Vec<Value> {
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let run = rng.random_range(2..=6usize).min(len - out.len());
        let trend = 1 + (out.len() as i128 * (sigma as i128 - 1) / len.max(1) as i128) as Value;
        let start = (trend - rng.random_range(0..=2)).max(1);
        out.extend((start..).take(run).map(|v| v.min(sigma)));
    }
    out
}

/// Replaces roughly a quarter of the elements with uniform noise.
fn perturb(template: &[Value], sigma: Value, rng: &mut ChaCha8Rng) -> Vec<Value> {
    template
        .iter()
        .map(|&v| {
            if rng.random_ratio(1, 4) {
                rng.random_range(1..=sigma)
            } else {
                v
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcais::match_index::count_matches;

    fn spec(n: usize, m: usize, sigma: u64, dist: Distribution, seed: u64) -> GenSpec {
        GenSpec {
            n,
            m,
            sigma,
            dist,
            seed,
        }
    }

    #[test]
    fn constant_matches_everything() {
        let inst = generate(&spec(8, 8, 5, Distribution::Constant, 0)).unwrap();
        assert!(inst.a.iter().chain(&inst.b).all(|&v| v == 5));
        assert_eq!(count_matches(&inst.a, &inst.b), 64);
    }

    #[test]
    fn seeded_output_is_stable() {
        let s = spec(100, 100, 100, Distribution::Permutation, 1);
        let x = generate(&s).unwrap();
        assert_eq!(x, generate(&s).unwrap());
        let mut sorted = x.a.clone();
        sorted.sort();
        assert_eq!(sorted, (1..=100).collect::<Vec<_>>());
        assert_ne!(
            x,
            generate(&spec(100, 100, 100, Distribution::Permutation, 2)).unwrap()
        );
    }

    #[test]
    fn uniform_match_count_is_near_expectation() {
        let inst = generate(&spec(50, 50, 5, Distribution::Uniform, 7)).unwrap();
        let expected = 50.0 * 50.0 / 5.0;
        let got = count_matches(&inst.a, &inst.b) as f64;
        assert!((got - expected).abs() <= 0.5 * expected, "M = {got}");
        assert!(inst.a.iter().chain(&inst.b).all(|v| (1..=5).contains(v)));
    }

    #[test]
    fn blocks_stay_in_range_and_have_requested_lengths() {
        let inst = generate(&spec(120, 80, 40, Distribution::Blocks, 3)).unwrap();
        assert_eq!((inst.a.len(), inst.b.len()), (120, 80));
        assert!(inst.a.iter().chain(&inst.b).all(|v| (1..=40).contains(v)));
        let inst = generate(&spec(0, 0, 1, Distribution::Blocks, 3)).unwrap();
        assert!(inst.a.is_empty() && inst.b.is_empty());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert_eq!(
            generate(&spec(5, 5, 0, Distribution::Uniform, 0)),
            Err(GenError::EmptyAlphabet)
        );
        assert!(matches!(
            generate(&spec(5, 5, 6, Distribution::Permutation, 0)),
            Err(GenError::BadPermutation { .. })
        ));
        assert!(matches!(
            generate(&spec(5, 6, 5, Distribution::Permutation, 0)),
            Err(GenError::BadPermutation { .. })
        ));
        assert!("zipf".parse::<Distribution>().is_err());
    }
}
