//! Full three-dimensional evaluation of the min-max recurrences.
//!
//! `p(i, j, r)` is the smallest possible largest element over all
//! almost-increasing common subsequences of `A[1..=i]` and `B[1..=j]` of
//! length `r` whose last element is matched to `B[j]`; `None` when none
//! exists. It is computed layer by layer in `r` straight from the
//! recurrence:
//!
//! ```text
//! p(i, j, r) = min( p(i-1, j, r),
//!                   min { max(A[i], q) : k < j, q = p(i-1, k, r-1), A[i] + δ > q } )   if A[i] = B[j]
//! p(i, j, r) = p(i-1, j, r)                                                             otherwise
//! ```
//!
//! with `p(·, ·, 0)` the empty chain that every element may extend. Nothing
//! is streamed or shared with the tuple-list code, which makes this the
//! oracle for it.

use crate::{Delta, LcaisError, Value, Witness, WitnessEntry};

/// Default cap on `(n + 1)·(m + 1)·(ℓ + 1)` stored cells.
pub const DEFAULT_CELL_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct ReferenceTables<'a> {
    a: &'a [Value],
    b: &'a [Value],
    delta: Delta,
    // layers[r - 1][i * (m + 1) + j]
    layers: Vec<Vec<Option<Value>>>,
}

impl<'a> ReferenceTables<'a> {
    pub fn build(a: &'a [Value], b: &'a [Value], delta: Delta) -> Result<Self, LcaisError> {
        Self::build_with_budget(a, b, delta, DEFAULT_CELL_BUDGET)
    }

    pub fn build_with_budget(
        a: &'a [Value],
        b: &'a [Value],
        delta: Delta,
        budget: u64,
    ) -> Result<Self, LcaisError> {
        let (n, m) = (a.len(), b.len());
        let layer_cells = (n as u128 + 1) * (m as u128 + 1);
        let too_large = |cells: u128| LcaisError::InstanceTooLarge {
            solver: "dp3",
            size: cells,
            limit: budget as u128,
            unit: "table cells",
        };
        if layer_cells > budget as u128 {
            return Err(too_large(layer_cells));
        }

        let mut tables = ReferenceTables {
            a,
            b,
            delta,
            layers: Vec::new(),
        };
        loop {
            let r = tables.layers.len() + 1;
            let stored = layer_cells * (r as u128 + 1);
            if stored > budget as u128 {
                return Err(too_large(stored));
            }
            let layer = tables.next_layer(r);
            if layer.iter().all(Option::is_none) {
                break;
            }
            tables.layers.push(layer);
        }
        Ok(tables)
    }

    fn next_layer(&self, r: usize) -> Vec<Option<Value>> {
        let (n, m) = (self.a.len(), self.b.len());
        let mut layer = vec![None; (n + 1) * (m + 1)];
        for i in 1..=n {
            for j in 1..=m {
                let carried = layer[(i - 1) * (m + 1) + j];
                let ending = if r == 1 {
                    (self.a[i - 1] == self.b[j - 1]).then_some(self.a[i - 1])
                } else {
                    self.extend_from(i, j, r)
                };
                layer[i * (m + 1) + j] = min_opt(carried, ending);
            }
        }
        layer
    }

    /// Best value for chains of length `r >= 2` ending exactly at the match
    /// `(i, j)`, read from layer `r - 1`.
    fn extend_from(&self, i: usize, j: usize, r: usize) -> Option<Value> {
        let x = self.a[i - 1];
        if x != self.b[j - 1] {
            return None;
        }
        let mut best = None;
        for k in 1..j {
            if let Some(q) = self.p(i - 1, k, r - 1) {
                if self.delta.admits(q, x) {
                    best = min_opt(best, Some(q.max(x)));
                }
            }
        }
        best
    }

    /// `p(i, j, r)` for `0 <= i <= n`, `0 <= j <= m`, `r >= 1`.
    pub fn p(&self, i: usize, j: usize, r: usize) -> Option<Value> {
        let m = self.b.len();
        if r == 0 || i > self.a.len() || j > m {
            return None;
        }
        self.layers.get(r - 1)?[i * (m + 1) + j]
    }

    /// Best value over chains of length `r` that end exactly at the match
    /// `(i, j)`: `A[i]` matched to `B[j]`.
    pub fn ending_at(&self, i: usize, j: usize, r: usize) -> Option<Value> {
        if r == 0 || i == 0 || j == 0 || i > self.a.len() || j > self.b.len() {
            return None;
        }
        if r == 1 {
            return (self.a[i - 1] == self.b[j - 1]).then_some(self.a[i - 1]);
        }
        self.extend_from(i, j, r)
    }

    /// Optimal length.
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Reconstructs an optimal witness by walking the layers downward.
    ///
    /// Every element already chosen bounds the largest element of the part
    /// still to be built. A predecessor `(i', k)` at length `r` qualifies
    /// when `p(i', k, r)` respects that bound, and the first such `i'` is
    /// where a fitting chain ends exactly at the match.
    pub fn witness(&self) -> Witness {
        let (n, m) = (self.a.len(), self.b.len());
        let len = self.len();
        if len == 0 {
            return Witness::empty();
        }
        let (mut i, mut j) = (1..=m)
            .find_map(|j| {
                (1..=n)
                    .find(|&i| self.p(i, j, len).is_some())
                    .map(|i| (i, j))
            })
            .expect("top layer is non-empty");
        let mut floor = self.a[i - 1];
        let mut rev = vec![WitnessEntry::new(floor, i, j)];
        for r in (1..len).rev() {
            let fits = |q: Option<Value>| q.is_some_and(|q| self.delta.admits(q, floor));
            let k = (1..j)
                .find(|&k| fits(self.p(i - 1, k, r)))
                .expect("a qualifying predecessor exists");
            let i2 = (1..i)
                .find(|&i2| fits(self.p(i2, k, r)))
                .expect("predecessor ends in range");
            i = i2;
            j = k;
            floor = floor.min(self.a[i - 1]);
            rev.push(WitnessEntry::new(self.a[i - 1], i, j));
        }
        rev.reverse();
        rev.into()
    }
}

fn min_opt(x: Option<Value>, y: Option<Value>) -> Option<Value> {
    match (x, y) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Optimal witness from the full reference tables.
pub fn reference_lcais(a: &[Value], b: &[Value], delta: Delta) -> Result<Witness, LcaisError> {
    Ok(ReferenceTables::build(a, b, delta)?.witness())
}
