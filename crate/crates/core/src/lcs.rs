//! Linear-space longest common subsequence (Hirschberg).
//!
//! [`compute_l`] produces the last row of the LCS table with two rolling
//! rows. [`lcs`] splits `A` in half, runs the row computation forward on the
//! left half and backward on the right half, and recurses on the split of
//! `B` that maximises the sum of both rows. The dense LCaIS solver follows
//! the same scheme with richer rows.

use serde::{Deserialize, Serialize};

use crate::{StatsRecord, Value, Witness, WitnessEntry};

/// Final row of the LCS table: `values[j]` is the LCS length of all of `A`
/// and `B[1..=j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcsRow {
    pub values: Vec<usize>,
}

impl LcsRow {
    /// LCS length of the full inputs.
    pub fn total(&self) -> usize {
        self.values.last().copied().unwrap_or(0)
    }
}

pub fn compute_l(a: &[Value], b: &[Value]) -> LcsRow {
    let mut stats = StatsRecord::new();
    let values = last_row(a.iter().copied(), b, false, &mut stats);
    LcsRow { values }
}

/// Rolling-row LCS over `a` against `b`, or against `b` reversed.
fn last_row(
    a: impl Iterator<Item = Value>,
    b: &[Value],
    reverse_b: bool,
    stats: &mut StatsRecord,
) -> Vec<usize> {
    let m = b.len();
    let at = |j: usize| if reverse_b { b[m - j] } else { b[j - 1] };
    stats.acquire(2 * (m as u64 + 1));
    let mut row = vec![0usize; m + 1];
    let mut prev = vec![0usize; m + 1];
    for x in a {
        std::mem::swap(&mut row, &mut prev);
        for j in 1..=m {
            stats.step();
            row[j] = if x == at(j) {
                prev[j - 1] + 1
            } else {
                row[j - 1].max(prev[j])
            };
        }
    }
    stats.release(m as u64 + 1);
    row
}

/// A longest common subsequence with its positions in both inputs.
///
/// Only the common-subsequence invariants hold for the result; no
/// almost-increasing condition is involved.
pub fn lcs(a: &[Value], b: &[Value]) -> Witness {
    lcs_with_stats(a, b).0
}

pub fn lcs_with_stats(a: &[Value], b: &[Value]) -> (Witness, StatsRecord) {
    let mut stats = StatsRecord::new();
    let mut out = Vec::new();
    split(a, 0, b, 0, 1, &mut out, &mut stats);
    (out.into(), stats)
}

fn split(
    a: &[Value],
    a_off: usize,
    b: &[Value],
    b_off: usize,
    depth: u64,
    out: &mut Vec<WitnessEntry>,
    stats: &mut StatsRecord,
) {
    stats.enter(depth);
    if a.is_empty() || b.is_empty() {
        return;
    }
    if a.len() == 1 {
        if let Some(j) = b.iter().position(|&v| v == a[0]) {
            out.push(WitnessEntry::new(a[0], a_off + 1, b_off + j + 1));
        }
        return;
    }

    let i = a.len() / 2;
    let m = b.len();
    let forward = last_row(a[..i].iter().copied(), b, false, stats);
    // backward[k] is the LCS of A[i+1..] and the last k elements of B, so
    // the suffix B[j+1..] is read at offset m - j.
    let backward = last_row(a[i..].iter().rev().copied(), b, true, stats);

    let mut best = 0;
    let mut best_j = 0;
    for j in 0..=m {
        let total = forward[j] + backward[m - j];
        if total > best {
            best = total;
            best_j = j;
        }
    }
    stats.release(2 * (m as u64 + 1));

    split(&a[..i], a_off, &b[..best_j], b_off, depth + 1, out, stats);
    split(
        &a[i..],
        a_off + i,
        &b[best_j..],
        b_off + best_j,
        depth + 1,
        out,
        stats,
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::is_subsequence;
    use proptest::prelude::*;

    /// Full quadratic table, independent of the rolling-row code.
    fn table_lcs(a: &[Value], b: &[Value]) -> usize {
        let mut t = vec![vec![0usize; b.len() + 1]; a.len() + 1];
        for i in 1..=a.len() {
            for j in 1..=b.len() {
                t[i][j] = if a[i - 1] == b[j - 1] {
                    t[i - 1][j - 1] + 1
                } else {
                    t[i - 1][j].max(t[i][j - 1])
                };
            }
        }
        t[a.len()][b.len()]
    }

    #[test]
    fn compute_l_examples() {
        assert_eq!(compute_l(&[1, 2, 3], &[1, 2, 3]).values, vec![0, 1, 2, 3]);
        let a = [1, 2, 3, 2, 4, 1, 2];
        let b = [2, 4, 3, 1, 2, 1];
        assert_eq!(table_lcs(&a, &b), 4);
        assert_eq!(compute_l(&a, &b).total(), 4);
        assert_eq!(compute_l(&[], &[5, 6]).values, vec![0, 0, 0]);
    }

    #[test]
    fn lcs_examples() {
        let a = [1, 2, 3, 2, 4, 1, 2];
        let b = [2, 4, 3, 1, 2, 1];
        let w = lcs(&a, &b);
        assert_eq!(w.len(), 4);
        assert!(is_subsequence(&w.values(), &a));
        assert!(is_subsequence(&w.values(), &b));

        let w = lcs(&[7], &[1, 7, 2]);
        assert_eq!(w.entries, vec![WitnessEntry::new(7, 1, 2)]);
        assert!(lcs(&[1, 2], &[3, 4]).is_empty());
        assert!(lcs(&[], &[3, 4]).is_empty());
    }

    proptest! {
        #[test]
        fn row_matches_quadratic_table(
            a in prop::collection::vec(0i64..6, 0..60),
            b in prop::collection::vec(0i64..6, 0..60),
        ) {
            let row = compute_l(&a, &b);
            prop_assert_eq!(row.values[0], 0);
            for j in 1..row.values.len() {
                let step = row.values[j] - row.values[j - 1];
                prop_assert!(step <= 1);
                prop_assert_eq!(row.values[j], table_lcs(&a, &b[..j]));
            }
        }

        #[test]
        fn lcs_is_common_and_optimal(
            a in prop::collection::vec(0i64..6, 0..60),
            b in prop::collection::vec(0i64..6, 0..60),
        ) {
            let (w, stats) = lcs_with_stats(&a, &b);
            prop_assert_eq!(w.len(), table_lcs(&a, &b));
            for e in &w.entries {
                prop_assert_eq!(a[e.a_index - 1], e.value);
                prop_assert_eq!(b[e.b_index - 1], e.value);
            }
            prop_assert!(w.entries.windows(2).all(|p| p[0].a_index < p[1].a_index && p[0].b_index < p[1].b_index));
            prop_assert!(stats.live_tuples_peak <= 4 * (a.len() + b.len() + 1) as u64);
            prop_assert_eq!(stats.live_tuples(), 0);
        }
    }
}
