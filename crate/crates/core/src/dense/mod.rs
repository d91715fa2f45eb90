//! Linear-space dense solver.
//!
//! A left half of `A` is summarised by a [`Prefix`](Orientation::Prefix)
//! table that, for every split point of `B`, records the smallest possible
//! largest element of each achievable length. The right half gets the
//! mirror [`Suffix`](Orientation::Suffix) table of largest possible smallest
//! elements. A prefix and a suffix chain can be concatenated exactly when
//! the suffix minimum plus `delta` beats the prefix maximum, so the best
//! split point is found by a scan over both tables ([`choose_split`]). The
//! divide-and-conquer then filters `B` on each side so the recursive calls
//! can only rebuild chains that still fit together.
//!
//! Working space is `O(n + m·ℓ)` and time `O(n·m·ℓ)`.

mod reference;
mod tables;
mod tuples;

pub use reference::{reference_lcais, ReferenceTables, DEFAULT_CELL_BUDGET};
pub use tables::{Bound, Orientation, PrefixTables};
pub use tuples::{ScanState, TupleRow, TupleTable};

use crate::{Delta, StatsRecord, Value, Witness, WitnessEntry};

/// Prefix table of `a` against `b`: minimised largest elements.
pub fn minimize_largest_elem(a: &[Value], b: &[Value], delta: Delta) -> PrefixTables {
    minimize_counted(a, b, delta, &mut StatsRecord::new())
}

/// Suffix table of `a` against `b`: maximised smallest elements.
///
/// Reversing both inputs and complementing every value (`!v`, an
/// order-reversing bijection on `i64`) turns suffix chains into prefix
/// chains and preserves the almost-increasing condition, so this reuses
/// [`minimize_largest_elem`] and maps the result back.
pub fn maximize_smallest_elem(a: &[Value], b: &[Value], delta: Delta) -> PrefixTables {
    maximize_counted(a, b, delta, &mut StatsRecord::new())
}

fn minimize_counted(
    a: &[Value],
    b: &[Value],
    delta: Delta,
    stats: &mut StatsRecord,
) -> PrefixTables {
    let mut table = TupleTable::new_counted(b, delta, stats);
    for &x in a {
        table.push_counted(x, stats);
    }
    let tables = PrefixTables::from_rows(table.rows());
    stats.acquire(tables.cell_count());
    stats.release(table.live_cells());
    tables
}

fn maximize_counted(
    a: &[Value],
    b: &[Value],
    delta: Delta,
    stats: &mut StatsRecord,
) -> PrefixTables {
    let ra: Vec<Value> = a.iter().rev().map(|&v| !v).collect();
    let rb: Vec<Value> = b.iter().rev().map(|&v| !v).collect();
    let copies = (ra.len() + rb.len()) as u64;
    stats.acquire(copies);
    let tables = minimize_counted(&ra, &rb, delta, stats).into_mirrored();
    stats.release(copies);
    tables
}

/// Split point chosen from a prefix and a suffix table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    /// Number of `B` elements on the prefix side.
    pub column: usize,
    pub prefix_len: usize,
    pub suffix_len: usize,
}

impl Split {
    pub fn total(&self) -> usize {
        self.prefix_len + self.suffix_len
    }
}

/// Maximises `r' + r''` over split points `j` such that a length-`r'` prefix
/// chain on `B[1..=j]` and a length-`r''` suffix chain on `B[j+1..]` exist
/// and join. Ties go to the smallest `j`, then the smallest `r'`.
///
/// The total equals the optimal length for the whole instance whenever both
/// tables were built over complementary halves of `A`.
pub fn choose_split(prefix: &PrefixTables, suffix: &PrefixTables, delta: Delta) -> Split {
    choose_split_counted(prefix, suffix, delta, &mut StatsRecord::new())
}

fn choose_split_counted(
    prefix: &PrefixTables,
    suffix: &PrefixTables,
    delta: Delta,
    stats: &mut StatsRecord,
) -> Split {
    debug_assert_eq!(prefix.orientation(), Orientation::Prefix);
    debug_assert_eq!(suffix.orientation(), Orientation::Suffix);
    debug_assert_eq!(prefix.split_points(), suffix.split_points());
    let mut best = Split {
        column: 0,
        prefix_len: 0,
        suffix_len: 0,
    };
    for j in 0..prefix.split_points() {
        for r1 in 0..=prefix.max_len() {
            let Some(high) = prefix.bound(j, r1) else {
                break;
            };
            // suffix lengths are hereditary, so scan down from the longest
            for r2 in (0..=suffix.max_len()).rev() {
                stats.step();
                if r1 + r2 <= best.total() {
                    break;
                }
                if let Some(low) = suffix.bound(j, r2) {
                    if low.joins_after(high, delta) {
                        best = Split {
                            column: j,
                            prefix_len: r1,
                            suffix_len: r2,
                        };
                        break;
                    }
                }
            }
        }
    }
    best
}

/// Optimal witness in `O(n + m·ℓ)` space.
pub fn lcais_divide_conquer(a: &[Value], b: &[Value], delta: Delta) -> Witness {
    lcais_divide_conquer_with_stats(a, b, delta).0
}

pub fn lcais_divide_conquer_with_stats(
    a: &[Value],
    b: &[Value],
    delta: Delta,
) -> (Witness, StatsRecord) {
    let mut stats = StatsRecord::new();
    let mut values = b.to_vec();
    let mut positions: Vec<usize> = (1..=b.len()).collect();
    stats.acquire(2 * b.len() as u64);
    let mut out = Vec::new();
    let mut solver = DivideConquer {
        delta,
        stats: &mut stats,
        out: &mut out,
    };
    solver.solve(a, 0, &mut values, &mut positions, 1);
    stats.release(2 * b.len() as u64);
    (out.into(), stats)
}

struct DivideConquer<'s> {
    delta: Delta,
    stats: &'s mut StatsRecord,
    out: &'s mut Vec<WitnessEntry>,
}

impl DivideConquer<'_> {
    /// `b_values` and `b_positions` are parallel: the surviving elements of
    /// `B` and their original 1-based positions. Both are compacted in place
    /// by the filtering step.
    fn solve(
        &mut self,
        a: &[Value],
        a_off: usize,
        b_values: &mut [Value],
        b_positions: &mut [usize],
        depth: u64,
    ) {
        self.stats.enter(depth);
        if a.is_empty() || b_values.is_empty() {
            return;
        }
        if a.len() == 1 {
            if let Some(j) = b_values.iter().position(|&v| v == a[0]) {
                self.out
                    .push(WitnessEntry::new(a[0], a_off + 1, b_positions[j]));
            }
            return;
        }

        let i = a.len() / 2;
        let prefix = minimize_counted(&a[..i], b_values, self.delta, self.stats);
        let suffix = maximize_counted(&a[i..], b_values, self.delta, self.stats);
        let split = choose_split_counted(&prefix, &suffix, self.delta, self.stats);
        let upper = prefix
            .bound(split.column, split.prefix_len)
            .expect("chosen prefix length exists");
        let lower = suffix
            .bound(split.column, split.suffix_len)
            .expect("chosen suffix length exists");
        self.stats
            .release(prefix.cell_count() + suffix.cell_count());
        drop((prefix, suffix));

        let (left_v, right_v) = b_values.split_at_mut(split.column);
        let (left_p, right_p) = b_positions.split_at_mut(split.column);
        let kept_left = retain(left_v, left_p, |v| Bound::Finite(v) <= upper);
        let kept_right = retain(right_v, right_p, |v| Bound::Finite(v) >= lower);

        self.solve(
            &a[..i],
            a_off,
            &mut left_v[..kept_left],
            &mut left_p[..kept_left],
            depth + 1,
        );
        self.solve(
            &a[i..],
            a_off + i,
            &mut right_v[..kept_right],
            &mut right_p[..kept_right],
            depth + 1,
        );
    }
}

/// Moves the elements satisfying `keep` to the front, preserving order.
fn retain(values: &mut [Value], positions: &mut [usize], keep: impl Fn(Value) -> bool) -> usize {
    let mut kept = 0;
    for k in 0..values.len() {
        if keep(values[k]) {
            values[kept] = values[k];
            positions[kept] = positions[k];
            kept += 1;
        }
    }
    kept
}
