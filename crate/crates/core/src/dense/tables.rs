use crate::{Delta, Value};

use super::tuples::TupleRow;

/// A table value extended with the two sentinels used by the empty
/// subsequence. Variants are ordered `NegInfinity < Finite(_) < PosInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInfinity,
    Finite(Value),
    PosInfinity,
}

impl Bound {
    /// Whether a suffix whose smallest element is `self` may follow a
    /// prefix whose largest element is `prefix_max`.
    pub fn joins_after(self, prefix_max: Bound, delta: Delta) -> bool {
        match (self, prefix_max) {
            (Bound::PosInfinity, _) | (_, Bound::NegInfinity) => true,
            (Bound::Finite(low), Bound::Finite(high)) => delta.admits(high, low),
            _ => false,
        }
    }
}

/// Which side of a split a table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `B[1..=j]`; values are minimised largest elements.
    Prefix,
    /// `B[j+1..]`; values are maximised smallest elements.
    Suffix,
}

/// Per-split-point summaries over one half of `A`.
///
/// For a [`Prefix`](Orientation::Prefix) table, `value(j, r)` is the
/// smallest possible largest element of a length-`r` almost-increasing
/// common subsequence of the `A` half and `B[1..=j]`. For a
/// [`Suffix`](Orientation::Suffix) table it is the largest possible smallest
/// element over `B[j+1..]`. Length 0 always exists and maps to the sentinel
/// that makes any join legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixTables {
    orientation: Orientation,
    // cells[j][r - 1], j = 0..=m
    cells: Vec<Vec<Option<Value>>>,
}

impl PrefixTables {
    /// Aggregates tuple lists over every prefix of `B`.
    pub(crate) fn from_rows(rows: &[TupleRow]) -> Self {
        let width = rows.iter().map(TupleRow::longest).max().unwrap_or(0);
        let mut cells = Vec::with_capacity(rows.len() + 1);
        let mut running: Vec<Option<Value>> = vec![None; width];
        cells.push(running.clone());
        for row in rows {
            for (r, slot) in running.iter_mut().enumerate() {
                if let Some(q) = row.get(r + 1) {
                    *slot = Some(slot.map_or(q, |old| old.min(q)));
                }
            }
            cells.push(running.clone());
        }
        PrefixTables {
            orientation: Orientation::Prefix,
            cells,
        }
    }

    /// Reads a prefix table built over the reversed, complemented inputs as
    /// a suffix table over the original ones.
    pub(crate) fn into_mirrored(self) -> Self {
        debug_assert_eq!(self.orientation, Orientation::Prefix);
        let mut cells = self.cells;
        cells.reverse();
        for row in &mut cells {
            for v in row.iter_mut().flatten() {
                *v = !*v;
            }
        }
        PrefixTables {
            orientation: Orientation::Suffix,
            cells,
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Number of split points, `m + 1`.
    pub fn split_points(&self) -> usize {
        self.cells.len()
    }

    /// Largest length present anywhere in the table.
    pub fn max_len(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    pub fn exists(&self, j: usize, r: usize) -> bool {
        r == 0 || self.value(j, r).is_some()
    }

    /// Table value for `r >= 1`.
    pub fn value(&self, j: usize, r: usize) -> Option<Value> {
        if r == 0 {
            return None;
        }
        self.cells.get(j)?.get(r - 1).copied().flatten()
    }

    /// Table value with sentinels, `None` when no length-`r` subsequence
    /// exists.
    pub fn bound(&self, j: usize, r: usize) -> Option<Bound> {
        if r == 0 {
            return Some(match self.orientation {
                Orientation::Prefix => Bound::NegInfinity,
                Orientation::Suffix => Bound::PosInfinity,
            });
        }
        self.value(j, r).map(Bound::Finite)
    }

    pub(crate) fn cell_count(&self) -> u64 {
        (self.cells.len() * (self.max_len() + 1)) as u64
    }
}
