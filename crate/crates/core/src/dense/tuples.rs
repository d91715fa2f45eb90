use std::fmt;

use crate::{Delta, StatsRecord, Value};

/// Tuple list for one position `j` of `B`.
///
/// Entry `r` holds the smallest possible largest element over all
/// almost-increasing common subsequences of length `r` that end exactly at
/// `B[j]`, using the part of `A` consumed so far. `None` means no such
/// subsequence exists. Entry 0 is the empty-prefix sentinel and is always
/// `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleRow {
    entries: Vec<Option<Value>>,
}

impl TupleRow {
    fn new() -> Self {
        TupleRow {
            entries: vec![None],
        }
    }

    /// Min-max value of entry `r`, `None` when absent or out of range.
    #[inline]
    pub fn get(&self, r: usize) -> Option<Value> {
        self.entries.get(r).copied().flatten()
    }

    pub fn exists(&self, r: usize) -> bool {
        self.get(r).is_some()
    }

    /// Number of stored entries including the sentinel.
    pub fn width(&self) -> usize {
        self.entries.len()
    }

    /// Largest `r` with an entry, 0 when only the sentinel is present.
    pub fn longest(&self) -> usize {
        self.entries.iter().rposition(Option::is_some).unwrap_or(0)
    }

    pub fn entries(&self) -> &[Option<Value>] {
        &self.entries
    }

    /// Keeps the smaller of the stored and the offered value at `r`. Returns
    /// the number of cells the row grew by.
    fn offer(&mut self, r: usize, candidate: Value) -> usize {
        let grown = (r + 1).saturating_sub(self.entries.len());
        if grown > 0 {
            self.entries.resize(r + 1, None);
        }
        let slot = &mut self.entries[r];
        *slot = Some(slot.map_or(candidate, |old| old.min(candidate)));
        grown
    }
}

/// Running summary of the tuple lists to the left of the current column.
///
/// After folding columns `1..j`, `min_max[r]` is the smallest largest element
/// among length-`r` subsequences ending before `B[j]` that the current `A`
/// element may extend. The empty prefix (`r = 0`) is always extendable.
#[derive(Debug, Clone, Default)]
pub struct ScanState {
    min_max: Vec<Option<Value>>,
}

impl ScanState {
    fn reset(&mut self, top: usize) -> usize {
        let grown = (top + 1).saturating_sub(self.min_max.len());
        self.min_max.clear();
        self.min_max.resize(top + 1, None);
        grown
    }

    /// Largest element after appending `value` to the best length-`r` prefix.
    #[inline]
    fn extend(&self, r: usize, value: Value) -> Option<Value> {
        if r == 0 {
            Some(value)
        } else {
            self.min_max[r].map(|q| q.max(value))
        }
    }

    #[inline]
    fn fold(&mut self, r: usize, q: Value) {
        let slot = &mut self.min_max[r];
        *slot = Some(slot.map_or(q, |old| old.min(q)));
    }

    pub fn current(&self, r: usize) -> bool {
        r == 0 || self.min_max.get(r).copied().flatten().is_some()
    }
}

/// Streaming min-max computation over a fixed `B`, consuming `A` one element
/// at a time.
///
/// Space is one [`TupleRow`] per element of `B`, each at most `ℓ + 2` wide,
/// plus one [`ScanState`]. No per-`A` state is kept.
#[derive(Debug, Clone)]
pub struct TupleTable<'b> {
    b: &'b [Value],
    delta: Delta,
    rows: Vec<TupleRow>,
    scan: ScanState,
    longest: usize,
    consumed: usize,
}

impl<'b> TupleTable<'b> {
    pub fn new(b: &'b [Value], delta: Delta) -> Self {
        TupleTable {
            b,
            delta,
            rows: vec![TupleRow::new(); b.len()],
            scan: ScanState::default(),
            longest: 0,
            consumed: 0,
        }
    }

    pub(crate) fn new_counted(b: &'b [Value], delta: Delta, stats: &mut StatsRecord) -> Self {
        stats.acquire(b.len() as u64);
        Self::new(b, delta)
    }

    /// Consumes the next element of `A`.
    pub fn push(&mut self, value: Value) {
        let mut stats = StatsRecord::new();
        self.push_counted(value, &mut stats);
    }

    pub(crate) fn push_counted(&mut self, value: Value, stats: &mut StatsRecord) {
        let top = self.longest;
        stats.acquire(self.scan.reset(top) as u64);
        for (row, &bj) in self.rows.iter_mut().zip(self.b) {
            let matched = bj == value;
            // Descending r: the write to entry r + 1 happens after entry r + 1
            // was folded, so every fold reads the row as it was before this
            // element of A, and `value` is never matched twice.
            for r in (0..=top).rev() {
                stats.step();
                if matched {
                    if let Some(candidate) = self.scan.extend(r, value) {
                        stats.acquire(row.offer(r + 1, candidate) as u64);
                        self.longest = self.longest.max(r + 1);
                    }
                }
                if r > 0 {
                    if let Some(q) = row.get(r) {
                        if self.delta.admits(q, value) {
                            self.scan.fold(r, q);
                        }
                    }
                }
            }
        }
        self.consumed += 1;
    }

    pub fn rows(&self) -> &[TupleRow] {
        &self.rows
    }

    /// Longest subsequence found so far.
    pub fn longest(&self) -> usize {
        self.longest
    }

    /// Number of `A` elements consumed.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    pub fn scan(&self) -> &ScanState {
        &self.scan
    }

    pub(crate) fn live_cells(&self) -> u64 {
        let rows: usize = self.rows.iter().map(TupleRow::width).sum();
        (rows + self.scan.min_max.len()) as u64
    }

    /// Renders the lists in the `(r, exists, min-max)` notation for
    /// `r = 0..=width`, with absent entries shown as `(r, 0, ∞)`.
    pub fn render(&self, width: usize) -> String {
        let mut out = String::new();
        for (j, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("L[{}]", j + 1));
            for r in 0..=width {
                out.push(' ');
                out.push_str(&RenderedTuple(r, row.get(r)).to_string());
            }
            out.push('\n');
        }
        out
    }
}

struct RenderedTuple(usize, Option<Value>);

impl fmt::Display for RenderedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.1 {
            Some(q) => write!(f, "({}, 1, {})", self.0, q),
            None => write!(f, "({}, 0, ∞)", self.0),
        }
    }
}
