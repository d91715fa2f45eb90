use serde::{Deserialize, Serialize};

/// Operation and space counters collected during one solve.
///
/// Counters only ever grow while a solver runs. `live_tuples_peak` is the
/// high-water mark of the number of DP cells held at the same time, which is
/// the empirical stand-in for a solver's working space.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    /// Innermost-loop iterations (tuple visits, table cells, candidate pairs).
    pub inner_steps: u64,
    pub live_tuples_peak: u64,
    /// Edges of the matching-pair graph that were relaxed.
    pub edges_relaxed: u64,
    /// Dominance queries issued against the range tree.
    pub range_queries: u64,
    /// Deepest recursion level reached (the top-level call is depth 1).
    pub recursion_depth: u64,
    /// Total number of recursive calls, including the top-level one.
    pub recursion_calls: u64,
    #[serde(skip)]
    live: u64,
}

impl StatsRecord {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub(crate) fn step(&mut self) {
        self.inner_steps += 1;
    }

    #[inline]
    pub(crate) fn acquire(&mut self, cells: u64) {
        self.live += cells;
        self.live_tuples_peak = self.live_tuples_peak.max(self.live);
    }

    #[inline]
    pub(crate) fn release(&mut self, cells: u64) {
        debug_assert!(cells <= self.live, "released more cells than were live");
        self.live -= cells.min(self.live);
    }

    pub(crate) fn enter(&mut self, depth: u64) {
        self.recursion_calls += 1;
        self.recursion_depth = self.recursion_depth.max(depth);
    }

    /// Cells currently accounted as live. Zero once a solver has returned.
    pub fn live_tuples(&self) -> u64 {
        self.live
    }
}
