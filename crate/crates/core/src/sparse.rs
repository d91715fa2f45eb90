//! Dynamic program over the matching-pair DAG.
//!
//! Each matching pair is a vertex; an edge runs from `v_i` to `v_j` when the
//! pairs form a common subsequence and `e_j + delta > e_i`. Vertices are
//! numbered in `(b_index, a_index)` order, so every edge goes from a lower to
//! a higher number and ascending order is topological. Each vertex keeps, per
//! length `r`, the smallest largest element of a chain ending there and the
//! vertex it came from. Edges are never stored: they are produced by a
//! dominance query when their source is processed and relaxed at once.
//!
//! Time `O((n + m) log n + M log² M + C·ℓ)`, space `O(M (ℓ + log M))`.

use serde::{Deserialize, Serialize};

use crate::match_index::{compute_matches, DominanceIndex, MatchPair};
use crate::{Delta, LcaisError, StatsRecord, Value, Witness, WitnessEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainTuple {
    /// Smallest largest element over chains of this length ending here.
    pub max: Value,
    /// Previous vertex of the chain, `None` for length 1.
    pub parent: Option<usize>,
}

/// Tuple list of one vertex, indexed by chain length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexState {
    value: Value,
    // entries[r - 1]
    entries: Vec<Option<ChainTuple>>,
}

impl VertexState {
    pub fn new(value: Value) -> Self {
        VertexState {
            value,
            entries: vec![Some(ChainTuple {
                max: value,
                parent: None,
            })],
        }
    }

    pub fn value(&self) -> Value {
        self.value
    }

    pub fn get(&self, r: usize) -> Option<ChainTuple> {
        if r == 0 {
            return None;
        }
        self.entries.get(r - 1).copied().flatten()
    }

    /// Longest chain length stored.
    pub fn longest(&self) -> usize {
        self.entries
            .iter()
            .rposition(Option::is_some)
            .map_or(0, |p| p + 1)
    }

    pub fn tuple_count(&self) -> usize {
        self.entries.iter().flatten().count()
    }

    /// `(r, tuple)` for every stored length.
    pub fn tuples(&self) -> impl Iterator<Item = (usize, ChainTuple)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(k, t)| t.map(|t| (k + 1, t)))
    }

    /// Inserts or improves the entry at `r`. Returns whether a new tuple was
    /// created, and whether anything changed.
    fn offer(&mut self, r: usize, candidate: ChainTuple) -> (bool, bool) {
        if self.entries.len() < r {
            self.entries.resize(r, None);
        }
        match &mut self.entries[r - 1] {
            slot @ None => {
                *slot = Some(candidate);
                (true, true)
            }
            Some(t) if candidate.max < t.max => {
                *t = candidate;
                (false, true)
            }
            Some(_) => (false, false),
        }
    }
}

/// Relaxes the edge `from -> to`: every tuple at `from` whose largest
/// element still admits `e_to` offers a chain one longer to `to`.
///
/// Returns the lengths at `to` that were inserted or improved.
///
/// # Panics
///
/// If `from >= to`; edges only ever go forward in vertex order.
pub fn relax_edge(states: &mut [VertexState], from: usize, to: usize, delta: Delta) -> Vec<usize> {
    let mut stats = StatsRecord::new();
    let mut changed = Vec::new();
    relax_counted(states, from, to, delta, &mut stats, |r| changed.push(r));
    changed
}

fn relax_counted(
    states: &mut [VertexState],
    from: usize,
    to: usize,
    delta: Delta,
    stats: &mut StatsRecord,
    mut on_change: impl FnMut(usize),
) {
    assert!(from < to, "edge {from} -> {to} does not go forward");
    let (head, tail) = states.split_at_mut(to);
    let source = &head[from];
    let target = &mut tail[0];
    let e = target.value;
    for (r, t) in source.tuples() {
        stats.step();
        if !delta.admits(t.max, e) {
            continue;
        }
        let candidate = ChainTuple {
            max: t.max.max(e),
            parent: Some(from),
        };
        let (created, changed) = target.offer(r + 1, candidate);
        if created {
            stats.acquire(1);
        }
        if changed {
            on_change(r + 1);
        }
    }
}

/// Completed sparse solve: the vertex states are final and can be inspected.
#[derive(Debug, Clone)]
pub struct SparseRun {
    pub pairs: Vec<MatchPair>,
    pub states: Vec<VertexState>,
    pub stats: StatsRecord,
    best: Option<(usize, usize)>,
}

impl SparseRun {
    pub fn run(a: &[Value], b: &[Value], delta: Delta) -> Self {
        let mut stats = StatsRecord::new();
        let pairs = compute_matches(a, b);
        let index = DominanceIndex::build(&pairs);
        let mut states: Vec<VertexState> =
            pairs.iter().map(|p| VertexState::new(p.value)).collect();
        stats.acquire(states.len() as u64);
        // (length, vertex); ties go to the smaller vertex
        let mut best = (!pairs.is_empty()).then_some((1, 0));

        let mut targets = Vec::new();
        for i in 0..pairs.len() {
            stats.range_queries += 1;
            targets.clear();
            index.dominating_ids(&pairs[i], &mut targets);
            for &j in &targets {
                stats.step();
                if !delta.admits(pairs[i].value, pairs[j].value) {
                    continue;
                }
                stats.edges_relaxed += 1;
                relax_counted(&mut states, i, j, delta, &mut stats, |r| {
                    if best.is_none_or(|(br, bv)| r > br || (r == br && j < bv)) {
                        best = Some((r, j));
                    }
                });
            }
        }
        SparseRun {
            pairs,
            states,
            stats,
            best,
        }
    }

    /// Longest chain found.
    pub fn len(&self) -> usize {
        self.best.map_or(0, |(r, _)| r)
    }

    pub fn is_empty(&self) -> bool {
        self.best.is_none()
    }

    /// `(length, vertex)` of the best chain.
    pub fn best(&self) -> Option<(usize, usize)> {
        self.best
    }

    pub fn total_tuples(&self) -> usize {
        self.states.iter().map(VertexState::tuple_count).sum()
    }

    pub fn witness(&self) -> Result<Witness, LcaisError> {
        match self.best {
            Some((r, v)) => reconstruct(&self.states, &self.pairs, v, r),
            None => Ok(Witness::empty()),
        }
    }
}

/// Follows parent links from the length-`r` tuple at `vertex`.
pub fn reconstruct(
    states: &[VertexState],
    pairs: &[MatchPair],
    vertex: usize,
    r: usize,
) -> Result<Witness, LcaisError> {
    let broken = |vertex, length| LcaisError::BrokenChain { vertex, length };
    let mut rev = Vec::with_capacity(r);
    let (mut v, mut len) = (vertex, r);
    loop {
        let t = states
            .get(v)
            .and_then(|s| s.get(len))
            .ok_or(broken(v, len))?;
        let p = pairs.get(v).ok_or(broken(v, len))?;
        rev.push(WitnessEntry::new(p.value, p.a_index, p.b_index));
        match t.parent {
            None if len == 1 => break,
            Some(parent) if len > 1 && parent < v => {
                v = parent;
                len -= 1;
            }
            _ => return Err(broken(v, len)),
        }
    }
    rev.reverse();
    Ok(rev.into())
}

pub fn sparse_lcais(a: &[Value], b: &[Value], delta: Delta) -> Witness {
    sparse_lcais_with_stats(a, b, delta).0
}

pub fn sparse_lcais_with_stats(a: &[Value], b: &[Value], delta: Delta) -> (Witness, StatsRecord) {
    let mut run = SparseRun::run(a, b, delta);
    let witness = run
        .witness()
        .expect("parent links of a finished run are consistent");
    let live = run.stats.live_tuples();
    run.stats.release(live);
    (witness, run.stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::ReferenceTables;
    use crate::{brute_force_lcais, validate_witness};
    use proptest::prelude::*;

    const A: [Value; 8] = [3, 1, 4, 5, 2, 4, 5, 1];
    const B: [Value; 8] = [4, 2, 3, 1, 2, 5, 3, 1];

    fn d(v: Value) -> Delta {
        Delta::new(v).unwrap()
    }

    #[test]
    fn relax_rules() {
        let mut states = vec![VertexState::new(5), VertexState::new(3)];
        assert_eq!(relax_edge(&mut states, 0, 1, d(3)), vec![2]);
        assert_eq!(
            states[1].get(2),
            Some(ChainTuple {
                max: 5,
                parent: Some(0)
            })
        );

        let mut states = vec![VertexState::new(5), VertexState::new(1)];
        assert!(relax_edge(&mut states, 0, 1, d(3)).is_empty());
        assert_eq!(states[1].longest(), 1);

        // a smaller largest element replaces the stored one
        let mut states = vec![
            VertexState::new(4),
            VertexState::new(7),
            VertexState::new(4),
        ];
        states[2].offer(
            2,
            ChainTuple {
                max: 7,
                parent: Some(1),
            },
        );
        assert_eq!(relax_edge(&mut states, 0, 2, d(3)), vec![2]);
        assert_eq!(
            states[2].get(2),
            Some(ChainTuple {
                max: 4,
                parent: Some(0)
            })
        );
        // and an equal one does not
        assert!(relax_edge(&mut states, 0, 2, d(3)).is_empty());
    }

    #[test]
    #[should_panic(expected = "does not go forward")]
    fn backward_edges_are_rejected() {
        let mut states = vec![VertexState::new(1), VertexState::new(2)];
        relax_edge(&mut states, 1, 0, d(1));
    }

    #[test]
    fn worked_example() {
        let (w, stats) = sparse_lcais_with_stats(&A, &B, d(3));
        assert_eq!(w.len(), 4);
        assert_eq!(validate_witness(&w, &A, &B, d(3)), Ok(()));
        assert_eq!(stats.range_queries, 12);
    }

    #[test]
    fn no_compatible_pairs() {
        let (w, stats) = sparse_lcais_with_stats(&[1, 2], &[2, 1], d(0));
        assert_eq!(w.len(), 1);
        assert_eq!(stats.edges_relaxed, 0);
        assert!(sparse_lcais(&[1, 2], &[3], d(0)).is_empty());
    }

    #[test]
    fn reconstruct_hand_built_chain() {
        let pairs = vec![
            MatchPair::new(1, 1, 1),
            MatchPair::new(2, 2, 2),
            MatchPair::new(3, 3, 3),
        ];
        let mut states: Vec<VertexState> =
            pairs.iter().map(|p| VertexState::new(p.value)).collect();
        states[1].offer(
            2,
            ChainTuple {
                max: 2,
                parent: Some(0),
            },
        );
        states[2].offer(
            3,
            ChainTuple {
                max: 3,
                parent: Some(1),
            },
        );
        let w = reconstruct(&states, &pairs, 2, 3).unwrap();
        assert_eq!(w.values(), vec![1, 2, 3]);
        assert_eq!(w.a_indices(), vec![1, 2, 3]);

        let single = reconstruct(&states, &pairs, 1, 1).unwrap();
        assert_eq!(single.values(), vec![2]);

        // no length-2 entry at vertex 0
        states[2].offer(
            3,
            ChainTuple {
                max: 1,
                parent: Some(0),
            },
        );
        assert_eq!(
            reconstruct(&states, &pairs, 2, 3),
            Err(LcaisError::BrokenChain {
                vertex: 0,
                length: 2
            })
        );
        assert!(reconstruct(&states, &pairs, 2, 4).is_err());
    }

    fn instance(
        max_len: usize,
        values: i64,
    ) -> impl Strategy<Value = (Vec<Value>, Vec<Value>, Value)> {
        (
            prop::collection::vec(0..values, 0..=max_len),
            prop::collection::vec(0..values, 0..=max_len),
            0i64..4,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn optimal_on_small_instances((a, b, delta) in instance(10, 8)) {
            let delta = d(delta);
            let (w, stats) = sparse_lcais_with_stats(&a, &b, delta);
            prop_assert_eq!(w.len(), brute_force_lcais(&a, &b, delta).unwrap().len());
            prop_assert_eq!(validate_witness(&w, &a, &b, delta), Ok(()));
            prop_assert_eq!(stats.range_queries as usize, compute_matches(&a, &b).len());
        }

        #[test]
        fn final_tuples_match_reference((a, b, delta) in instance(40, 10)) {
            let delta = d(delta);
            let run = SparseRun::run(&a, &b, delta);
            let reference = ReferenceTables::build(&a, &b, delta).unwrap();
            prop_assert_eq!(run.len(), reference.len());
            for (v, (p, state)) in run.pairs.iter().zip(&run.states).enumerate() {
                let longest = state.longest();
                prop_assert!(longest <= run.len());
                for r in 1..=reference.len() {
                    let expected = reference.ending_at(p.a_index, p.b_index, r);
                    prop_assert_eq!(state.get(r).map(|t| t.max), expected, "vertex {} r {}", v, r);
                    if let Some(parent) = state.get(r).and_then(|t| t.parent) {
                        prop_assert!(parent < v);
                        prop_assert!(run.states[parent].get(r - 1).is_some());
                    }
                }
                // contiguous lengths
                prop_assert_eq!(state.tuple_count(), longest);
            }
            prop_assert!(run.total_tuples() <= run.pairs.len() * run.len());
        }
    }
}
