//! Matching pairs and a static 2D range tree for dominance queries.

use serde::{Deserialize, Serialize};

use crate::Value;

/// Positions `(a_index, b_index)` (1-based) holding the same value in both
/// inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatchPair {
    pub a_index: usize,
    pub b_index: usize,
    pub value: Value,
}

impl MatchPair {
    pub fn new(a_index: usize, b_index: usize, value: Value) -> Self {
        Self {
            a_index,
            b_index,
            value,
        }
    }

    /// Whether `other` can follow `self` in a common subsequence.
    pub fn is_dominated_by(&self, other: &MatchPair) -> bool {
        other.a_index > self.a_index && other.b_index > self.b_index
    }
}

/// All matching pairs ordered by `b_index`, then `a_index`.
///
/// Sorts a copy of `A` once and binary-searches every element of `B`:
/// `O((n + m) log n + M)`.
pub fn compute_matches(a: &[Value], b: &[Value]) -> Vec<MatchPair> {
    let mut sorted: Vec<(Value, usize)> = a.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
    sorted.sort_unstable();
    let mut pairs = Vec::new();
    for (k, &v) in b.iter().enumerate() {
        let lo = sorted.partition_point(|&(x, _)| x < v);
        let hi = lo + sorted[lo..].partition_point(|&(x, _)| x == v);
        pairs.extend(
            sorted[lo..hi]
                .iter()
                .map(|&(_, i)| MatchPair::new(i, k + 1, v)),
        );
    }
    pairs
}

/// Layered range tree over the points `(b_index, a_index)`.
///
/// The primary tree is a complete binary tree over the points sorted by
/// `(b_index, a_index)`; every node keeps the `a_index` values of its
/// points, sorted, together with the point ids. A dominance query splits the
/// suffix `b > qb` into `O(log M)` canonical nodes and binary-searches each
/// for `a > qa`: `O(log² M + k)` per query, `O(M log M)` space.
#[derive(Debug, Clone)]
pub struct DominanceIndex {
    pairs: Vec<MatchPair>,
    // point ids sorted by (b_index, a_index)
    order: Vec<usize>,
    // heap layout: node k has children 2k and 2k + 1, leaf p is node leaves + p
    leaves: usize,
    nodes: Vec<Vec<(usize, usize)>>,
}

impl DominanceIndex {
    /// Builds the index. Point ids are positions in `pairs`.
    pub fn build(pairs: &[MatchPair]) -> Self {
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.sort_unstable_by_key(|&id| (pairs[id].b_index, pairs[id].a_index));
        let leaves = pairs.len().next_power_of_two();
        let mut nodes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 2 * leaves];
        for (pos, &id) in order.iter().enumerate() {
            nodes[leaves + pos] = vec![(pairs[id].a_index, id)];
        }
        for k in (1..leaves).rev() {
            nodes[k] = merge(&nodes[2 * k], &nodes[2 * k + 1]);
        }
        DominanceIndex {
            pairs: pairs.to_vec(),
            order,
            leaves,
            nodes,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[MatchPair] {
        &self.pairs
    }

    /// Calls `f` with the sorted `a_index` run of every canonical node
    /// covering the points with `b_index > qb`, already cut to `a_index > qa`.
    fn canonical(&self, q: &MatchPair, mut f: impl FnMut(&[(usize, usize)])) {
        let start = self
            .order
            .partition_point(|&id| self.pairs[id].b_index <= q.b_index);
        let mut lo = start + self.leaves;
        let mut hi = self.pairs.len() + self.leaves;
        let mut visit = |node: &Vec<(usize, usize)>| {
            let cut = node.partition_point(|&(a, _)| a <= q.a_index);
            if cut < node.len() {
                f(&node[cut..]);
            }
        };
        while lo < hi {
            if lo & 1 == 1 {
                visit(&self.nodes[lo]);
                lo += 1;
            }
            if hi & 1 == 1 {
                hi -= 1;
                visit(&self.nodes[hi]);
            }
            lo >>= 1;
            hi >>= 1;
        }
    }

    /// Ids of all stored pairs `p` with `p.b_index > q.b_index` and
    /// `p.a_index > q.a_index`, appended to `out` in no particular order.
    pub fn dominating_ids(&self, q: &MatchPair, out: &mut Vec<usize>) {
        self.canonical(q, |run| out.extend(run.iter().map(|&(_, id)| id)));
    }

    pub fn dominating_pairs(&self, q: &MatchPair) -> Vec<MatchPair> {
        let mut ids = Vec::new();
        self.dominating_ids(q, &mut ids);
        ids.into_iter().map(|id| self.pairs[id]).collect()
    }

    /// Size of the dominance query result, without reporting it.
    pub fn count_dominating(&self, q: &MatchPair) -> usize {
        let mut total = 0;
        self.canonical(q, |run| total += run.len());
        total
    }
}

fn merge(x: &[(usize, usize)], y: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        if x[i] <= y[j] {
            out.push(x[i]);
            i += 1;
        } else {
            out.push(y[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    out
}

/// Number of ordered pairs of matching pairs that form a two-element common
/// subsequence.
pub fn count_compatible_pairs(pairs: &[MatchPair]) -> u64 {
    let index = DominanceIndex::build(pairs);
    pairs.iter().map(|p| index.count_dominating(p) as u64).sum()
}

/// Number of matching pairs, without building them.
pub fn count_matches(a: &[Value], b: &[Value]) -> u64 {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    b.iter()
        .map(|v| {
            let lo = sorted.partition_point(|x| x < v);
            (sorted[lo..].partition_point(|x| x == v)) as u64
        })
        .sum()
}

/// Same count as [`count_compatible_pairs`] computed by a sweep over `B`
/// with a Fenwick tree on `a_index`: `O(M log n)` time, `O(n)` space.
pub fn count_compatible_sweep(a: &[Value], b: &[Value]) -> u64 {
    let mut sorted: Vec<(Value, usize)> = a.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
    sorted.sort_unstable();
    let mut fenwick = vec![0u64; a.len() + 1];
    let mut total = 0;
    for v in b {
        let lo = sorted.partition_point(|&(x, _)| x < *v);
        let hi = lo + sorted[lo..].partition_point(|&(x, _)| x == *v);
        let group = &sorted[lo..hi];
        // pairs at an earlier b_index with a smaller a_index
        for &(_, i) in group {
            let mut k = i - 1;
            while k > 0 {
                total += fenwick[k];
                k &= k - 1;
            }
        }
        for &(_, i) in group {
            let mut k = i;
            while k < fenwick.len() {
                fenwick[k] += 1;
                k += k & k.wrapping_neg();
            }
        }
    }
    total
}
