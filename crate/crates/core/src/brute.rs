//! Exhaustive search, used as ground truth on desk-scale instances.

use std::collections::HashMap;

use crate::{Delta, LcaisError, Value, Witness, WitnessEntry};

/// Largest `min(n, m)` the exhaustive search accepts.
pub const BRUTE_FORCE_LIMIT: usize = 22;

/// Maximum-length common almost-increasing subsequence by enumeration.
///
/// Every subsequence of the shorter input is enumerated (pruned as soon as a
/// prefix stops being almost increasing or embeddable), and the longer input
/// is matched greedily. Among maximum-length answers the one with the
/// lexicographically smallest `b_index` sequence is returned, ties then broken
/// by the `a_index` sequence.
pub fn brute_force_lcais(a: &[Value], b: &[Value], delta: Delta) -> Result<Witness, LcaisError> {
    let shorter = a.len().min(b.len());
    if shorter > BRUTE_FORCE_LIMIT {
        return Err(LcaisError::InstanceTooLarge {
            solver: "brute",
            size: shorter as u128,
            limit: BRUTE_FORCE_LIMIT as u128,
            unit: "elements in the shorter sequence",
        });
    }
    let a_is_short = a.len() <= b.len();
    let (short, long) = if a_is_short { (a, b) } else { (b, a) };

    let mut positions: HashMap<Value, Vec<usize>> = HashMap::new();
    for (p, &v) in long.iter().enumerate() {
        positions.entry(v).or_default().push(p);
    }

    let mut search = Search {
        short,
        positions,
        delta,
        a_is_short,
        path: Vec::new(),
        best: Vec::new(),
    };
    search.extend(0, 0, None);

    Ok(search
        .best
        .into_iter()
        .map(|(a_index, b_index, value)| WitnessEntry::new(value, a_index, b_index))
        .collect())
}

struct Search<'a> {
    short: &'a [Value],
    positions: HashMap<Value, Vec<usize>>,
    delta: Delta,
    a_is_short: bool,
    // (short position, long position), 0-based
    path: Vec<(usize, usize)>,
    // (a_index, b_index, value), 1-based
    best: Vec<(usize, usize, Value)>,
}

impl Search<'_> {
    fn extend(&mut self, from_short: usize, from_long: usize, max: Option<Value>) {
        for s in from_short..self.short.len() {
            let v = self.short[s];
            if let Some(m) = max {
                if !self.delta.admits(m, v) {
                    continue;
                }
            }
            let Some(l) = self.next_in_long(v, from_long) else {
                continue;
            };
            self.path.push((s, l));
            self.record();
            self.extend(s + 1, l + 1, Some(max.map_or(v, |m| m.max(v))));
            self.path.pop();
        }
    }

    fn next_in_long(&self, v: Value, from: usize) -> Option<usize> {
        let ps = self.positions.get(&v)?;
        let k = ps.partition_point(|&p| p < from);
        ps.get(k).copied()
    }

    fn record(&mut self) {
        let candidate: Vec<(usize, usize, Value)> = self
            .path
            .iter()
            .map(|&(s, l)| {
                let (ai, bi) = if self.a_is_short { (s, l) } else { (l, s) };
                (ai + 1, bi + 1, self.short[s])
            })
            .collect();
        let better = match candidate.len().cmp(&self.best.len()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                let key = |w: &[(usize, usize, Value)]| -> (Vec<usize>, Vec<usize>) {
                    (
                        w.iter().map(|e| e.1).collect(),
                        w.iter().map(|e| e.0).collect(),
                    )
                };
                key(&candidate) < key(&self.best)
            }
        };
        if better {
            self.best = candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate_witness;

    const A: [Value; 8] = [3, 1, 4, 5, 2, 4, 5, 1];
    const B: [Value; 8] = [4, 2, 3, 1, 2, 5, 3, 1];

    fn d(v: Value) -> Delta {
        Delta::new(v).unwrap()
    }

    #[test]
    fn table_instance_has_length_four() {
        let w = brute_force_lcais(&A, &B, d(3)).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(validate_witness(&w, &A, &B, d(3)), Ok(()));
        // no length-4 answer starts at b=1 or b=2; [3,1,2,5] beats [3,1,2,1]
        assert_eq!(w.b_indices(), vec![3, 4, 5, 6]);
        assert_eq!(w.a_indices(), vec![1, 2, 5, 7]);
        assert_eq!(w.values(), vec![3, 1, 2, 5]);
    }

    #[test]
    fn empty_side_gives_empty_witness() {
        assert!(brute_force_lcais(&[1, 2, 3], &[], d(1)).unwrap().is_empty());
        assert!(brute_force_lcais(&[], &[1], d(1)).unwrap().is_empty());
    }

    #[test]
    fn strict_case_cannot_use_all_three() {
        let w = brute_force_lcais(&[3, 1, 2], &[1, 2, 3], d(0)).unwrap();
        assert_eq!(w.values(), vec![1, 2]);
        assert_eq!(w.a_indices(), vec![2, 3]);
        assert_eq!(w.b_indices(), vec![1, 2]);
    }

    #[test]
    fn oversized_instances_are_rejected() {
        let long = vec![0; BRUTE_FORCE_LIMIT + 1];
        let err = brute_force_lcais(&long, &long, d(1)).unwrap_err();
        assert!(matches!(
            err,
            LcaisError::InstanceTooLarge {
                solver: "brute",
                ..
            }
        ));
        // only the shorter side counts
        let short = vec![0; BRUTE_FORCE_LIMIT];
        assert_eq!(
            brute_force_lcais(&short, &long, d(1)).unwrap().len(),
            BRUTE_FORCE_LIMIT
        );
    }

    #[test]
    fn orientation_does_not_change_tie_break() {
        // a shorter than b and the other way round must pick the same b-indices
        let a = [2, 1, 2];
        let b = [1, 2, 2, 1, 2];
        let w = brute_force_lcais(&a, &b, d(2)).unwrap();
        let w2 = brute_force_lcais(&b, &a, d(2)).unwrap();
        assert_eq!(w.len(), w2.len());
        assert_eq!(validate_witness(&w, &a, &b, d(2)), Ok(()));
        assert_eq!(validate_witness(&w2, &b, &a, d(2)), Ok(()));
    }
}
