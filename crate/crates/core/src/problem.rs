//! The problem definition: values, the tolerance `delta`, witnesses and the
//! validators every solver's output is checked against.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::LcaisError;

/// Sequence element. Values compare exactly.
pub type Value = i64;

/// Non-negative tolerance of the almost-increasing condition.
///
/// A sequence `s` is almost increasing when every element plus `delta`
/// strictly exceeds the maximum of the elements before it. With `delta = 0`
/// this is ordinary strict increase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Value", into = "Value")]
pub struct Delta(Value);

impl Delta {
    pub const ZERO: Delta = Delta(0);

    pub fn new(value: Value) -> Result<Self, LcaisError> {
        if value < 0 {
            return Err(LcaisError::NegativeDelta(value));
        }
        Ok(Delta(value))
    }

    pub fn get(self) -> Value {
        self.0
    }

    /// Whether `next` may follow a prefix whose largest element is
    /// `earlier_max`, i.e. `next + delta > earlier_max`.
    ///
    /// Evaluated in 128 bits so the full `i64` range is safe.
    #[inline]
    pub fn admits(self, earlier_max: Value, next: Value) -> bool {
        next as i128 + self.0 as i128 > earlier_max as i128
    }
}

impl TryFrom<Value> for Delta {
    type Error = LcaisError;

    fn try_from(value: Value) -> Result<Self, Self::Error> {
        Delta::new(value)
    }
}

impl From<Delta> for Value {
    fn from(d: Delta) -> Value {
        d.0
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// One element of a common subsequence together with its 1-based positions
/// in both inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub value: Value,
    pub a_index: usize,
    pub b_index: usize,
}

impl WitnessEntry {
    pub fn new(value: Value, a_index: usize, b_index: usize) -> Self {
        Self {
            value,
            a_index,
            b_index,
        }
    }
}

/// An explicit solution: a common almost-increasing subsequence with its
/// positions in both inputs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub entries: Vec<WitnessEntry>,
}

impl Witness {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> Vec<Value> {
        self.entries.iter().map(|e| e.value).collect()
    }

    pub fn a_indices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.a_index).collect()
    }

    pub fn b_indices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.b_index).collect()
    }
}

impl From<Vec<WitnessEntry>> for Witness {
    fn from(entries: Vec<WitnessEntry>) -> Self {
        Self { entries }
    }
}

impl FromIterator<WitnessEntry> for Witness {
    fn from_iter<I: IntoIterator<Item = WitnessEntry>>(iter: I) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}

/// First invariant a witness breaks, with the 0-based entry position where
/// the check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessViolation {
    IndexOutOfRange { entry: usize },
    IndexOrder { entry: usize },
    ValueMismatch { entry: usize },
    NotAlmostIncreasing { entry: usize },
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessViolation::IndexOutOfRange { entry } => {
                write!(f, "entry {entry}: index outside of the input")
            }
            WitnessViolation::IndexOrder { entry } => {
                write!(f, "entry {entry}: indices are not strictly increasing")
            }
            WitnessViolation::ValueMismatch { entry } => {
                write!(f, "entry {entry}: value differs from the input element")
            }
            WitnessViolation::NotAlmostIncreasing { entry } => {
                write!(
                    f,
                    "entry {entry}: value plus delta does not exceed an earlier value"
                )
            }
        }
    }
}

impl std::error::Error for WitnessViolation {}

/// Returns true iff every element plus `delta` strictly exceeds the maximum
/// of all earlier elements.
pub fn is_almost_increasing(seq: &[Value], delta: Delta) -> bool {
    almost_increasing_violation(seq, delta).is_none()
}

fn almost_increasing_violation(seq: &[Value], delta: Delta) -> Option<usize> {
    let mut max = *seq.first()?;
    for (pos, &v) in seq.iter().enumerate().skip(1) {
        if !delta.admits(max, v) {
            return Some(pos);
        }
        max = max.max(v);
    }
    None
}

/// Returns true iff `sub` embeds left-to-right into `seq`.
pub fn is_subsequence(sub: &[Value], seq: &[Value]) -> bool {
    let mut rest = seq.iter();
    sub.iter().all(|v| rest.any(|x| x == v))
}

/// Checks a witness against both inputs and `delta`.
///
/// Indices must be in range and strictly increasing on both sides, each
/// entry's value must equal the referenced elements, and the values must be
/// almost increasing.
pub fn validate_witness(
    witness: &Witness,
    a: &[Value],
    b: &[Value],
    delta: Delta,
) -> Result<(), WitnessViolation> {
    let mut prev: Option<&WitnessEntry> = None;
    for (pos, e) in witness.entries.iter().enumerate() {
        if e.a_index == 0 || e.a_index > a.len() || e.b_index == 0 || e.b_index > b.len() {
            return Err(WitnessViolation::IndexOutOfRange { entry: pos });
        }
        if let Some(p) = prev {
            if e.a_index <= p.a_index || e.b_index <= p.b_index {
                return Err(WitnessViolation::IndexOrder { entry: pos });
            }
        }
        if a[e.a_index - 1] != e.value || b[e.b_index - 1] != e.value {
            return Err(WitnessViolation::ValueMismatch { entry: pos });
        }
        prev = Some(e);
    }
    match almost_increasing_violation(&witness.values(), delta) {
        Some(entry) => Err(WitnessViolation::NotAlmostIncreasing { entry }),
        None => Ok(()),
    }
}
