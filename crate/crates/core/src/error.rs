use thiserror::Error;

use crate::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcaisError {
    #[error("delta must be non-negative, got {0}")]
    NegativeDelta(Value),

    /// The instance exceeds the size cutoff of a solver that does not scale.
    #[error(
        "instance too large for the {solver} solver: {size} exceeds the limit of {limit} {unit}"
    )]
    InstanceTooLarge {
        solver: &'static str,
        size: u128,
        limit: u128,
        unit: &'static str,
    },

    /// A parent link in the sparse solver's vertex state does not lead to an
    /// entry one shorter than its child.
    #[error("broken parent chain at vertex {vertex} for length {length}")]
    BrokenChain { vertex: usize, length: usize },
}
