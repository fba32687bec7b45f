//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An order outside the range supported by the requested operation.
    #[error("{what}: order {order} outside supported range {min}..={max}")]
    OrderOutOfRange {
        what: &'static str,
        order: usize,
        min: usize,
        max: usize,
    },

    /// Mismatched or otherwise unusable arguments.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed textual input (trn lines, path-type literals).
    #[error("parse error: {0}")]
    Parse(String),

    /// A vertex sequence that is not a Hamiltonian sequence at all
    /// (wrong length, repeated vertex, label out of range).
    #[error("not a path: {0}")]
    NotAPath(String),

    /// A Hamiltonian sequence with a consecutive pair joined by no arc.
    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    /// Single-arc path types have no origin-stripped form.
    #[error("degenerate path type: {0}")]
    DegenerateType(String),

    /// A family constructor was given fillers violating an admissibility
    /// condition; the condition is quoted verbatim.
    #[error("family {family} condition violated: {condition}")]
    FamilyCondition {
        family: &'static str,
        condition: String,
    },
}
