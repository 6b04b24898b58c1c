//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when validating or transforming domain values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word's length does not match the instance length `n` it is evaluated
    /// against.
    #[error("word has length {actual}, instance expects length {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    /// Word entries must be positive integers. `position` is 1-based.
    #[error("entry at position {position} is zero; word entries must be positive")]
    ZeroEntry { position: usize },

    /// Text that cannot be parsed as a word entry.
    #[error("cannot parse {text:?} as a positive integer entry")]
    InvalidEntry { text: String },

    /// A sorted profile must be non-decreasing. `position` is the 1-based
    /// index of the first entry smaller than its predecessor.
    #[error("profile decreases at position {position}; entries must be non-decreasing")]
    NotSorted { position: usize },

    /// Positions are 1-based; 0 is never valid.
    #[error("position 0 is invalid; positions are 1-based")]
    ZeroPosition,

    /// Position sets must be strictly increasing (hence duplicate-free).
    #[error("position {position} is not strictly greater than its predecessor")]
    PositionsNotIncreasing { position: usize },

    /// A position points outside `{1, ..., n}`.
    #[error("position {position} exceeds word length {n}")]
    PositionOutOfRange { position: usize, n: usize },

    /// The word fails the parking condition for the given instance.
    #[error("word is not a ({a},{b})-parking function of length {n}")]
    NotParking { n: usize, a: u64, b: u64 },

    /// The instance admits no parking function at all (`a = 0` with `n >= 1`).
    #[error("no ({a},{b})-parking functions of length {n} exist")]
    EmptySet { n: usize, a: u64, b: u64 },

    /// Rejection sampling hit its retry budget without an accepted draw.
    #[error("rejection sampling gave up after {attempts} attempts")]
    BudgetExhausted { attempts: u64 },

    /// The identity and derivation checks are defined only for `n >= 1`.
    #[error("check requires length n >= 1")]
    ZeroLength,
}

pub type Result<T> = std::result::Result<T, Error>;
