//! The one-deletion bijection.
//!
//! A member of `P(n,a,b)` with exactly `r` entries equal to 1 decomposes
//! into the set `S` of positions holding those 1s together with the word
//! `y` formed by the remaining entries, kept in their original relative
//! order, each decreased by 1. The pair `(S, y)` ranges over
//! `B(n,r) x P(n-r, a+br-1, b)`, where `B(n,r)` is the family of
//! `r`-element subsets of `{1, ..., n}`; the map is a bijection, which is
//! what [`bijection_encode`] and [`bijection_decode`] realize.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::word::{is_parking, parse_comma_separated, write_comma_separated, Word};

/// A strictly increasing set of 1-based positions drawn from `{1, ..., n}`.
///
/// The upper bound `n` is not part of the type; it is checked wherever a
/// set meets an instance (see [`bijection_decode`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositionSet {
    positions: Vec<usize>,
}

impl PositionSet {
    /// Builds a position set, rejecting zeros and order violations
    /// (duplicates are order violations).
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        if positions.first() == Some(&0) {
            return Err(Error::ZeroPosition);
        }
        if let Some(i) = positions.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::PositionsNotIncreasing {
                position: positions[i + 1],
            });
        }
        Ok(PositionSet { positions })
    }

    pub fn empty() -> Self {
        PositionSet {
            positions: Vec::new(),
        }
    }

    pub(crate) fn from_raw(positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(positions.first().is_none_or(|&p| p >= 1));
        PositionSet { positions }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }
}

impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.positions)
    }
}

impl FromStr for PositionSet {
    type Err = Error;

    /// Parses a comma-separated list of positions; the empty string is the
    /// empty set.
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_comma_separated(s)?;
        PositionSet::new(raw.into_iter().map(|v| v as usize).collect())
    }
}

/// The image of a word under the one-deletion map: where its 1s were, and
/// what remained (shifted down by one).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BijectionParts {
    ones_positions: PositionSet,
    reduced: Word,
}

impl BijectionParts {
    pub fn new(ones_positions: PositionSet, reduced: Word) -> Self {
        BijectionParts {
            ones_positions,
            reduced,
        }
    }

    pub fn ones_positions(&self) -> &PositionSet {
        &self.ones_positions
    }

    pub fn reduced(&self) -> &Word {
        &self.reduced
    }
}

/// Maps a member of `P(n,a,b)` to `(S, y)`: `S` holds the positions of its
/// 1s and `y` the remaining entries, order preserved, each decreased by 1.
///
/// With `r = |S|`, the reduced word is guaranteed to be a member of the
/// instance `(n-r, a+br-1, b)`, and [`bijection_decode`] inverts the map
/// exactly. Encoding a non-member is an error: the map is only defined on
/// `P(n,a,b)`.
pub fn bijection_encode(word: &Word, params: &Params) -> Result<BijectionParts> {
    if !is_parking(word, params)? {
        return Err(Error::NotParking {
            n: params.n,
            a: params.a,
            b: params.b,
        });
    }
    let mut positions = Vec::new();
    let mut reduced = Vec::new();
    for (i, &e) in word.entries().iter().enumerate() {
        if e == 1 {
            positions.push(i + 1);
        } else {
            reduced.push(e - 1);
        }
    }
    Ok(BijectionParts {
        ones_positions: PositionSet::from_raw(positions),
        reduced: Word::from_raw(reduced),
    })
}

/// Inverse of [`bijection_encode`]: places a 1 at each listed position and
/// fills the remaining positions, left to right, with the reduced word's
/// entries each increased by 1.
///
/// Validates the parts against `params` first: positions must fit in
/// `{1, ..., n}`, the reduced word must have length `n - r`, and it must be
/// a member of the reduced instance `(n-r, a+br-1, b)`. The decoded word is
/// always a member of `P(n,a,b)`.
pub fn bijection_decode(parts: &BijectionParts, params: &Params) -> Result<Word> {
    let positions = parts.ones_positions.positions();
    if let Some(&bad) = positions.iter().find(|&&p| p > params.n) {
        return Err(Error::PositionOutOfRange {
            position: bad,
            n: params.n,
        });
    }
    let r = positions.len();
    let expected = params.n - r;
    if parts.reduced.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            actual: parts.reduced.len(),
        });
    }
    // When a + b*r = 0 there is no reduced instance to check against; the
    // only decodable shape is the completely empty one, and anything else
    // fails the final membership check below.
    if let Some(reduced_params) = params.reduced_instance(r) {
        if !is_parking(&parts.reduced, &reduced_params)? {
            return Err(Error::NotParking {
                n: reduced_params.n,
                a: reduced_params.a,
                b: reduced_params.b,
            });
        }
    }

    let mut entries = vec![0u64; params.n];
    for &p in positions {
        entries[p - 1] = 1;
    }
    let mut rest = parts.reduced.entries().iter();
    for slot in entries.iter_mut() {
        if *slot == 0 {
            *slot = rest.next().expect("length checked above") + 1;
        }
    }
    let word = Word::from_raw(entries);

    // Reachable only in a = 0 corners where the target set is empty.
    if !is_parking(&word, params)? {
        return Err(Error::NotParking {
            n: params.n,
            a: params.a,
            b: params.b,
        });
    }
    Ok(word)
}
