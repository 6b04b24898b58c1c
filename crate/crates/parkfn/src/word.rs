//! Words, sorted profiles, and the membership predicate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::params::Params;

/// A candidate parking function: a finite sequence of positive integers.
///
/// Entries are validated at construction; a zero entry is rejected. The
/// empty word is allowed (it is the unique member of every length-0
/// instance).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    entries: Vec<u64>,
}

impl Word {
    /// Builds a word, rejecting zero entries.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&e| e == 0) {
            return Err(Error::ZeroEntry { position: i + 1 });
        }
        Ok(Word { entries })
    }

    pub fn empty() -> Self {
        Word {
            entries: Vec::new(),
        }
    }

    /// Internal constructor for entries already known to be positive.
    pub(crate) fn from_raw(entries: Vec<u64>) -> Self {
        debug_assert!(entries.iter().all(|&e| e >= 1));
        Word { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Number of entries equal to 1.
    pub fn ones_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e == 1).count()
    }

    /// The non-decreasing rearrangement of this word. The word itself is
    /// untouched; membership depends only on this profile.
    pub fn sorted_profile(&self) -> SortedProfile {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        SortedProfile { entries }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.entries)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a comma-separated list of positive integers; the empty string
    /// is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_comma_separated(s)?)
    }
}

/// A word's entries in non-decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SortedProfile {
    entries: Vec<u64>,
}

impl SortedProfile {
    /// Builds a profile, rejecting zero entries and order violations.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&e| e == 0) {
            return Err(Error::ZeroEntry { position: i + 1 });
        }
        if let Some(i) = entries.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotSorted { position: i + 2 });
        }
        Ok(SortedProfile { entries })
    }

    pub(crate) fn from_raw(entries: Vec<u64>) -> Self {
        debug_assert!(entries.iter().all(|&e| e >= 1));
        debug_assert!(entries.windows(2).all(|w| w[0] <= w[1]));
        SortedProfile { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Run lengths of equal entries, e.g. `(1,1,3)` gives `[2, 1]`. The
    /// number of distinct rearrangements of the profile is the multinomial
    /// coefficient of this vector.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        for &e in &self.entries {
            match runs.last_mut() {
                Some((value, count)) if *value == e => *count += 1,
                _ => runs.push((e, 1usize)),
            }
        }
        runs.into_iter().map(|(_, count)| count).collect()
    }

    /// The profile read as a word (its lexicographically smallest
    /// rearrangement).
    pub fn to_word(&self) -> Word {
        Word::from_raw(self.entries.clone())
    }
}

impl fmt::Display for SortedProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.entries)
    }
}

/// Membership predicate: does `word` belong to the instance `params`?
///
/// True iff the sorted profile satisfies `x'_i <= a + b(i-1)` for every
/// position; the empty word belongs to every length-0 instance. Errors when
/// the word length differs from `params.n`.
pub fn is_parking(word: &Word, params: &Params) -> Result<bool> {
    if word.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            actual: word.len(),
        });
    }
    Ok(entries_are_parking(word.entries(), params))
}

/// Unchecked-length membership test on raw entries; shared by the
/// enumerator and the sampler.
pub(crate) fn entries_are_parking(entries: &[u64], params: &Params) -> bool {
    debug_assert_eq!(entries.len(), params.n);
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(i, &e)| e <= params.threshold(i + 1))
}

pub(crate) fn write_comma_separated<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: &[T],
) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

pub(crate) fn parse_comma_separated(s: &str) -> Result<Vec<u64>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| Error::InvalidEntry {
                text: tok.to_string(),
            })
        })
        .collect()
}
