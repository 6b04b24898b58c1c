//! Brute-force oracles: exhaustive enumeration of `P(n,a,b)` two
//! independent ways, plus a uniform rejection sampler.
//!
//! The box scan tests every word in `{1..=a+b(n-1)}^n` against the
//! membership predicate; the profile route enumerates the far smaller
//! family of sorted profiles and expands each into its distinct
//! rearrangements. The two routes share no counting logic; disagreement
//! between them flags a bug.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::counting::{multinomial, Count};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::word::{entries_are_parking, SortedProfile, Word};

/// Streams all of `P(n,a,b)` in strict lexicographic order, each member
/// exactly once.
///
/// Scans the box `{1..=a+b(n-1)}^n` and keeps the members; no entry of a
/// member can exceed the largest threshold, so nothing is missed. For
/// `n = 0` the stream holds the single empty word; for `a = 0` with
/// `n >= 1` it is empty. Resource limits are the caller's concern.
pub fn enumerate(params: &Params) -> Enumerate {
    let bound = params.box_bound();
    let candidate = if params.n >= 1 && bound == 0 {
        None
    } else {
        Some(vec![1u64; params.n])
    };
    Enumerate {
        params: *params,
        bound,
        candidate,
    }
}

/// Lexicographic stream over `P(n,a,b)`; see [`enumerate`].
#[derive(Debug, Clone)]
pub struct Enumerate {
    params: Params,
    bound: u64,
    /// Next untested box word, or `None` once the box is exhausted.
    candidate: Option<Vec<u64>>,
}

impl Enumerate {
    /// Advances the odometer; false when the box is exhausted.
    fn advance(&mut self) -> bool {
        let entries = match self.candidate.as_mut() {
            Some(e) => e,
            None => return false,
        };
        for i in (0..entries.len()).rev() {
            if entries[i] < self.bound {
                entries[i] += 1;
                for later in entries[i + 1..].iter_mut() {
                    *later = 1;
                }
                return true;
            }
        }
        self.candidate = None;
        false
    }
}

impl Iterator for Enumerate {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let entries = self.candidate.as_ref()?;
            let hit = entries_are_parking(entries, &self.params);
            let word = hit.then(|| Word::from_raw(entries.clone()));
            self.advance();
            if word.is_some() {
                return word;
            }
        }
    }
}

/// Streams every non-decreasing sequence `t` with `1 <= t_i <= a+b(i-1)`
/// in lexicographic order: exactly the sorted profiles of `P(n,a,b)`
/// members, each once.
pub fn enumerate_profiles(params: &Params) -> Profiles {
    let next = if params.n >= 1 && params.a == 0 {
        None
    } else {
        Some(vec![1u64; params.n])
    };
    Profiles {
        params: *params,
        next,
    }
}

/// Lexicographic stream of sorted profiles; see [`enumerate_profiles`].
#[derive(Debug, Clone)]
pub struct Profiles {
    params: Params,
    /// Next profile to yield; always valid when present.
    next: Option<Vec<u64>>,
}

impl Iterator for Profiles {
    type Item = SortedProfile;

    fn next(&mut self) -> Option<SortedProfile> {
        let current = self.next.take()?;
        // Successor: bump the rightmost entry below its threshold, then
        // level everything after it (thresholds are non-decreasing, so the
        // levelled tail is always admissible).
        let mut succ = current.clone();
        let mut advanced = false;
        for i in (0..succ.len()).rev() {
            if succ[i] < self.params.threshold(i + 1) {
                succ[i] += 1;
                let v = succ[i];
                for later in succ[i + 1..].iter_mut() {
                    *later = v;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(SortedProfile::from_raw(current))
    }
}

/// Streams every distinct rearrangement of a profile's multiset exactly
/// once, in lexicographic order. The number of words yielded is the
/// multinomial coefficient of the profile's multiplicity vector.
pub fn multiset_permutations(profile: &SortedProfile) -> MultisetPermutations {
    MultisetPermutations {
        next: Some(profile.entries().to_vec()),
    }
}

/// Lexicographic stream of distinct rearrangements; see
/// [`multiset_permutations`].
#[derive(Debug, Clone)]
pub struct MultisetPermutations {
    next: Option<Vec<u64>>,
}

impl Iterator for MultisetPermutations {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Word::from_raw(current))
    }
}

/// In-place successor in lexicographic order over the multiset; false at
/// the final (non-increasing) arrangement.
fn next_permutation(entries: &mut [u64]) -> bool {
    if entries.len() < 2 {
        return false;
    }
    let Some(pivot) = (0..entries.len() - 1)
        .rev()
        .find(|&i| entries[i] < entries[i + 1])
    else {
        return false;
    };
    let swap = (pivot + 1..entries.len())
        .rev()
        .find(|&j| entries[j] > entries[pivot])
        .expect("a larger suffix entry exists by choice of pivot");
    entries.swap(pivot, swap);
    entries[pivot + 1..].reverse();
    true
}

/// Which independent oracle computes the cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteMethod {
    /// Count the box-scan survivors of the membership predicate.
    BoxScan,
    /// Sum the multinomial coefficient of every sorted profile.
    Profiles,
}

/// Exact `|P(n,a,b)|` by exhaustion. Both methods agree on every instance;
/// [`BruteMethod::Profiles`] reaches much larger instances than the box.
pub fn count_brute(params: &Params, method: BruteMethod) -> Count {
    match method {
        BruteMethod::BoxScan => Count::from(enumerate(params).count() as u64),
        BruteMethod::Profiles => enumerate_profiles(params)
            .map(|profile| multinomial(&profile.multiplicities()))
            .sum(),
    }
}

/// Default retry budget for [`sample_uniform`].
pub const DEFAULT_SAMPLE_BUDGET: u64 = 1_000_000;

/// Draws one member of `P(n,a,b)` exactly uniformly, by rejection from the
/// box `{1..=a+b(n-1)}^n`, with the default retry budget.
///
/// Deterministic given the seed. The generator identity is part of the
/// compatibility contract: a ChaCha stream cipher with 8 rounds
/// (`ChaCha8Rng`) keyed via `seed_from_u64(seed)`, with entries drawn
/// first-to-last from the uniform range `1..=a+b(n-1)`.
pub fn sample_uniform(params: &Params, seed: u64) -> Result<Word> {
    sample_uniform_with_budget(params, seed, DEFAULT_SAMPLE_BUDGET)
}

/// [`sample_uniform`] with a caller-supplied retry budget.
pub fn sample_uniform_with_budget(params: &Params, seed: u64, budget: u64) -> Result<Word> {
    if params.n == 0 {
        return Ok(Word::empty());
    }
    if params.a == 0 {
        return Err(Error::EmptySet {
            n: params.n,
            a: params.a,
            b: params.b,
        });
    }
    let bound = params.box_bound();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let entries: Vec<u64> = (0..params.n).map(|_| rng.random_range(1..=bound)).collect();
        if entries_are_parking(&entries, params) {
            return Ok(Word::from_raw(entries));
        }
    }
    Err(Error::BudgetExhausted { attempts: budget })
}
