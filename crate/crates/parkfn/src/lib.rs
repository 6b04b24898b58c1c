//! Exact arithmetic for `(a,b)`-parking functions.
//!
//! A word `(x_1, ..., x_n)` of positive integers is an `(a,b)`-parking
//! function when its non-decreasing rearrangement `x'` satisfies
//! `x'_i <= a + b(i-1)` for every `i`; `(1,1)` instances are the classical
//! parking functions, counted by `(n+1)^(n-1)`. In general there are
//! exactly `a(a+bn)^(n-1)` of them, and this crate implements, enumerates,
//! counts, and cross-verifies that fact with exact big-integer arithmetic
//! throughout:
//!
//! - [`is_parking`]: the membership predicate over [`Word`] and [`Params`].
//! - [`bijection_encode`] / [`bijection_decode`]: the one-deletion
//!   bijection sending a member with `r` ones to a position set plus a
//!   member of the smaller instance `(n-r, a+br-1, b)`.
//! - [`enumerate`], [`enumerate_profiles`], [`multiset_permutations`],
//!   [`count_brute`]: two independent brute-force oracles.
//! - [`count_formula`], [`count_recurrence`]: the closed form
//!   `a(a+bn)^(n-1)` and the memoized deletion recurrence.
//! - [`verify_identity`], [`verify_footnote_steps`]: machine checks of the
//!   closed-form identity and of the five-step derivation behind it.
//! - [`sample_uniform`]: a seeded, exactly-uniform rejection sampler.
//!
//! All operations are pure functions of their inputs and every value is
//! immutable after construction, so everything here can be used freely
//! across threads.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p parkfn --example membership
//! cargo run -p parkfn --example enumerate_all
//! cargo run -p parkfn --example count_three_ways
//! cargo run -p parkfn --example bijection_roundtrip
//! cargo run -p parkfn --example identity_check
//! cargo run -p parkfn --example footnote_derivation
//! cargo run -p parkfn --example uniform_sample
//! cargo run -p parkfn --example sequence_table
//! ```
//!
//! A thin `parkfn` binary exposes the same operations as subcommands
//! (`count`, `enumerate`, `check`, `bijection`, `verify`, `table`,
//! `sample`) with deterministic text, JSON-lines, and CSV output; see
//! [`cli`].
//!
//! # Quick tour
//!
//! ```
//! use parkfn::{count_formula, count_recurrence, enumerate, is_parking, Params, Word};
//!
//! let p = Params::new(2, 1, 2);
//! let w: Word = "1,3".parse()?;
//! assert!(is_parking(&w, &p)?);
//!
//! let members: Vec<Word> = enumerate(&p).collect();
//! assert_eq!(members.len(), 5);
//! assert_eq!(count_formula(&p), count_recurrence(&p));
//! # Ok::<(), parkfn::Error>(())
//! ```

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod identity;
pub mod params;
pub mod word;

pub use bijection::{bijection_decode, bijection_encode, BijectionParts, PositionSet};
pub use counting::{binomial, count_formula, count_recurrence, multinomial, Count, MemoTable};
pub use enumerate::{
    count_brute, enumerate, enumerate_profiles, multiset_permutations, sample_uniform,
    sample_uniform_with_budget, BruteMethod, Enumerate, MultisetPermutations, Profiles,
    DEFAULT_SAMPLE_BUDGET,
};
pub use error::{Error, Result};
pub use identity::{
    verify_footnote_steps, verify_identity, Comparison, DerivationStep, FootnoteReport,
    IdentityReport,
};
pub use params::Params;
pub use word::{is_parking, SortedProfile, Word};
