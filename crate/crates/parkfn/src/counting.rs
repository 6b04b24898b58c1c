//! Exact counting: binomials, the closed form `a(a+bn)^(n-1)`, and the
//! memoized deletion recurrence
//!
//! ```text
//! p(n,a,b) = sum_{r=0}^{n} C(n,r) * p(n-r, a+br-1, b)
//! ```
//!
//! with initial conditions `p(0,a,b) = 1` and `p(n,0,b) = 0` for `n >= 1`.
//! All arithmetic is arbitrary precision from the start; nothing is ever
//! rounded or allowed to overflow silently.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::params::Params;

/// An exact non-negative count.
pub type Count = BigUint;

/// Exact binomial coefficient `C(n, r)`; zero when `r < 0` or `r > n`.
///
/// Computed by the multiplicative formula; every intermediate division is
/// exact.
pub fn binomial(n: u64, r: i64) -> Count {
    if r < 0 || r as u64 > n {
        return Count::zero();
    }
    let k = (r as u64).min(n - r as u64);
    let mut result = Count::one();
    for i in 1..=k {
        // result = C(n-k+i, i) after this step; the division is exact.
        result = result * (n - k + i) / i;
    }
    result
}

/// The full row `C(n, 0), C(n, 1), ..., C(n, n)` of Pascal's triangle.
pub(crate) fn binomial_row(n: usize) -> Vec<Count> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(Count::one());
    for r in 1..=n {
        let next = &row[r - 1] * (n - r + 1) as u64 / r as u64;
        row.push(next);
    }
    row
}

/// Multinomial coefficient of a multiplicity vector: the number of distinct
/// rearrangements of a multiset whose run lengths are `multiplicities`.
pub fn multinomial(multiplicities: &[usize]) -> Count {
    let mut total: u64 = 0;
    let mut result = Count::one();
    for &m in multiplicities {
        total += m as u64;
        result *= binomial(total, m as i64);
    }
    result
}

/// The closed-form count of `(a,b)`-parking functions of length `n`:
/// `a(a+bn)^(n-1)`, with the conventions `1` at `n = 0` and `0` when
/// `a = 0` with `n >= 1` (matching the recurrence's initial conditions, so
/// the formal `a * a^(-1)` at `n = 0` is never evaluated).
pub fn count_formula(params: &Params) -> Count {
    closed_form(params.n, params.a, params.b)
}

pub(crate) fn closed_form(n: usize, a: u64, b: u64) -> Count {
    if n == 0 {
        return Count::one();
    }
    if a == 0 {
        return Count::zero();
    }
    let exponent = u32::try_from(n - 1).expect("length too large for closed form");
    let base = Count::from(a) + Count::from(b) * Count::from(n as u64);
    Count::from(a) * base.pow(exponent)
}

/// Memoized evaluation of the deletion recurrence for a fixed increment
/// `b`. Entry `(m, c)` holds exactly `p(m, c, b)`.
///
/// Evaluation descends on two fronts: the `r >= 1` terms strictly decrease
/// the length (realized by recursion, depth at most `m`), while the `r = 0`
/// term decreases the first threshold by one (realized by an in-table loop,
/// so no recursion depth is spent on it). Entries are never recomputed and
/// the descent cannot cycle.
#[derive(Debug, Clone)]
pub struct MemoTable {
    increment: u64,
    table: HashMap<(usize, u64), Count>,
}

impl MemoTable {
    pub fn new(increment: u64) -> Self {
        MemoTable {
            increment,
            table: HashMap::new(),
        }
    }

    /// The fixed threshold increment `b` this table is for.
    pub fn increment(&self) -> u64 {
        self.increment
    }

    /// Number of memoized entries (excluding the implicit base cases).
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Iterates over memoized entries as `((length, first_threshold), count)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, u64), &Count)> {
        self.table.iter().map(|(&k, v)| (k, v))
    }

    /// `p(length, first, b)` for this table's `b`.
    pub fn count(&mut self, length: usize, first: u64) -> Count {
        if length == 0 {
            return Count::one();
        }
        if first == 0 {
            return Count::zero();
        }
        if let Some(hit) = self.table.get(&(length, first)) {
            return hit.clone();
        }

        // Fill p(length, c) for c from the smallest missing value up to
        // `first`; each step's r = 0 term reads the previous entry.
        let mut c = first;
        while c > 1 && !self.table.contains_key(&(length, c - 1)) {
            c -= 1;
        }
        while c <= first {
            let mut total = if c == 1 {
                Count::zero() // p(length, 0, b) = 0
            } else {
                self.table[&(length, c - 1)].clone()
            };
            let mut binom = Count::one();
            for r in 1..=length {
                // binom = C(length, r); the stepwise division is exact.
                binom = binom * (length - r + 1) as u64 / r as u64;
                let sub = self.count(length - r, c + self.increment * r as u64 - 1);
                if !sub.is_zero() {
                    total += &binom * sub;
                }
            }
            self.table.insert((length, c), total);
            c += 1;
        }
        self.table[&(length, first)].clone()
    }
}

/// Counts `P(n,a,b)` by the deletion recurrence with a private memo table.
/// Agrees exactly with [`count_formula`] and with the brute-force oracles.
pub fn count_recurrence(params: &Params) -> Count {
    MemoTable::new(params.b).count(params.n, params.a)
}
