//! Problem instances: the triple `(n, a, b)`.

/// An `(a,b)`-parking-function instance of length `n`.
///
/// A word `x` of length `n` belongs to the instance when its non-decreasing
/// rearrangement `x'` satisfies `x'_i <= a + b(i-1)` for every `i` in
/// `1..=n`. All three parameters are non-negative; `(1,1)` instances are the
/// classical parking functions.
///
/// Threshold arithmetic is done in `u64`; instances are expected to keep
/// `a + b(n-1)` within `u64` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    /// Word length (number of entries).
    pub n: usize,
    /// First threshold.
    pub a: u64,
    /// Threshold increment.
    pub b: u64,
}

impl Params {
    pub const fn new(n: usize, a: u64, b: u64) -> Self {
        Params { n, a, b }
    }

    /// The threshold `a + b(position - 1)` that the sorted profile must not
    /// exceed at `position` (1-based). Non-decreasing in `position`.
    pub fn threshold(&self, position: usize) -> u64 {
        debug_assert!(position >= 1, "positions are 1-based");
        self.a + self.b * (position as u64 - 1)
    }

    /// Largest threshold `a + b(n-1)`, which bounds every entry of every
    /// member word; the enumeration and sampling box is `{1..=box_bound}^n`.
    /// Zero when `n = 0`.
    pub fn box_bound(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            self.threshold(self.n)
        }
    }

    /// The smaller instance `(n - ones, a + b*ones - 1, b)` targeted by the
    /// one-deletion map when a member word contains exactly `ones` entries
    /// equal to 1.
    ///
    /// Returns `None` when `ones > n` or when `a + b*ones = 0` (the reduced
    /// first threshold would be negative; that corner only arises for empty
    /// instances with `a = 0`).
    pub fn reduced_instance(&self, ones: usize) -> Option<Params> {
        if ones > self.n {
            return None;
        }
        let shifted = self.a + self.b * ones as u64;
        if shifted == 0 {
            return None;
        }
        Some(Params::new(self.n - ones, shifted - 1, self.b))
    }
}
