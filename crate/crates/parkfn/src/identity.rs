//! Machine verification of the closed-form identity
//!
//! ```text
//! a(a+bn)^(n-1) = sum_{r=0}^{n} C(n,r) (a+br-1)(a+bn-1)^(n-r-1)
//! ```
//!
//! and of the five-step derivation that proves it. Writing
//! `q(m,c,b) = c(c+bm)^(m-1)` with the convention `q(0,c,b) = 1` (mirroring
//! `p(0,a,b) = 1`), the right-hand side is `sum_r C(n,r) q(n-r, a+br-1, b)`
//! and the `r = n` term's formal exponent `-1` disappears.
//!
//! Terms are evaluated over signed big integers: for `a = 0` the `r = 0`
//! term has the negative first factor `a - 1`, and the identity balances
//! only if that sign is kept. Both sides are polynomials in `a` and `b`, so
//! equality is exact on all non-negative integer inputs, `a = 0` included.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::counting::binomial_row;
use crate::error::{Error, Result};
use crate::params::Params;

/// Both sides of the closed-form identity at one instance, with the
/// per-term values of the right-hand sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub params: Params,
    /// `a(a+bn)^(n-1)`.
    pub lhs: BigInt,
    /// `sum_{r=0}^{n} C(n,r) q(n-r, a+br-1, b)`; always equals the sum of
    /// `terms`.
    pub rhs: BigInt,
    /// Term values indexed by `r = 0..=n`. Negative only when `a = 0`.
    pub terms: Vec<BigInt>,
    /// `lhs == rhs`; expected true for every valid instance.
    pub verdict: bool,
}

/// Evaluates both sides of the identity exactly. Errors for `n = 0`, where
/// the exponents are ill-formed.
pub fn verify_identity(params: &Params) -> Result<IdentityReport> {
    if params.n == 0 {
        return Err(Error::ZeroLength);
    }
    let n = params.n;
    let a = BigInt::from(params.a);
    let b = BigInt::from(params.b);

    let lhs = closed_form_signed(n, &a, &b);

    // All q-factors share the base a+bn-1; walk r downward so the power
    // grows by one multiplication per term.
    let base = &a + &b * BigInt::from(n as u64) - 1;
    let binoms = binomial_row(n);
    let mut terms = vec![BigInt::zero(); n + 1];
    terms[n] = BigInt::one(); // q(0, a+bn-1, b) = 1
    let mut power = BigInt::one(); // base^(n-r-1), starting at r = n-1
    for r in (0..n).rev() {
        let first_factor = &a + &b * BigInt::from(r as u64) - 1;
        terms[r] = BigInt::from(binoms[r].clone()) * first_factor * &power;
        power *= &base;
    }
    let rhs: BigInt = terms.iter().sum();
    let verdict = lhs == rhs;

    Ok(IdentityReport {
        params: *params,
        lhs,
        rhs,
        terms,
        verdict,
    })
}

/// `a(a+bn)^(n-1)` over signed integers, `n >= 1`.
fn closed_form_signed(n: usize, a: &BigInt, b: &BigInt) -> BigInt {
    let exponent = u32::try_from(n - 1).expect("length too large for closed form");
    let base = a + b * BigInt::from(n as u64);
    a * base.pow(exponent)
}

/// One compared pair inside a derivation step; `index` carries the summand
/// index `r` for the per-`r` steps and is absent for the single-equation
/// steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub index: Option<usize>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// One step of the derivation: a label, the compared sides, and whether
/// every comparison held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub label: &'static str,
    pub comparisons: Vec<Comparison>,
    pub holds: bool,
}

impl DerivationStep {
    fn new(label: &'static str, comparisons: Vec<Comparison>) -> Self {
        let holds = comparisons.iter().all(|c| c.lhs == c.rhs);
        DerivationStep {
            label,
            comparisons,
            holds,
        }
    }
}

/// The five derivation steps at one instance. `shifted_base` is the shared
/// power base `a+bn-1` the derivation rewrites everything against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FootnoteReport {
    pub params: Params,
    pub shifted_base: BigInt,
    pub steps: Vec<DerivationStep>,
}

impl FootnoteReport {
    pub fn all_hold(&self) -> bool {
        self.steps.iter().all(|s| s.holds)
    }
}

/// Checks each step of the derivation exactly, writing `M = a+bn-1`:
///
/// 1. split: `a+br-1 = M - b(n-r)` for every `r` in `0..=n`;
/// 2. absorption: `(n-r) C(n,r) = n C(n-1,r)` for every `r` in `0..=n-1`;
/// 3. binomial theorem: `sum_{r=0}^{n} C(n,r) M^(n-r) = (M+1)^n`;
/// 4. binomial theorem, shifted: `sum_{r=0}^{n-1} C(n-1,r) M^(n-1-r) = (M+1)^(n-1)`;
/// 5. assembly: `(M+1)^n - bn(M+1)^(n-1) = a(a+bn)^(n-1)`.
///
/// Errors for `n = 0`. Every step holds for every valid instance.
pub fn verify_footnote_steps(params: &Params) -> Result<FootnoteReport> {
    if params.n == 0 {
        return Err(Error::ZeroLength);
    }
    let n = params.n;
    let a = BigInt::from(params.a);
    let b = BigInt::from(params.b);
    let base = &a + &b * BigInt::from(n as u64) - 1; // M, possibly -1 when a = b = 0
    let successor: BigInt = &base + 1; // M + 1 = a + bn

    let split = DerivationStep::new(
        "split",
        (0..=n)
            .map(|r| Comparison {
                index: Some(r),
                lhs: &a + &b * BigInt::from(r as u64) - 1,
                rhs: &base - &b * BigInt::from((n - r) as u64),
            })
            .collect(),
    );

    let row_n = binomial_row(n);
    let row_n1 = binomial_row(n - 1);
    let absorption = DerivationStep::new(
        "absorption",
        (0..n)
            .map(|r| Comparison {
                index: Some(r),
                lhs: BigInt::from((n - r) as u64) * BigInt::from(row_n[r].clone()),
                rhs: BigInt::from(n as u64) * BigInt::from(row_n1[r].clone()),
            })
            .collect(),
    );

    let binomial_theorem = DerivationStep::new(
        "binomial-theorem",
        vec![Comparison {
            index: None,
            lhs: power_sum(&row_n, &base),
            rhs: successor.pow(n as u32),
        }],
    );

    let binomial_theorem_shifted = DerivationStep::new(
        "binomial-theorem-shifted",
        vec![Comparison {
            index: None,
            lhs: power_sum(&row_n1, &base),
            rhs: successor.pow((n - 1) as u32),
        }],
    );

    let assembly = DerivationStep::new(
        "assembly",
        vec![Comparison {
            index: None,
            lhs: successor.pow(n as u32)
                - &b * BigInt::from(n as u64) * successor.pow((n - 1) as u32),
            rhs: closed_form_signed(n, &a, &b),
        }],
    );

    Ok(FootnoteReport {
        params: *params,
        shifted_base: base,
        steps: vec![
            split,
            absorption,
            binomial_theorem,
            binomial_theorem_shifted,
            assembly,
        ],
    })
}

/// `sum_{r=0}^{k} C(k,r) base^(k-r)` for the binomial row of `k`.
fn power_sum(row: &[crate::counting::Count], base: &BigInt) -> BigInt {
    let mut total = BigInt::zero();
    let mut power = BigInt::one();
    for coefficient in row.iter().rev() {
        total += BigInt::from(coefficient.clone()) * &power;
        power *= base;
    }
    total
}
