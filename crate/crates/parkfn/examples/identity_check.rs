//! Machine verification of `a(a+bn)^(n-1) = sum_r C(n,r)(a+br-1)(a+bn-1)^(n-r-1)`
//! with exact big integers, term by term.
//!
//! ```bash
//! cargo run -p parkfn --example identity_check
//! ```

use parkfn::{verify_identity, Error, Params};

fn main() -> Result<(), Error> {
    // A worked instance, small enough to read off.
    let report = verify_identity(&Params::new(3, 2, 1))?;
    println!(
        "(n=3, a=2, b=1): lhs = {}, rhs = {}, verdict = {}",
        report.lhs, report.rhs, report.verdict
    );
    for (r, term) in report.terms.iter().enumerate() {
        println!("  term r={r}: {term}");
    }

    // At a=0 the r=0 term goes negative and must cancel exactly.
    let report = verify_identity(&Params::new(2, 0, 1))?;
    println!(
        "(n=2, a=0, b=1): terms = {:?}, rhs = {}",
        report
            .terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>(),
        report.rhs
    );

    // A grid sweep; every instance balances.
    let mut checked = 0u64;
    for n in 1..=30usize {
        for a in 0..=8u64 {
            for b in 0..=8u64 {
                assert!(verify_identity(&Params::new(n, a, b))?.verdict);
                checked += 1;
            }
        }
    }
    println!("identity verified at {checked} grid points");
    Ok(())
}
