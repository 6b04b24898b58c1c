//! The five-step derivation behind the closed-form identity, checked
//! exactly at one instance: rewrite against M = a+bn-1, absorb the
//! binomial factor, apply the binomial theorem twice, and assemble.
//!
//! ```bash
//! cargo run -p parkfn --example footnote_derivation
//! ```

use parkfn::{verify_footnote_steps, Error, Params};

fn main() -> Result<(), Error> {
    let p = Params::new(2, 2, 3);
    let report = verify_footnote_steps(&p)?;
    println!(
        "(n={}, a={}, b={}): M = a+bn-1 = {}",
        p.n, p.a, p.b, report.shifted_base
    );
    for (i, step) in report.steps.iter().enumerate() {
        println!("step {} ({}):", i + 1, step.label);
        for c in &step.comparisons {
            match c.index {
                Some(r) => println!("  r={r}: {} = {}", c.lhs, c.rhs),
                None => println!("  {} = {}", c.lhs, c.rhs),
            }
        }
        assert!(step.holds);
    }
    println!("all steps hold: {}", report.all_hold());
    Ok(())
}
