//! Membership basics: thresholds, sorted profiles, and the predicate.
//!
//! ```bash
//! cargo run -p parkfn --example membership
//! ```

use parkfn::{is_parking, Error, Params, Word};

fn main() -> Result<(), Error> {
    // The classical case: thresholds 1, 2, 3.
    let classic = Params::new(3, 1, 1);
    println!(
        "thresholds of (n=3, a=1, b=1): {:?}",
        (1..=3).map(|i| classic.threshold(i)).collect::<Vec<_>>()
    );

    for entries in ["3,1,2", "2,2,2", "1,1,3"] {
        let word: Word = entries.parse()?;
        println!(
            "{entries:>5}  sorted={}  parking={}",
            word.sorted_profile(),
            is_parking(&word, &classic)?
        );
    }

    // A generalized instance: thresholds 1, 3 for (n=2, a=1, b=2).
    let wide = Params::new(2, 1, 2);
    for entries in ["1,3", "3,1", "2,3"] {
        let word: Word = entries.parse()?;
        println!(
            "(a=1,b=2) {entries:>4}  parking={}",
            is_parking(&word, &wide)?
        );
    }

    // The empty word belongs to every length-0 instance.
    println!(
        "empty word at (n=0, a=0, b=0): {}",
        is_parking(&Word::empty(), &Params::new(0, 0, 0))?
    );
    Ok(())
}
