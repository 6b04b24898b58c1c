//! Exhaustive enumeration: the full member stream, the sorted profiles it
//! compresses into, and their multiset expansions.
//!
//! ```bash
//! cargo run -p parkfn --example enumerate_all
//! ```

use parkfn::{enumerate, enumerate_profiles, multiset_permutations, Params};

fn main() {
    let p = Params::new(2, 1, 2);
    println!("members of P(2,1,2), lexicographic:");
    for word in enumerate(&p) {
        println!("  ({word})");
    }

    println!("sorted profiles and their rearrangement counts:");
    for profile in enumerate_profiles(&p) {
        let expansions: Vec<String> = multiset_permutations(&profile)
            .map(|w| w.to_string())
            .collect();
        println!("  ({profile}) -> {}", expansions.join(" "));
    }

    // Degenerate instances.
    println!(
        "|P(0,0,0)| = {} (the empty word), |P(2,0,5)| = {}",
        enumerate(&Params::new(0, 0, 0)).count(),
        enumerate(&Params::new(2, 0, 5)).count()
    );
}
