//! Counting the same sets three independent ways: closed form, memoized
//! recurrence, and brute-force exhaustion. Any disagreement is a bug.
//!
//! ```bash
//! cargo run -p parkfn --example count_three_ways
//! ```

use parkfn::{count_brute, count_formula, count_recurrence, BruteMethod, Params};

fn main() {
    println!(
        "{:>3} {:>3} {:>3} {:>10} {:>10} {:>10} {:>10}",
        "n", "a", "b", "formula", "recur", "box", "profiles"
    );
    for n in 0..=4usize {
        for (a, b) in [(1, 1), (2, 3), (3, 0), (0, 2)] {
            let p = Params::new(n, a, b);
            let formula = count_formula(&p);
            let recurrence = count_recurrence(&p);
            let by_box = count_brute(&p, BruteMethod::BoxScan);
            let by_profiles = count_brute(&p, BruteMethod::Profiles);
            assert_eq!(formula, recurrence);
            assert_eq!(formula, by_box);
            assert_eq!(formula, by_profiles);
            println!("{n:>3} {a:>3} {b:>3} {formula:>10} {recurrence:>10} {by_box:>10} {by_profiles:>10}");
        }
    }

    // Far beyond machine words, formula and recurrence still agree exactly.
    let big = Params::new(40, 5, 7);
    let formula = count_formula(&big);
    assert_eq!(formula, count_recurrence(&big));
    println!("p(40,5,7) = {formula}");
}
