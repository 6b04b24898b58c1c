//! Table emission for sequence exploration: the classical counts
//! (n+1)^(n-1) down one column, a CSV block over a small grid, and the
//! box-case degeneration at b=0.
//!
//! ```bash
//! cargo run -p parkfn --example sequence_table
//! ```

use parkfn::{count_formula, Count, Params};

fn main() {
    println!("classical parking functions, a=b=1:");
    for n in 1..=10usize {
        let count = count_formula(&Params::new(n, 1, 1));
        assert_eq!(count, Count::from(n as u64 + 1).pow(n as u32 - 1));
        println!("  n={n:<2} {count}");
    }

    println!("n,a,b,count");
    for n in 1..=4usize {
        for a in 1..=3u64 {
            for b in 0..=2u64 {
                let count = count_formula(&Params::new(n, a, b));
                println!("{n},{a},{b},{count}");
            }
        }
    }

    // b = 0 collapses to the a^n box.
    for n in 1..=6usize {
        let boxed = count_formula(&Params::new(n, 3, 0));
        assert_eq!(boxed, Count::from(3u64).pow(n as u32));
    }
    println!("b=0 degenerates to a^n: checked for a=3, n=1..6");
}
