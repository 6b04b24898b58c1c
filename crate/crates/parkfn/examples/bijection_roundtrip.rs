//! The one-deletion bijection: encode a member into (positions of 1s,
//! reduced word), decode back, and stratify a whole instance by its number
//! of 1s.
//!
//! ```bash
//! cargo run -p parkfn --example bijection_roundtrip
//! ```

use parkfn::{
    bijection_decode, bijection_encode, binomial, count_recurrence, enumerate, Error, Params, Word,
};

fn main() -> Result<(), Error> {
    let p = Params::new(4, 1, 1);
    let word: Word = "1,3,1,2".parse()?;
    let parts = bijection_encode(&word, &p)?;
    let reduced_params = p.reduced_instance(parts.ones_positions().len()).unwrap();
    println!(
        "({word}) -> S={{{}}}, y=({}) in P({},{},{})",
        parts.ones_positions(),
        parts.reduced(),
        reduced_params.n,
        reduced_params.a,
        reduced_params.b
    );
    assert_eq!(bijection_decode(&parts, &p)?, word);
    println!("decode(encode(x)) = x confirmed");

    // The bijection explains the deletion recurrence set-theoretically:
    // members with exactly r ones match B(n,r) x P(n-r, a+br-1, b).
    let p = Params::new(3, 2, 1);
    println!("stratifying P(3,2,1) by number of 1s:");
    let mut strata = vec![0u64; p.n + 1];
    for member in enumerate(&p) {
        strata[member.ones_count()] += 1;
    }
    for (r, observed) in strata.iter().enumerate() {
        let reduced = p.reduced_instance(r).unwrap();
        let expected = binomial(p.n as u64, r as i64) * count_recurrence(&reduced);
        println!("  r={r}: {observed} members, C(n,r)*p(n-r,a+br-1,b) = {expected}");
        assert_eq!(parkfn::Count::from(*observed), expected);
    }
    Ok(())
}
