//! Acceptance suite: one test per shipping criterion, each printing a
//! `[PASS]`/`[FAIL]` line with its elapsed time.
//!
//! ```bash
//! cargo test -p parkfn --test acceptance -- --nocapture
//! ```

use std::collections::BTreeSet;
use std::time::Instant;

use parkfn::{
    bijection_decode, bijection_encode, binomial, count_brute, count_formula, count_recurrence,
    enumerate, is_parking, sample_uniform, verify_footnote_steps, verify_identity, BruteMethod,
    Count, MemoTable, Params, Word,
};

fn check(name: &str, body: impl FnOnce() -> Result<String, String>) {
    let started = Instant::now();
    match body() {
        Ok(detail) => {
            println!(
                "[PASS] {name}: {detail} ({:.2}s)",
                started.elapsed().as_secs_f64()
            );
        }
        Err(reason) => {
            println!(
                "[FAIL] {name}: {reason} ({:.2}s)",
                started.elapsed().as_secs_f64()
            );
            panic!("{name}: {reason}");
        }
    }
}

#[test]
fn criterion_1_theorem_reproduction() {
    check(
        "criterion 1, recurrence equals closed form on 0<=n<=20, 0<=a<=8, 0<=b<=6",
        || {
            let mut points = 0u64;
            for b in 0..=6u64 {
                let mut table = MemoTable::new(b);
                for n in 0..=20usize {
                    for a in 0..=8u64 {
                        let p = Params::new(n, a, b);
                        if table.count(n, a) != count_formula(&p) {
                            return Err(format!("mismatch at (n={n}, a={a}, b={b})"));
                        }
                        points += 1;
                    }
                }
            }
            Ok(format!("{points} grid points, exact big-integer equality"))
        },
    );
}

#[test]
fn criterion_2_oracle_triple_agreement() {
    check(
        "criterion 2, box = profiles = formula on the desk grid",
        || {
            let mut primary = 0u64;
            for n in 0..=5usize {
                for a in 0..=4u64 {
                    for b in 0..=3u64 {
                        let p = Params::new(n, a, b);
                        if p.box_bound() > 12 {
                            continue;
                        }
                        let by_box = count_brute(&p, BruteMethod::BoxScan);
                        let by_profiles = count_brute(&p, BruteMethod::Profiles);
                        let by_formula = count_formula(&p);
                        if by_box != by_profiles || by_box != by_formula {
                            return Err(format!(
                                "split at (n={n}, a={a}, b={b}): box={by_box}, profiles={by_profiles}, formula={by_formula}"
                            ));
                        }
                        primary += 1;
                    }
                }
            }
            let mut extended = 0u64;
            for n in 0..=8usize {
                for a in 0..=4u64 {
                    for b in 0..=3u64 {
                        let p = Params::new(n, a, b);
                        if p.box_bound() > 10 {
                            continue;
                        }
                        if count_brute(&p, BruteMethod::Profiles) != count_formula(&p) {
                            return Err(format!("profile split at (n={n}, a={a}, b={b})"));
                        }
                        extended += 1;
                    }
                }
            }
            Ok(format!(
                "{primary} triple-checked points, {extended} profile-only points"
            ))
        },
    );
}

#[test]
fn criterion_3_classic_sequence() {
    check("criterion 3, counts at (n,1,1) are (n+1)^(n-1)", || {
        let frozen: [u64; 7] = [1, 3, 16, 125, 1296, 16807, 262144];
        for n in 1..=7usize {
            // Recomputed as a power, not copied.
            let expected = Count::from(n as u64 + 1).pow(n as u32 - 1);
            if expected != Count::from(frozen[n - 1]) {
                return Err(format!("frozen value mismatch at n={n}"));
            }
            let p = Params::new(n, 1, 1);
            if count_formula(&p) != expected || count_recurrence(&p) != expected {
                return Err(format!("count mismatch at n={n}"));
            }
            if count_brute(&p, BruteMethod::Profiles) != expected {
                return Err(format!("profile oracle mismatch at n={n}"));
            }
            if n <= 6 && count_brute(&p, BruteMethod::BoxScan) != expected {
                return Err(format!("box oracle mismatch at n={n}"));
            }
        }
        Ok("n = 1..7, all counting paths".to_string())
    });
}

#[test]
fn criterion_4_identity_sweep() {
    check(
        "criterion 4, identity and all five derivation steps on 1<=n<=100, 0<=a<=20, 0<=b<=20",
        || {
            let mut points = 0u64;
            for n in 1..=100usize {
                for a in 0..=20u64 {
                    for b in 0..=20u64 {
                        let p = Params::new(n, a, b);
                        let identity = verify_identity(&p)
                            .map_err(|e| format!("identity error at ({n},{a},{b}): {e}"))?;
                        if !identity.verdict {
                            return Err(format!(
                                "identity failed at ({n},{a},{b}): lhs={} rhs={}",
                                identity.lhs, identity.rhs
                            ));
                        }
                        let steps = verify_footnote_steps(&p)
                            .map_err(|e| format!("derivation error at ({n},{a},{b}): {e}"))?;
                        if !steps.all_hold() {
                            let bad = steps
                                .steps
                                .iter()
                                .find(|s| !s.holds)
                                .map(|s| s.label)
                                .unwrap_or("?");
                            return Err(format!("step {bad} failed at ({n},{a},{b})"));
                        }
                        points += 1;
                    }
                }
            }
            Ok(format!("{points} grid points, 6 exact checks each"))
        },
    );
}

#[test]
fn criterion_5_bijection_soundness() {
    check(
        "criterion 5, roundtrip and set-theoretic recurrence on the desk grid",
        || {
            let mut words_checked = 0u64;
            for n in 0..=5usize {
                for a in 0..=4u64 {
                    for b in 0..=3u64 {
                        let p = Params::new(n, a, b);
                        if p.box_bound() > 12 {
                            continue;
                        }
                        let members: Vec<Word> = enumerate(&p).collect();
                        let mut strata: Vec<BTreeSet<(Vec<usize>, Vec<u64>)>> =
                            vec![BTreeSet::new(); n + 1];
                        for x in &members {
                            let parts = bijection_encode(x, &p)
                                .map_err(|e| format!("encode failed at ({n},{a},{b}): {e}"))?;
                            let back = bijection_decode(&parts, &p)
                                .map_err(|e| format!("decode failed at ({n},{a},{b}): {e}"))?;
                            if &back != x {
                                return Err(format!("roundtrip broke at ({n},{a},{b}) on ({x})"));
                            }
                            let r = parts.ones_positions().len();
                            match p.reduced_instance(r) {
                                Some(rp) => {
                                    if is_parking(parts.reduced(), &rp) != Ok(true) {
                                        return Err(format!(
                                            "reduced word of ({x}) not in P({},{},{})",
                                            rp.n, rp.a, rp.b
                                        ));
                                    }
                                }
                                None => {
                                    if !(p.n == 0 && parts.reduced().is_empty()) {
                                        return Err(format!(
                                            "unexpected unreducible word at ({n},{a},{b})"
                                        ));
                                    }
                                }
                            }
                            strata[r].insert((
                                parts.ones_positions().positions().to_vec(),
                                parts.reduced().entries().to_vec(),
                            ));
                            words_checked += 1;
                        }
                        // Image sizes per stratum match C(n,r) * p(n-r, a+br-1, b),
                        // and encode is injective stratum by stratum.
                        let mut total = 0u64;
                        for (r, stratum) in strata.iter().enumerate() {
                            let with_r_ones =
                                members.iter().filter(|x| x.ones_count() == r).count();
                            if stratum.len() != with_r_ones {
                                return Err(format!(
                                    "encode not injective at ({n},{a},{b}), r={r}"
                                ));
                            }
                            // The product form C(n,r) * p(n-r, a+br-1, b) is the
                            // recurrence's bijection statement; at a = 0 with
                            // n >= 1 the initial condition p(n,0,b) = 0 applies
                            // instead and every stratum is empty.
                            let expected = if p.n >= 1 && p.a == 0 {
                                Count::from(0u32)
                            } else {
                                match p.reduced_instance(r) {
                                    Some(rp) => {
                                        binomial(n as u64, r as i64) * count_recurrence(&rp)
                                    }
                                    None if p.n == 0 && r == 0 => Count::from(1u32),
                                    None => Count::from(0u32),
                                }
                            };
                            if Count::from(stratum.len() as u64) != expected {
                                return Err(format!(
                                    "stratum size at ({n},{a},{b}), r={r}: got {}, expected {expected}",
                                    stratum.len()
                                ));
                            }
                            total += stratum.len() as u64;
                        }
                        if total != members.len() as u64 {
                            return Err(format!("strata do not partition P at ({n},{a},{b})"));
                        }
                    }
                }
            }
            Ok(format!("{words_checked} member words round-tripped"))
        },
    );
}

#[test]
fn criterion_6_degenerate_families() {
    check(
        "criterion 6, b=0 box case, a=0 empties, n=0 singleton",
        || {
            for n in 1..=10usize {
                for a in 0..=5u64 {
                    let p = Params::new(n, a, 0);
                    let expected = Count::from(a).pow(n as u32);
                    if count_formula(&p) != expected || count_recurrence(&p) != expected {
                        return Err(format!("a^n failed at (n={n}, a={a})"));
                    }
                }
            }
            for n in 1..=10usize {
                for b in 0..=5u64 {
                    let p = Params::new(n, 0, b);
                    if count_formula(&p) != Count::from(0u32)
                        || count_recurrence(&p) != Count::from(0u32)
                    {
                        return Err(format!("a=0 count not zero at (n={n}, b={b})"));
                    }
                }
            }
            for a in 0..=8u64 {
                for b in 0..=8u64 {
                    let p = Params::new(0, a, b);
                    if count_formula(&p) != Count::from(1u32)
                        || count_recurrence(&p) != Count::from(1u32)
                    {
                        return Err(format!("n=0 count not one at (a={a}, b={b})"));
                    }
                }
            }
            Ok("a^n, 0, and 1 families exact for formula and recurrence".to_string())
        },
    );
}

#[test]
fn criterion_7_sampler_correctness() {
    check(
        "criterion 7, 10000 seeded draws at (2,1,2) hit all 5 members in [1800,2200]",
        || {
            let p = Params::new(2, 1, 2);
            let members: Vec<Word> = enumerate(&p).collect();
            if members.len() != 5 {
                return Err(format!("expected 5 members, found {}", members.len()));
            }
            let mut freq = vec![0u64; members.len()];
            for seed in 0..10_000u64 {
                let draw = sample_uniform(&p, seed).map_err(|e| format!("draw failed: {e}"))?;
                if is_parking(&draw, &p) != Ok(true) {
                    return Err(format!("non-member draw ({draw}) at seed {seed}"));
                }
                let idx = members
                    .iter()
                    .position(|m| m == &draw)
                    .ok_or_else(|| format!("draw ({draw}) is not an enumerated member"))?;
                freq[idx] += 1;
            }
            for (idx, &count) in freq.iter().enumerate() {
                if !(1800..=2200).contains(&count) {
                    return Err(format!(
                        "frequency of ({}) is {count}, outside [1800, 2200]",
                        members[idx]
                    ));
                }
            }
            let detail: Vec<String> = members
                .iter()
                .zip(&freq)
                .map(|(m, f)| format!("({m})x{f}"))
                .collect();
            Ok(detail.join(" "))
        },
    );
}

/// One golden CLI invocation: fixed arguments, byte-expected stdout, and an
/// expected exit code.
struct GoldenCase {
    name: &'static str,
    args: &'static [&'static str],
    expected_exit: i32,
    expected_stdout: &'static [u8],
}

const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "count --method all at the classic instance",
        args: &["count", "-n", "3", "-a", "1", "-b", "1", "--method", "all"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/count_all_3_1_1.txt"),
    },
    GoldenCase {
        name: "count at n=0",
        args: &["count", "-n", "0", "-a", "9", "-b", "9"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/count_formula_0_9_9.txt"),
    },
    GoldenCase {
        name: "count --method brute",
        args: &[
            "count", "-n", "2", "-a", "2", "-b", "3", "--method", "brute",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/count_brute_2_2_3.txt"),
    },
    GoldenCase {
        name: "enumerate the five members",
        args: &["enumerate", "-n", "2", "-a", "1", "-b", "2"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/enumerate_2_1_2.txt"),
    },
    GoldenCase {
        name: "enumerate an empty set",
        args: &["enumerate", "-n", "1", "-a", "0", "-b", "5"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/enumerate_1_0_5.txt"),
    },
    GoldenCase {
        name: "enumerate the empty word",
        args: &["enumerate", "-n", "0", "-a", "1", "-b", "1"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/enumerate_0_1_1.txt"),
    },
    GoldenCase {
        name: "check a classic member",
        args: &["check", "-n", "3", "-a", "1", "-b", "1", "--word", "3,1,2"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/check_3_1_2.txt"),
    },
    GoldenCase {
        name: "check a non-member",
        args: &["check", "-n", "3", "-a", "1", "-b", "1", "--word", "2,2,2"],
        expected_exit: 1,
        expected_stdout: include_bytes!("golden/check_2_2_2.txt"),
    },
    GoldenCase {
        name: "check a generalized member",
        args: &["check", "-n", "2", "-a", "1", "-b", "2", "--word", "1,3"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/check_1_3.txt"),
    },
    GoldenCase {
        name: "bijection encode",
        args: &[
            "bijection",
            "-n",
            "4",
            "-a",
            "1",
            "-b",
            "1",
            "--word",
            "1,3,1,2",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/bijection_encode.txt"),
    },
    GoldenCase {
        name: "bijection decode",
        args: &[
            "bijection",
            "-n",
            "2",
            "-a",
            "2",
            "-b",
            "1",
            "--positions",
            "",
            "--reduced",
            "1,2",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/bijection_decode.txt"),
    },
    GoldenCase {
        name: "bijection roundtrip",
        args: &[
            "bijection",
            "-n",
            "2",
            "-a",
            "1",
            "-b",
            "1",
            "--word",
            "1,1",
            "--roundtrip",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/bijection_roundtrip.txt"),
    },
    GoldenCase {
        name: "verify footnote at the worked instance",
        args: &[
            "verify", "--what", "footnote", "-n", "2", "-a", "2", "-b", "3",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/verify_footnote_2_2_3.txt"),
    },
    GoldenCase {
        name: "table of classic counts",
        args: &[
            "table", "-n", "1..4", "-a", "1", "-b", "1", "--format", "csv",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/table_classic.csv"),
    },
    GoldenCase {
        name: "table across first thresholds",
        args: &["table", "-n", "2", "-a", "0..2", "-b", "3"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/table_first_thresholds.csv"),
    },
    GoldenCase {
        name: "table at n=0",
        args: &["table", "-n", "0", "-a", "5", "-b", "0..2"],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/table_empty_length.csv"),
    },
    GoldenCase {
        name: "count jsonl rendering",
        args: &[
            "count", "-n", "3", "-a", "1", "-b", "1", "--method", "all", "--format", "jsonl",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/count_all_3_1_1.jsonl"),
    },
    GoldenCase {
        name: "identity jsonl rendering",
        args: &[
            "verify", "--what", "identity", "-n", "1..2", "-a", "0..1", "-b", "0..1", "--format",
            "jsonl",
        ],
        expected_exit: 0,
        expected_stdout: include_bytes!("golden/verify_identity_small.jsonl"),
    },
];

#[test]
fn criterion_8_cli_determinism() {
    check("criterion 8, golden-file byte equality for the CLI", || {
        for case in GOLDEN_CASES {
            let output = std::process::Command::new(env!("CARGO_BIN_EXE_parkfn"))
                .args(case.args)
                .output()
                .map_err(|e| format!("{}: failed to launch binary: {e}", case.name))?;
            let exit = output.status.code().unwrap_or(-1);
            if exit != case.expected_exit {
                return Err(format!(
                    "{}: exit {exit}, expected {}",
                    case.name, case.expected_exit
                ));
            }
            if output.stdout != case.expected_stdout {
                return Err(format!(
                    "{}: stdout diverged from golden file\n--- got ---\n{}\n--- want ---\n{}",
                    case.name,
                    String::from_utf8_lossy(&output.stdout),
                    String::from_utf8_lossy(case.expected_stdout)
                ));
            }
            // Determinism: a second run produces identical bytes.
            let again = std::process::Command::new(env!("CARGO_BIN_EXE_parkfn"))
                .args(case.args)
                .output()
                .map_err(|e| format!("{}: failed to relaunch binary: {e}", case.name))?;
            if again.stdout != output.stdout {
                return Err(format!("{}: output varies between runs", case.name));
            }
        }
        Ok(format!(
            "{} golden invocations, byte-exact twice",
            GOLDEN_CASES.len()
        ))
    });
}
