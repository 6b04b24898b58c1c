//! Command-line interface.
//!
//! Seven subcommands over the library: `count`, `enumerate`, `check`,
//! `bijection`, `verify`, `table`, and `sample`. Data records go to stdout,
//! diagnostics to stderr; output is byte-deterministic for fixed inputs.
//! Exit codes: 0 on success or a verified sweep, 1 on a domain or
//! verification failure, 2 on usage errors.

mod records;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bijection::{bijection_decode, bijection_encode, BijectionParts, PositionSet};
use crate::counting::{count_formula, count_recurrence, MemoTable};
use crate::enumerate::{count_brute, enumerate, sample_uniform, BruteMethod};
use crate::error::Error;
use crate::identity::{verify_footnote_steps, verify_identity, Comparison};
use crate::params::Params;
use crate::word::{is_parking, Word};

use records::{
    emit, BijectionRecord, CheckRecord, CountRecord, DiagnosticRecord, IdentityRecord, Rendering,
    StepRecord, SummaryRecord, TableRecord, TheoremRecord, WordRecord,
};

#[derive(Parser)]
#[command(
    name = "parkfn",
    version,
    about = "Exact (a,b)-parking function toolkit: count, enumerate, check, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count P(n,a,b) by the closed form, the recurrence, brute force, or all three
    Count(CountArgs),
    /// Stream the members of P(n,a,b) in lexicographic order
    Enumerate(EnumerateArgs),
    /// Test one word for membership
    Check(CheckArgs),
    /// Encode, decode, or roundtrip the one-deletion bijection
    Bijection(BijectionArgs),
    /// Sweep a parameter grid and verify the identity, the derivation steps, or the theorem
    Verify(VerifyArgs),
    /// Emit a table of counts over a parameter grid
    Table(TableArgs),
    /// Draw uniform random members with a seeded generator
    Sample(SampleArgs),
}

/// The instance triple shared by the single-instance subcommands.
#[derive(Args)]
struct InstanceArgs {
    /// Word length n
    #[arg(short = 'n', long = "length", value_name = "N")]
    n: usize,
    /// First threshold a
    #[arg(short = 'a', long = "first", value_name = "A")]
    a: u64,
    /// Threshold increment b
    #[arg(short = 'b', long = "increment", value_name = "B")]
    b: u64,
}

impl InstanceArgs {
    fn params(&self) -> Params {
        Params::new(self.n, self.a, self.b)
    }
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Counting method
    #[arg(long, value_enum, default_value_t = CountMethod::Formula)]
    method: CountMethod,
    /// Output format
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Formula,
    Recurrence,
    Brute,
    All,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Stop after this many words
    #[arg(long, value_name = "COUNT")]
    limit: Option<usize>,
    /// Output format
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Comma-separated entries; the empty string is the empty word
    #[arg(long, value_name = "ENTRIES")]
    word: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
}

#[derive(Args)]
struct BijectionArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Word to encode (comma-separated entries)
    #[arg(long, value_name = "ENTRIES")]
    word: Option<String>,
    /// Positions of the 1s, for decoding (comma-separated, increasing)
    #[arg(
        long,
        value_name = "POSITIONS",
        requires = "reduced",
        conflicts_with = "word"
    )]
    positions: Option<String>,
    /// Reduced word, for decoding (comma-separated entries)
    #[arg(
        long,
        value_name = "ENTRIES",
        requires = "positions",
        conflicts_with = "word"
    )]
    reduced: Option<String>,
    /// Encode, decode back, and assert the roundtrip is the identity
    #[arg(long, requires = "word")]
    roundtrip: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// What to verify across the grid
    #[arg(long, value_enum, value_name = "CHECK")]
    what: VerifyWhat,
    /// Length range (N or LO..HI, inclusive)
    #[arg(short = 'n', long = "length", value_name = "LO..HI", value_parser = parse_span)]
    n: Span,
    /// First-threshold range
    #[arg(short = 'a', long = "first", value_name = "LO..HI", value_parser = parse_span)]
    a: Span,
    /// Increment range
    #[arg(short = 'b', long = "increment", value_name = "LO..HI", value_parser = parse_span)]
    b: Span,
    /// Print only failing records
    #[arg(long)]
    quiet: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyWhat {
    /// Closed-form identity, term by term
    Identity,
    /// The five derivation steps behind the identity
    Footnote,
    /// Recurrence equals closed form
    Theorem,
}

#[derive(Args)]
struct TableArgs {
    /// Length range (N or LO..HI, inclusive)
    #[arg(short = 'n', long = "length", value_name = "LO..HI", value_parser = parse_span)]
    n: Span,
    /// First-threshold range
    #[arg(short = 'a', long = "first", value_name = "LO..HI", value_parser = parse_span)]
    a: Span,
    /// Increment range
    #[arg(short = 'b', long = "increment", value_name = "LO..HI", value_parser = parse_span)]
    b: Span,
    /// Output format
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Seed of the first draw; draw i uses seed + i
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of draws
    #[arg(long, default_value_t = 1, value_name = "COUNT")]
    limit: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
    format: StreamFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    Text,
    Jsonl,
}

impl StreamFormat {
    fn rendering(self) -> Rendering {
        match self {
            StreamFormat::Text => Rendering::Text,
            StreamFormat::Jsonl => Rendering::Jsonl,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Jsonl,
}

/// An inclusive integer range, written `LO..HI` or as a single value.
#[derive(Debug, Clone, Copy)]
struct Span {
    lo: u64,
    hi: u64,
}

impl Span {
    fn iter(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

fn parse_span(s: &str) -> Result<Span, String> {
    let (lo, hi) = match s.split_once("..") {
        Some(parts) => parts,
        None => (s, s),
    };
    let parse = |tok: &str| {
        tok.parse::<u64>()
            .map_err(|_| format!("expected a non-negative integer or LO..HI, got {s:?}"))
    };
    let span = Span {
        lo: parse(lo)?,
        hi: parse(hi)?,
    };
    if span.lo > span.hi {
        return Err(format!(
            "empty range {s:?}: lower bound exceeds upper bound"
        ));
    }
    Ok(span)
}

/// A failed run, with the exit code it maps to.
enum Failure {
    /// Bad arguments beyond what clap can see. Exit 2.
    Usage(String),
    /// A domain error; rendered as a diagnostic record on stderr. Exit 1.
    Domain {
        params: Params,
        message: String,
        rendering: Rendering,
    },
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<u8, Failure>;

fn domain_failure(params: &Params, error: &Error, rendering: Rendering) -> Failure {
    Failure::Domain {
        params: *params,
        message: error.to_string(),
        rendering,
    }
}

/// Entry point for the `parkfn` binary.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = dispatch(cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Domain {
            params,
            message,
            rendering,
        }) => {
            let record = DiagnosticRecord::new(&params, message);
            let stderr = io::stderr();
            let _ = emit(&mut stderr.lock(), rendering, &record);
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> CmdResult {
    match cli.command {
        Command::Count(args) => cmd_count(args, out),
        Command::Enumerate(args) => cmd_enumerate(args, out),
        Command::Check(args) => cmd_check(args, out),
        Command::Bijection(args) => cmd_bijection(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Table(args) => cmd_table(args, out),
        Command::Sample(args) => cmd_sample(args, out),
    }
}

fn cmd_count<W: Write>(args: CountArgs, out: &mut W) -> CmdResult {
    let params = args.instance.params();
    let rendering = args.format.rendering();
    let methods: &[CountMethod] = match args.method {
        CountMethod::All => &[
            CountMethod::Formula,
            CountMethod::Recurrence,
            CountMethod::Brute,
        ],
        ref single => std::slice::from_ref(single),
    };
    let mut counts = Vec::with_capacity(methods.len());
    for method in methods {
        let (name, value) = match method {
            CountMethod::Formula => ("formula", count_formula(&params)),
            CountMethod::Recurrence => ("recurrence", count_recurrence(&params)),
            CountMethod::Brute => ("brute", count_brute(&params, BruteMethod::BoxScan)),
            CountMethod::All => unreachable!("expanded above"),
        };
        emit(
            out,
            rendering,
            &CountRecord::new(&params, name, value.to_string()),
        )?;
        counts.push(value);
    }
    let agree = counts.windows(2).all(|w| w[0] == w[1]);
    Ok(if agree { 0 } else { 1 })
}

fn cmd_enumerate<W: Write>(args: EnumerateArgs, out: &mut W) -> CmdResult {
    let params = args.instance.params();
    let rendering = args.format.rendering();
    let limit = args.limit.unwrap_or(usize::MAX);
    let mut total: u64 = 0;
    for word in enumerate(&params).take(limit) {
        emit(
            out,
            rendering,
            &WordRecord::new(&params, None, word.to_string()),
        )?;
        total += 1;
    }
    emit(out, rendering, &SummaryRecord::new(&params, total))?;
    Ok(0)
}

fn cmd_check<W: Write>(args: CheckArgs, out: &mut W) -> CmdResult {
    let params = args.instance.params();
    let rendering = args.format.rendering();
    // Parse failures and length mismatches are usage errors for `check`.
    let word: Word = args
        .word
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("--word: {e}")))?;
    let parking = is_parking(&word, &params).map_err(|e| Failure::Usage(format!("--word: {e}")))?;
    emit(
        out,
        rendering,
        &CheckRecord::new(&params, word.to_string(), parking),
    )?;
    Ok(if parking { 0 } else { 1 })
}

fn cmd_bijection<W: Write>(args: BijectionArgs, out: &mut W) -> CmdResult {
    let params = args.instance.params();
    let rendering = args.format.rendering();
    match (&args.word, &args.positions, &args.reduced) {
        (Some(word), None, None) => {
            let word: Word = word
                .parse()
                .map_err(|e: Error| Failure::Usage(format!("--word: {e}")))?;
            let parts = bijection_encode(&word, &params)
                .map_err(|e| domain_failure(&params, &e, rendering))?;
            let reduced_params = params.reduced_instance(parts.ones_positions().len());
            let direction = if args.roundtrip {
                "roundtrip"
            } else {
                "encode"
            };
            let mut roundtrip_ok = false;
            if args.roundtrip {
                let back = bijection_decode(&parts, &params)
                    .map_err(|e| domain_failure(&params, &e, rendering))?;
                if back != word {
                    return Err(Failure::Domain {
                        params,
                        message: "roundtrip mismatch: decode(encode(x)) != x".to_string(),
                        rendering,
                    });
                }
                roundtrip_ok = true;
            }
            emit(
                out,
                rendering,
                &BijectionRecord::new(
                    &params,
                    direction,
                    word.to_string(),
                    parts.ones_positions().to_string(),
                    parts.reduced().to_string(),
                    reduced_params,
                    roundtrip_ok,
                ),
            )?;
            Ok(0)
        }
        (None, Some(positions), Some(reduced)) => {
            let positions: PositionSet = positions
                .parse()
                .map_err(|e: Error| Failure::Usage(format!("--positions: {e}")))?;
            let reduced: Word = reduced
                .parse()
                .map_err(|e: Error| Failure::Usage(format!("--reduced: {e}")))?;
            let parts = BijectionParts::new(positions, reduced);
            let word = bijection_decode(&parts, &params)
                .map_err(|e| domain_failure(&params, &e, rendering))?;
            emit(
                out,
                rendering,
                &BijectionRecord::new(
                    &params,
                    "decode",
                    word.to_string(),
                    parts.ones_positions().to_string(),
                    parts.reduced().to_string(),
                    None,
                    false,
                ),
            )?;
            Ok(0)
        }
        _ => Err(Failure::Usage(
            "pass --word to encode, or --positions with --reduced to decode".to_string(),
        )),
    }
}

fn cmd_verify<W: Write>(args: VerifyArgs, out: &mut W) -> CmdResult {
    let rendering = args.format.rendering();
    if matches!(args.what, VerifyWhat::Identity | VerifyWhat::Footnote) && args.n.lo == 0 {
        return Err(Failure::Usage(
            "identity and footnote checks are defined for n >= 1; use -n 1 or higher".to_string(),
        ));
    }
    let mut all_pass = true;
    // Memo tables for the theorem sweep, one per increment.
    let mut tables: std::collections::HashMap<u64, MemoTable> = std::collections::HashMap::new();

    for n in args.n.iter() {
        for a in args.a.iter() {
            for b in args.b.iter() {
                let params = Params::new(n as usize, a, b);
                match args.what {
                    VerifyWhat::Identity => {
                        let report = verify_identity(&params)
                            .map_err(|e| domain_failure(&params, &e, rendering))?;
                        all_pass &= report.verdict;
                        let record = IdentityRecord::new(
                            &params,
                            report.lhs.to_string(),
                            report.rhs.to_string(),
                            report.verdict,
                        );
                        if !args.quiet || !record.verdict() {
                            emit(out, rendering, &record)?;
                        }
                    }
                    VerifyWhat::Footnote => {
                        let report = verify_footnote_steps(&params)
                            .map_err(|e| domain_failure(&params, &e, rendering))?;
                        for (i, step) in report.steps.iter().enumerate() {
                            all_pass &= step.holds;
                            let (lhs, rhs) = render_sides(&step.comparisons);
                            let record =
                                StepRecord::new(&params, i + 1, step.label, lhs, rhs, step.holds);
                            if !args.quiet || !record.verdict() {
                                emit(out, rendering, &record)?;
                            }
                        }
                    }
                    VerifyWhat::Theorem => {
                        let table = tables.entry(b).or_insert_with(|| MemoTable::new(b));
                        let by_recurrence = table.count(params.n, params.a);
                        let by_formula = count_formula(&params);
                        let verdict = by_recurrence == by_formula;
                        all_pass &= verdict;
                        let record = TheoremRecord::new(
                            &params,
                            by_recurrence.to_string(),
                            by_formula.to_string(),
                            verdict,
                        );
                        if !args.quiet || !record.verdict() {
                            emit(out, rendering, &record)?;
                        }
                    }
                }
            }
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

/// Renders the two sides of a derivation step: a bare value for
/// single-equation steps, a bracketed list for the per-r families.
fn render_sides(comparisons: &[Comparison]) -> (String, String) {
    if comparisons.len() == 1 && comparisons[0].index.is_none() {
        return (
            comparisons[0].lhs.to_string(),
            comparisons[0].rhs.to_string(),
        );
    }
    let mut lhs = String::from("[");
    let mut rhs = String::from("[");
    for (i, c) in comparisons.iter().enumerate() {
        if i > 0 {
            lhs.push(',');
            rhs.push(',');
        }
        let _ = write!(lhs, "{}", c.lhs);
        let _ = write!(rhs, "{}", c.rhs);
    }
    lhs.push(']');
    rhs.push(']');
    (lhs, rhs)
}

fn cmd_table<W: Write>(args: TableArgs, out: &mut W) -> CmdResult {
    let rendering = match args.format {
        TableFormat::Csv => Rendering::Csv,
        TableFormat::Jsonl => Rendering::Jsonl,
    };
    if rendering == Rendering::Csv {
        writeln!(out, "{}", TableRecord::CSV_HEADER)?;
    }
    for n in args.n.iter() {
        for a in args.a.iter() {
            for b in args.b.iter() {
                let params = Params::new(n as usize, a, b);
                let count = count_formula(&params);
                emit(
                    out,
                    rendering,
                    &TableRecord::new(&params, count.to_string()),
                )?;
            }
        }
    }
    Ok(0)
}

fn cmd_sample<W: Write>(args: SampleArgs, out: &mut W) -> CmdResult {
    let params = args.instance.params();
    let rendering = args.format.rendering();
    for i in 0..args.limit {
        let seed = args.seed.checked_add(i).ok_or_else(|| {
            Failure::Usage("seed range overflows; lower --seed or --limit".to_string())
        })?;
        let word =
            sample_uniform(&params, seed).map_err(|e| domain_failure(&params, &e, rendering))?;
        emit(
            out,
            rendering,
            &WordRecord::new(&params, Some(seed), word.to_string()),
        )?;
    }
    Ok(0)
}
