//! Line-oriented output records.
//!
//! Every record is self-describing (it carries its instance parameters) and
//! renders byte-deterministically: fixed field order, no timestamps, and
//! counts printed as full decimal strings so no magnitude ever loses
//! precision.

use std::io::{self, Write};

use serde::Serialize;

use crate::params::Params;

/// How records are rendered on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rendering {
    Text,
    Jsonl,
    Csv,
}

pub(crate) trait Record: Serialize {
    fn text_line(&self) -> String;

    /// CSV rendering; only table rows define one.
    fn csv_line(&self) -> Option<String> {
        None
    }
}

pub(crate) fn emit<W: Write, R: Record>(
    out: &mut W,
    rendering: Rendering,
    record: &R,
) -> io::Result<()> {
    match rendering {
        Rendering::Text => writeln!(out, "{}", record.text_line()),
        Rendering::Jsonl => {
            let line = serde_json::to_string(record).expect("record serialization is infallible");
            writeln!(out, "{line}")
        }
        Rendering::Csv => {
            let line = record.csv_line().expect("record kind has no CSV form");
            writeln!(out, "{line}")
        }
    }
}

#[derive(Serialize)]
pub(crate) struct CountRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    method: &'static str,
    count: String,
}

impl CountRecord {
    pub fn new(params: &Params, method: &'static str, count: String) -> Self {
        CountRecord {
            kind: "count",
            n: params.n,
            a: params.a,
            b: params.b,
            method,
            count,
        }
    }
}

impl Record for CountRecord {
    fn text_line(&self) -> String {
        format!(
            "count n={} a={} b={} method={} count={}",
            self.n, self.a, self.b, self.method, self.count
        )
    }
}

#[derive(Serialize)]
pub(crate) struct WordRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    length: usize,
    entries: String,
}

impl WordRecord {
    pub fn new(params: &Params, seed: Option<u64>, entries: String) -> Self {
        WordRecord {
            kind: "word",
            n: params.n,
            a: params.a,
            b: params.b,
            seed,
            length: params.n,
            entries,
        }
    }
}

impl Record for WordRecord {
    fn text_line(&self) -> String {
        let seed = match self.seed {
            Some(s) => format!(" seed={s}"),
            None => String::new(),
        };
        format!(
            "word n={} a={} b={}{} length={} entries={}",
            self.n, self.a, self.b, seed, self.length, self.entries
        )
    }
}

#[derive(Serialize)]
pub(crate) struct SummaryRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    total: u64,
}

impl SummaryRecord {
    pub fn new(params: &Params, total: u64) -> Self {
        SummaryRecord {
            kind: "summary",
            n: params.n,
            a: params.a,
            b: params.b,
            total,
        }
    }
}

impl Record for SummaryRecord {
    fn text_line(&self) -> String {
        format!(
            "summary n={} a={} b={} total={}",
            self.n, self.a, self.b, self.total
        )
    }
}

#[derive(Serialize)]
pub(crate) struct CheckRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    word: String,
    parking: bool,
}

impl CheckRecord {
    pub fn new(params: &Params, word: String, parking: bool) -> Self {
        CheckRecord {
            kind: "check",
            n: params.n,
            a: params.a,
            b: params.b,
            word,
            parking,
        }
    }
}

impl Record for CheckRecord {
    fn text_line(&self) -> String {
        format!(
            "check n={} a={} b={} word={} parking={}",
            self.n, self.a, self.b, self.word, self.parking
        )
    }
}

#[derive(Serialize)]
pub(crate) struct BijectionRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    direction: &'static str,
    word: String,
    positions: String,
    reduced: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roundtrip: Option<&'static str>,
}

impl BijectionRecord {
    pub fn new(
        params: &Params,
        direction: &'static str,
        word: String,
        positions: String,
        reduced: String,
        reduced_params: Option<Params>,
        roundtrip_ok: bool,
    ) -> Self {
        BijectionRecord {
            kind: "bijection",
            n: params.n,
            a: params.a,
            b: params.b,
            direction,
            word,
            positions,
            reduced,
            reduced_n: reduced_params.map(|p| p.n),
            reduced_a: reduced_params.map(|p| p.a),
            reduced_b: reduced_params.map(|p| p.b),
            roundtrip: roundtrip_ok.then_some("ok"),
        }
    }
}

impl Record for BijectionRecord {
    fn text_line(&self) -> String {
        let mut line = format!(
            "bijection n={} a={} b={} direction={} word={} positions={} reduced={}",
            self.n, self.a, self.b, self.direction, self.word, self.positions, self.reduced
        );
        if let (Some(rn), Some(ra), Some(rb)) = (self.reduced_n, self.reduced_a, self.reduced_b) {
            line.push_str(&format!(" reduced_n={rn} reduced_a={ra} reduced_b={rb}"));
        }
        if let Some(rt) = self.roundtrip {
            line.push_str(&format!(" roundtrip={rt}"));
        }
        line
    }
}

#[derive(Serialize)]
pub(crate) struct IdentityRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    lhs: String,
    rhs: String,
    verdict: bool,
}

impl IdentityRecord {
    pub fn new(params: &Params, lhs: String, rhs: String, verdict: bool) -> Self {
        IdentityRecord {
            kind: "identity",
            n: params.n,
            a: params.a,
            b: params.b,
            lhs,
            rhs,
            verdict,
        }
    }

    pub fn verdict(&self) -> bool {
        self.verdict
    }
}

impl Record for IdentityRecord {
    fn text_line(&self) -> String {
        format!(
            "identity n={} a={} b={} lhs={} rhs={} verdict={}",
            self.n, self.a, self.b, self.lhs, self.rhs, self.verdict
        )
    }
}

#[derive(Serialize)]
pub(crate) struct TheoremRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    recurrence: String,
    formula: String,
    verdict: bool,
}

impl TheoremRecord {
    pub fn new(params: &Params, recurrence: String, formula: String, verdict: bool) -> Self {
        TheoremRecord {
            kind: "theorem",
            n: params.n,
            a: params.a,
            b: params.b,
            recurrence,
            formula,
            verdict,
        }
    }

    pub fn verdict(&self) -> bool {
        self.verdict
    }
}

impl Record for TheoremRecord {
    fn text_line(&self) -> String {
        format!(
            "theorem n={} a={} b={} recurrence={} formula={} verdict={}",
            self.n, self.a, self.b, self.recurrence, self.formula, self.verdict
        )
    }
}

#[derive(Serialize)]
pub(crate) struct StepRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    index: usize,
    label: &'static str,
    lhs: String,
    rhs: String,
    verdict: bool,
}

impl StepRecord {
    pub fn new(
        params: &Params,
        index: usize,
        label: &'static str,
        lhs: String,
        rhs: String,
        verdict: bool,
    ) -> Self {
        StepRecord {
            kind: "step",
            n: params.n,
            a: params.a,
            b: params.b,
            index,
            label,
            lhs,
            rhs,
            verdict,
        }
    }

    pub fn verdict(&self) -> bool {
        self.verdict
    }
}

impl Record for StepRecord {
    fn text_line(&self) -> String {
        format!(
            "step n={} a={} b={} index={} label={} lhs={} rhs={} verdict={}",
            self.n, self.a, self.b, self.index, self.label, self.lhs, self.rhs, self.verdict
        )
    }
}

#[derive(Serialize)]
pub(crate) struct TableRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    count: String,
}

impl TableRecord {
    pub const CSV_HEADER: &'static str = "n,a,b,count";

    pub fn new(params: &Params, count: String) -> Self {
        TableRecord {
            kind: "table-row",
            n: params.n,
            a: params.a,
            b: params.b,
            count,
        }
    }
}

impl Record for TableRecord {
    fn text_line(&self) -> String {
        format!(
            "table-row n={} a={} b={} count={}",
            self.n, self.a, self.b, self.count
        )
    }

    fn csv_line(&self) -> Option<String> {
        Some(format!("{},{},{},{}", self.n, self.a, self.b, self.count))
    }
}

#[derive(Serialize)]
pub(crate) struct DiagnosticRecord {
    kind: &'static str,
    n: usize,
    a: u64,
    b: u64,
    error: String,
}

impl DiagnosticRecord {
    pub fn new(params: &Params, error: String) -> Self {
        DiagnosticRecord {
            kind: "diagnostic",
            n: params.n,
            a: params.a,
            b: params.b,
            error,
        }
    }
}

impl Record for DiagnosticRecord {
    fn text_line(&self) -> String {
        format!(
            "diagnostic n={} a={} b={} error={}",
            self.n, self.a, self.b, self.error
        )
    }
}
