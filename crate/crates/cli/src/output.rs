//! Text and JSON-lines rendering of verification reports.

use std::fmt::Write as _;

use hyperlift_core::report::{Mismatch, Mode, VerificationReport};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::suite::Entry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

struct ParamMap<'a>(&'a [(String, String)]);

impl Serialize for ParamMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct MismatchJson<'a> {
    index: usize,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    identity: &'a str,
    k: Option<u32>,
    params: ParamMap<'a>,
    order: Option<usize>,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    precision_bits: Option<u32>,
    pass: bool,
    first_mismatch: Option<MismatchJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_abs_diff: Option<String>,
    seed: Option<u64>,
    elapsed_ms: Option<u64>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    big_n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<&'a str>,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    identity: &'a str,
    pass: bool,
    error: String,
    seed: Option<u64>,
}

fn mismatch_json(m: &Mismatch) -> MismatchJson<'_> {
    MismatchJson { index: m.index, lhs: &m.lhs, rhs: &m.rhs }
}

pub fn report_json(r: &VerificationReport) -> String {
    let j = ReportJson {
        identity: &r.identity,
        k: r.k,
        params: ParamMap(&r.params),
        order: r.order,
        mode: r.mode.name(),
        precision_bits: match r.mode {
            Mode::Numeric(b) => Some(b),
            Mode::Exact => None,
        },
        pass: r.pass,
        first_mismatch: r.first_mismatch.as_ref().map(mismatch_json),
        max_abs_diff: r.max_abs_diff.as_ref().map(|d| d.to_sci(6)),
        seed: r.seed,
        elapsed_ms: r.elapsed_ms,
        big_n: r.big_n,
        m: r.m,
        variant: r.variant.as_deref(),
    };
    serde_json::to_string(&j).expect("report serialization")
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    s.push_str(if r.pass { "PASS " } else { "FAIL " });
    s.push_str(&r.identity);
    if let Some(v) = &r.variant {
        let _ = write!(s, " ({v})");
    }
    if let Some(k) = r.k {
        let _ = write!(s, " k={k}");
    }
    if let Some(n) = r.big_n {
        let _ = write!(s, " N={n}");
    }
    if let Some(m) = r.m {
        let _ = write!(s, " m={m}");
    }
    for (name, v) in &r.params {
        let _ = write!(s, " {name}={v}");
    }
    if let Some(o) = r.order {
        let _ = write!(s, " order={o}");
    }
    match r.mode {
        Mode::Exact => s.push_str(" [exact]"),
        Mode::Numeric(b) => {
            let _ = write!(s, " [numeric {b} bits]");
        }
    }
    if let Some(d) = &r.max_abs_diff {
        let _ = write!(s, " max|diff|={}", d.to_sci(3));
    }
    if let Some(seed) = r.seed {
        let _ = write!(s, " seed={seed}");
    }
    if let Some(m) = &r.first_mismatch {
        let _ = write!(s, "\n  first mismatch at index {}: lhs = {}, rhs = {}", m.index, m.lhs, m.rhs);
    }
    s
}

fn entry_line(e: &Entry, format: Format) -> String {
    match (e, format) {
        (Ok(r), Format::Json) => report_json(r),
        (Ok(r), Format::Text) => report_text(r),
        (Err(c), Format::Json) => serde_json::to_string(&ErrorJson {
            identity: &c.label,
            pass: false,
            error: c.error.to_string(),
            seed: c.seed,
        })
        .expect("report serialization"),
        (Err(c), Format::Text) => format!("ERROR {}: {}", c.label, c.error),
    }
}

/// One line (text: one block) per entry; empty input gives empty output.
pub fn emit_report(entries: &[Entry], format: Format) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&entry_line(e, format));
        out.push('\n');
    }
    out
}

/// Exit status for a batch: 3 on any internal-consistency error, else 1 on
/// any failure, else 0.
pub fn exit_status(entries: &[Entry]) -> i32 {
    if entries.iter().any(|e| matches!(e, Err(c) if crate::error_status(&c.error) == 3)) {
        3
    } else if entries.iter().all(|e| matches!(e, Ok(r) if r.pass)) {
        0
    } else {
        1
    }
}
