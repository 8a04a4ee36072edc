//! Verification records and their table, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::hilbert::Dimension;

/// Column order of the CSV report.
pub const CSV_COLUMNS: [&str; 11] = [
    "name",
    "equigenerated",
    "height",
    "dim_tail",
    "g",
    "c",
    "a_c",
    "a_c_const",
    "a_c1_const",
    "grade",
    "verdict",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ConsistentWithTheorem,
    HypothesisNotMet,
    InsufficientData,
    /// A proved statement failed, or the engine disagreed with an expected
    /// value recorded in the corpus.
    InconsistentWithTheorem,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ConsistentWithTheorem => "consistent-with-theorem",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::InsufficientData => "insufficient-data",
            Verdict::InconsistentWithTheorem => "inconsistent-with-theorem",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub equigenerated: bool,
    pub height: usize,
    pub height_ok: bool,
}

impl Hypotheses {
    pub fn hold(&self) -> bool {
        self.equigenerated && self.height_ok
    }
}

/// What the fitted quasi-polynomial says about the leading coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FitObservations {
    pub period: usize,
    /// `None` for the zero function.
    pub degree: Option<usize>,
    pub onset: u64,
    /// `a_c(r)` for each residue, as exact rationals; empty for the zero function.
    pub a_c: Vec<String>,
    pub a_c_constant: bool,
    pub a_c_positive: bool,
    pub a_c1_constant: bool,
    pub grade: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Observations {
    pub dim_tail: Option<Dimension>,
    pub dim_onset: Option<u32>,
    pub fit: Option<FitObservations>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub name: String,
    pub hypotheses: Hypotheses,
    pub observations: Observations,
    pub verdict: Verdict,
    /// Why the verdict is not `consistent-with-theorem`, when relevant.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerifyRecord {
    fn csv_fields(&self) -> [String; 11] {
        let fit = self.observations.fit.as_ref();
        let opt = |v: Option<String>| v.unwrap_or_default();
        [
            self.name.clone(),
            self.hypotheses.equigenerated.to_string(),
            self.hypotheses.height.to_string(),
            opt(self.observations.dim_tail.map(|d| d.to_string())),
            opt(fit.map(|f| f.period.to_string())),
            opt(fit.map(|f| f.degree.map_or("zero".into(), |c| c.to_string()))),
            opt(fit.map(|f| if f.a_c.is_empty() { "0".into() } else { f.a_c.join("|") })),
            opt(fit.map(|f| f.a_c_constant.to_string())),
            opt(fit.map(|f| f.a_c1_constant.to_string())),
            opt(fit.map(|f| f.grade.to_string())),
            self.verdict.as_str().to_string(),
        ]
    }
}

/// Output format for reports and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected table, csv or json)")),
        }
    }
}

/// Render rows as CSV with a header line.
pub(crate) fn to_csv<const N: usize>(header: [&str; N], rows: impl Iterator<Item = [String; N]>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Render rows as an aligned text table.
pub(crate) fn to_table<const N: usize>(header: [&str; N], rows: impl Iterator<Item = [String; N]>) -> String {
    let rows: Vec<[String; N]> = rows.collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let parts: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
    };
    line(&header);
    for row in &rows {
        line(&row.each_ref().map(String::as_str));
    }
    out
}

pub fn render_verify(records: &[VerifyRecord], format: Format) -> String {
    match format {
        Format::Csv => to_csv(CSV_COLUMNS, records.iter().map(VerifyRecord::csv_fields)),
        Format::Table => {
            let mut out = to_table(CSV_COLUMNS, records.iter().map(VerifyRecord::csv_fields));
            for r in records.iter().filter(|r| r.detail.is_some()) {
                writeln!(out, "note [{}]: {}", r.name, r.detail.as_deref().unwrap()).unwrap();
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(records).expect("records serialize");
            s.push('\n');
            s
        }
    }
}

/// Process exit code for a verification run: 3 if any entry contradicts a
/// proved statement, otherwise 2 if any entry lacked data, otherwise 0.
pub fn exit_code(records: &[VerifyRecord]) -> i32 {
    if records.iter().any(|r| r.verdict == Verdict::InconsistentWithTheorem) {
        3
    } else if records.iter().any(|r| r.verdict == Verdict::InsufficientData) {
        2
    } else {
        0
    }
}
