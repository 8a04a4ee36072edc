//! The series, fit and verify pipelines behind the CLI.

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{Corpus, CorpusEntry, Expected};
use super::parse::IdealSpec;
use super::report::{self, FitObservations, Format, Hypotheses, Observations, Verdict, VerifyRecord};
use crate::error::Result;
use crate::filtration::{dim_stabilization, sample_series, SeriesSample};
use crate::hilbert::{Dimension, HilbertEngine};
use crate::primes::height;
use crate::quasipoly::{self, fit, QuasiPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub nmax: u32,
    pub g_max: usize,
    pub min_tail: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            nmax: quasipoly::DEFAULT_NMAX,
            g_max: quasipoly::DEFAULT_G_MAX,
            min_tail: quasipoly::DEFAULT_MIN_TAIL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub n: u32,
    /// Exact decimal string.
    pub f: String,
    pub dim: Dimension,
    pub gens: usize,
}

impl From<&SeriesSample> for SeriesRow {
    fn from(s: &SeriesSample) -> Self {
        Self { n: s.n, f: s.f.to_string(), dim: s.module_dim, gens: s.symbolic_ideal.gens().len() }
    }
}

pub fn render_series(rows: &[SeriesRow], format: Format) -> String {
    let header = ["n", "f", "dim", "gens"];
    let cells = rows.iter().map(|r| [r.n.to_string(), r.f.clone(), r.dim.to_string(), r.gens.to_string()]);
    match format {
        Format::Table => report::to_table(header, cells),
        Format::Csv => report::to_csv(header, cells),
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
    }
}

/// `(n, f(n), dim, #gens of I_n(J))` for `n = 1..=nmax`.
pub fn run_series(spec: &IdealSpec, settings: &Settings, engine: &HilbertEngine) -> Result<Vec<SeriesRow>> {
    let samples = sample_series(&spec.i, spec.require_j()?, settings.nmax, engine)?;
    Ok(samples.iter().map(SeriesRow::from).collect())
}

#[derive(Debug, Clone)]
pub struct FitOutcome {
    pub rows: Vec<SeriesRow>,
    pub qp: QuasiPolynomial,
}

impl FitOutcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let qp = &self.qp;
                let table: Vec<Vec<String>> = qp
                    .coeff_table()
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect();
                let value = serde_json::json!({
                    "series": self.rows,
                    "fit": {
                        "period": qp.period(),
                        "degree": qp.degree(),
                        "onset": qp.onset(),
                        "coefficients": table,
                        "grade": qp.grade(),
                    }
                });
                serde_json::to_string_pretty(&value).expect("fit serializes") + "\n"
            }
            Format::Csv => render_series(&self.rows, Format::Csv),
            Format::Table => format!(
                "{}\n{}\ngrade {}\n",
                render_series(&self.rows, Format::Table),
                self.qp,
                self.qp.grade()
            ),
        }
    }
}

/// Sample the series and fit a quasi-polynomial to it.
pub fn run_fit(spec: &IdealSpec, settings: &Settings, engine: &HilbertEngine) -> Result<FitOutcome> {
    let samples = sample_series(&spec.i, spec.require_j()?, settings.nmax, engine)?;
    let points: Vec<(u64, BigInt)> = samples.iter().map(|s| (s.n as u64, s.f.clone())).collect();
    let qp = fit(&points, settings.g_max, settings.min_tail)?;
    Ok(FitOutcome { rows: samples.iter().map(SeriesRow::from).collect(), qp })
}

/// Leading-coefficient checks on a fitted quasi-polynomial.
pub fn fit_observations(qp: &QuasiPolynomial) -> FitObservations {
    match qp.degree() {
        None => FitObservations {
            period: qp.period(),
            degree: None,
            onset: qp.onset(),
            a_c: Vec::new(),
            a_c_constant: true,
            a_c_positive: false,
            a_c1_constant: true,
            grade: qp.grade(),
        },
        Some(c) => {
            let a_c_constant = qp.coeff_is_constant(c);
            let a_c: Vec<String> = if a_c_constant {
                vec![qp.coefficient(c, 0).to_string()]
            } else {
                (0..qp.period()).map(|r| qp.coefficient(c, r).to_string()).collect()
            };
            FitObservations {
                period: qp.period(),
                degree: Some(c),
                onset: qp.onset(),
                a_c,
                a_c_constant,
                a_c_positive: (0..qp.period()).all(|r| qp.coefficient(c, r).is_positive()),
                // vacuous for c = 0
                a_c1_constant: c == 0 || qp.coeff_is_constant(c - 1),
                grade: qp.grade(),
            }
        }
    }
}

/// Check one `(I, J)` pair against the stabilization results.
pub fn verify_entry(
    name: &str,
    spec: &IdealSpec,
    expected: Option<Expected>,
    settings: &Settings,
    engine: &HilbertEngine,
) -> Result<VerifyRecord> {
    let j = spec.require_j()?;
    let h = height(&spec.i)?;
    let hypotheses =
        Hypotheses { equigenerated: spec.i.is_equigenerated(), height: h, height_ok: h >= 2 };
    let mut record = VerifyRecord {
        name: name.to_string(),
        hypotheses,
        observations: Observations { dim_tail: None, dim_onset: None, fit: None },
        verdict: Verdict::InsufficientData,
        detail: None,
    };

    if let Some(exp) = expected {
        let mut problems = Vec::new();
        if exp.height.is_some_and(|e| e != record.hypotheses.height) {
            problems.push(format!("expected height {}", exp.height.unwrap()));
        }
        if exp.equigenerated.is_some_and(|e| e != record.hypotheses.equigenerated) {
            problems.push(format!("expected equigenerated = {}", exp.equigenerated.unwrap()));
        }
        if !problems.is_empty() {
            record.verdict = Verdict::InconsistentWithTheorem;
            record.detail = Some(problems.join("; "));
            return Ok(record);
        }
    }

    let samples = sample_series(&spec.i, j, settings.nmax, engine)?;
    match dim_stabilization(&samples) {
        Ok((tail, onset)) => {
            record.observations.dim_tail = Some(tail);
            record.observations.dim_onset = Some(onset);
        }
        Err(e) => {
            record.detail = Some(e.to_string());
            return Ok(record);
        }
    }
    let points: Vec<(u64, BigInt)> = samples.iter().map(|s| (s.n as u64, s.f.clone())).collect();
    let qp = match fit(&points, settings.g_max, settings.min_tail) {
        Ok(qp) => qp,
        Err(e) => {
            record.detail = Some(e.to_string());
            return Ok(record);
        }
    };
    let obs = fit_observations(&qp);

    let mut failures = Vec::new();
    if obs.degree.is_some() && !(obs.a_c_constant && obs.a_c_positive) {
        failures.push("leading coefficient is not a positive constant");
    }
    if record.hypotheses.hold() && !obs.a_c1_constant {
        failures.push("sub-leading coefficient is not constant");
    }
    record.verdict = if !failures.is_empty() {
        record.detail = Some(failures.join("; "));
        Verdict::InconsistentWithTheorem
    } else if record.hypotheses.hold() {
        Verdict::ConsistentWithTheorem
    } else {
        record.detail = Some(match (record.hypotheses.equigenerated, record.hypotheses.height_ok) {
            (false, false) => "not equigenerated and height < 2".to_string(),
            (false, true) => "not equigenerated".to_string(),
            _ => "height < 2".to_string(),
        });
        Verdict::HypothesisNotMet
    };
    record.observations.fit = Some(obs);
    Ok(record)
}

/// Verify every corpus entry, in parallel, keeping input order.
pub fn run_verify(corpus: &Corpus, settings: &Settings, engine: &HilbertEngine) -> Result<Vec<VerifyRecord>> {
    let specs = corpus
        .entries
        .iter()
        .map(|e| Ok((e, e.to_spec()?)))
        .collect::<Result<Vec<(&CorpusEntry, IdealSpec)>>>()?;
    specs
        .par_iter()
        .map(|(entry, spec)| verify_entry(&entry.name, spec, entry.expected, settings, engine))
        .collect()
}
