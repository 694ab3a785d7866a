//! The embedded table of known integrals and a concurrent runner that checks
//! every entry against both the closed-form engine and the quadrature oracle.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{integrate_closed_form, render, RenderStyle};
use crate::oracle::{integrate_log_power, DEFAULT_REL_TOL};
use crate::ratfun::parse_expression;

/// Relative tolerance for the numeric check of a corpus entry.
pub const CORPUS_REL_TOL: f64 = 1e-9;

const EMBEDDED: &str = include_str!("corpus.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub expr: String,
    pub power: u32,
    pub expected_render: String,
    pub expected_numeric: f64,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus file: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid corpus JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry {id}: expected_numeric is not finite")]
    NonFinite { id: String },
}

/// The built-in entries.
pub fn embedded() -> Vec<CorpusEntry> {
    parse_corpus(EMBEDDED).expect("embedded corpus is valid")
}

pub fn parse_corpus(json: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let entries: Vec<CorpusEntry> = serde_json::from_str(json)?;
    if let Some(e) = entries.iter().find(|e| !e.expected_numeric.is_finite()) {
        return Err(CorpusError::NonFinite { id: e.id.clone() });
    }
    Ok(entries)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    parse_corpus(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryOutcome {
    pub id: String,
    pub provenance: Provenance,
    pub rendered: Option<String>,
    pub expected_render: String,
    pub numeric: Option<f64>,
    pub oracle: Option<f64>,
    pub expected_numeric: f64,
    /// `|numeric − expected_numeric|`
    pub abs_disagreement: Option<f64>,
    /// `|oracle − expected_numeric|`
    pub oracle_disagreement: Option<f64>,
    pub render_ok: bool,
    pub numeric_ok: bool,
    pub passed: bool,
    pub error: Option<String>,
}

fn within(value: f64, expected: f64) -> bool {
    (value - expected).abs() <= CORPUS_REL_TOL * expected.abs().max(f64::MIN_POSITIVE)
}

pub fn check_entry(entry: &CorpusEntry) -> EntryOutcome {
    let mut out = EntryOutcome {
        id: entry.id.clone(),
        provenance: entry.provenance,
        rendered: None,
        expected_render: entry.expected_render.clone(),
        numeric: None,
        oracle: None,
        expected_numeric: entry.expected_numeric,
        abs_disagreement: None,
        oracle_disagreement: None,
        render_ok: false,
        numeric_ok: false,
        passed: false,
        error: None,
    };
    let f = match parse_expression(&entry.expr) {
        Ok(f) => f,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    let expected = entry.expected_numeric;
    match integrate_closed_form(&f, entry.power) {
        Ok(v) => {
            let rendered = render(&v, RenderStyle::Ascii);
            let numeric = v.numeric_value();
            out.render_ok = rendered == entry.expected_render;
            out.rendered = Some(rendered);
            out.numeric = Some(numeric);
            out.abs_disagreement = Some((numeric - expected).abs());
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    match integrate_log_power(&f, entry.power, DEFAULT_REL_TOL) {
        Ok(q) => {
            out.oracle = Some(q.value);
            out.oracle_disagreement = Some((q.value - expected).abs());
        }
        Err(e) => out.error = out.error.take().or(Some(e.to_string())),
    }
    out.numeric_ok = matches!((out.numeric, out.oracle), (Some(n), Some(o)) if within(n, expected) && within(o, expected));
    out.passed = out.render_ok && out.numeric_ok;
    out
}

/// Checks all entries concurrently; results sorted by id.
pub fn run_corpus(entries: &[CorpusEntry]) -> Vec<EntryOutcome> {
    let mut outcomes: Vec<EntryOutcome> = entries.par_iter().map(check_entry).collect();
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    outcomes
}
