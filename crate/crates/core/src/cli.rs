//! The `logint` command line: `eval`, `corpus` and `constants`.
//!
//! Exit codes: 0 ok, 1 corpus failure, 2 parse or usage error,
//! 3 pole or divergence, 4 engine–oracle mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::corpus::{embedded, load_corpus, run_corpus};
use crate::engine::{integrate_closed_form, render, EngineError, RenderStyle};
use crate::factorize::FactorizeError;
use crate::oracle::{integrate_log_power, DEFAULT_REL_TOL};
use crate::ratfun::{parse_expression, rat};
use crate::specfun::{catalan, clausen2_pi, polygamma, zeta};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CORPUS_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_INTEGRABLE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Engine and oracle must agree to `EVAL_TOL·(1 + |oracle|)`.
pub const EVAL_TOL: f64 = 1e-8;

#[derive(Parser, Debug)]
#[command(name = "logint", version, about = "Exact and numerical evaluation of ∫₀¹ R(x) logᵖx dx")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one integral in closed form and by quadrature.
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        power: u32,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_REL_TOL, value_parser = parse_rel_tol)]
        rel_tol: f64,
        #[arg(long, default_value = "ascii")]
        style: RenderStyle,
    },
    /// Check every corpus entry.
    Corpus {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        corpus_file: Option<PathBuf>,
    },
    /// Print reference constants.
    Constants,
}

fn parse_rel_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (1e-13..=1e-6).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} outside [1e-13, 1e-6]"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalStatus {
    Ok,
    OracleOnly,
    Error,
}

/// The `eval --json` document.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub expr: String,
    pub power: u32,
    pub closed_form: Option<String>,
    pub numeric: Option<f64>,
    pub oracle: Option<f64>,
    pub abs_disagreement: Option<f64>,
    pub status: EvalStatus,
    pub error: Option<String>,
}

/// Runs `eval` and returns the exit code with its report.
pub fn evaluate(expr: &str, power: u32, rel_tol: f64, style: RenderStyle) -> (i32, EvalReport) {
    let mut report = EvalReport {
        expr: expr.to_string(),
        power,
        closed_form: None,
        numeric: None,
        oracle: None,
        abs_disagreement: None,
        status: EvalStatus::Error,
        error: None,
    };
    let fail = |mut r: EvalReport, code: i32, msg: String| {
        r.status = EvalStatus::Error;
        r.error = Some(msg);
        (code, r)
    };
    let f = match parse_expression(expr) {
        Ok(f) => f,
        Err(e) => return fail(report, EXIT_PARSE, e.to_string()),
    };
    let closed = match integrate_closed_form(&f, power) {
        Ok(v) => Some(v),
        Err(e @ EngineError::Factorize(FactorizeError::PoleInUnitInterval { .. })) => {
            return fail(report, EXIT_NOT_INTEGRABLE, e.to_string());
        }
        Err(_) => None,
    };
    let oracle = match integrate_log_power(&f, power, rel_tol) {
        Ok(q) => q.value,
        Err(e) => return fail(report, EXIT_NOT_INTEGRABLE, e.to_string()),
    };
    report.oracle = Some(oracle);
    let Some(v) = closed else {
        report.status = EvalStatus::OracleOnly;
        return (EXIT_OK, report);
    };
    let numeric = v.numeric_value();
    let diff = (numeric - oracle).abs();
    report.closed_form = Some(render(&v, style));
    report.numeric = Some(numeric);
    report.abs_disagreement = Some(diff);
    if diff <= EVAL_TOL * (1.0 + oracle.abs()) {
        report.status = EvalStatus::Ok;
        (EXIT_OK, report)
    } else {
        let msg = format!("engine and oracle disagree by {diff:e}");
        fail(report, EXIT_MISMATCH, msg)
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.15e}"))
}

fn print_eval(out: &mut dyn Write, err: &mut dyn Write, r: &EvalReport, json: bool) -> std::io::Result<()> {
    if json {
        return writeln!(out, "{}", serde_json::to_string(r).unwrap());
    }
    writeln!(out, "integral:     ∫₀¹ ({}) log^{} x dx", r.expr, r.power)?;
    if let Some(c) = &r.closed_form {
        writeln!(out, "closed form:  {c}")?;
    }
    if r.numeric.is_some() {
        writeln!(out, "numeric:      {}", fmt_opt(r.numeric))?;
    }
    if r.oracle.is_some() {
        writeln!(out, "oracle:       {}", fmt_opt(r.oracle))?;
    }
    if let Some(d) = r.abs_disagreement {
        writeln!(out, "disagreement: {d:.3e}")?;
    }
    if r.status == EvalStatus::OracleOnly {
        writeln!(out, "note:         no closed form in the supported family; oracle value only")?;
    }
    if let Some(e) = &r.error {
        writeln!(err, "error: {e}")?;
    }
    Ok(())
}

/// Plain decimal with 15 significant digits.
pub fn sig15(v: f64) -> String {
    let exp = v.abs().log10().floor() as i32;
    let decimals = (14 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

/// `(name, value)` rows printed by `constants`.
pub fn constants_table() -> Vec<(&'static str, f64)> {
    vec![
        ("pi", std::f64::consts::PI),
        ("psi'(1/3)", polygamma(1, &rat(1, 3)).unwrap()),
        ("zeta(3)", zeta(3)),
        ("zeta(5)", zeta(5)),
        ("zeta(7)", zeta(7)),
        ("catalan", catalan()),
        ("Cl2(pi/3)", clausen2_pi(&rat(1, 3))),
        ("Cl2(2pi/3)", clausen2_pi(&rat(2, 3))),
    ]
}

fn run_corpus_cmd(
    out: &mut dyn Write,
    err: &mut dyn Write,
    json: bool,
    file: Option<PathBuf>,
) -> std::io::Result<i32> {
    let entries = match file {
        Some(path) => match load_corpus(&path) {
            Ok(e) => e,
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_PARSE);
            }
        },
        None => embedded(),
    };
    let outcomes = run_corpus(&entries);
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id.as_str()).collect();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&outcomes).unwrap())?;
    } else {
        for o in &outcomes {
            writeln!(
                out,
                "{} {:<16} {:<44} |Δ| = {}",
                if o.passed { "PASS" } else { "FAIL" },
                o.id,
                o.rendered.as_deref().unwrap_or("-"),
                o.abs_disagreement.map_or("-".into(), |d| format!("{d:.3e}")),
            )?;
            if !o.render_ok {
                writeln!(out, "     expected render {}", o.expected_render)?;
            }
            if let Some(e) = &o.error {
                writeln!(out, "     error: {e}")?;
            }
        }
        writeln!(out, "{}/{} pass", outcomes.len() - failed.len(), outcomes.len())?;
    }
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "failed: {}", failed.join(", "))?;
        Ok(EXIT_CORPUS_FAILURE)
    }
}

/// Executes a parsed command, writing to the given streams.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cli.command {
        Command::Eval {
            expr,
            power,
            json,
            rel_tol,
            style,
        } => {
            let (code, report) = evaluate(&expr, power, rel_tol, style);
            print_eval(out, err, &report, json)?;
            Ok(code)
        }
        Command::Corpus { json, corpus_file } => run_corpus_cmd(out, err, json, corpus_file),
        Command::Constants => {
            for (name, v) in constants_table() {
                writeln!(out, "{name:<12} {}", sig15(v))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    execute(cli, &mut stdout.lock(), &mut stderr.lock()).unwrap_or(EXIT_PARSE)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_paths() {
        let (code, r) = evaluate("(1-x)/(1-x^6)", 2, DEFAULT_REL_TOL, RenderStyle::Ascii);
        assert_eq!(code, EXIT_OK);
        assert_eq!(r.closed_form.as_deref(), Some("(8*sqrt(3)*pi^3 + 351*zeta(3))/486"));
        let (code, r) = evaluate("1/(1-x)", 1, DEFAULT_REL_TOL, RenderStyle::Ascii);
        assert_eq!(code, EXIT_NOT_INTEGRABLE);
        assert_eq!(r.error.as_deref(), Some("pole at x = 1 inside closed interval"));
        let (code, _) = evaluate("1/(x", 1, DEFAULT_REL_TOL, RenderStyle::Ascii);
        assert_eq!(code, EXIT_PARSE);
        let (code, r) = evaluate("1/(1+x)", 0, DEFAULT_REL_TOL, RenderStyle::Ascii);
        assert_eq!((code, r.status), (EXIT_OK, EvalStatus::OracleOnly));
        assert!((r.oracle.unwrap() - 2f64.ln()).abs() < 1e-12);
        let (code, r) = evaluate("1/(x^3+x+1)", 1, DEFAULT_REL_TOL, RenderStyle::Ascii);
        assert_eq!((code, r.status), (EXIT_OK, EvalStatus::OracleOnly));
    }

    #[test]
    fn constants_format() {
        assert_eq!(sig15(0.915965594177219015), "0.915965594177219");
        assert_eq!(sig15(1.2020569031595942854), "1.20205690315959");
        assert_eq!(sig15(10.0955971254270940818), "10.0955971254271");
    }
}
