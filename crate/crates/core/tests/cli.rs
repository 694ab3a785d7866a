use std::process::{Command, Output};

use logint::cli::{evaluate, EvalStatus};
use logint::engine::RenderStyle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn logint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Checks the `eval --json` document shape.
fn assert_eval_schema(v: &Value) {
    let obj = v.as_object().expect("object");
    let keys = ["expr", "power", "closed_form", "numeric", "oracle", "abs_disagreement", "status", "error"];
    assert_eq!(obj.len(), keys.len(), "{v}");
    for k in keys {
        assert!(obj.contains_key(k), "missing {k}");
    }
    assert!(v["expr"].is_string());
    assert!(v["power"].is_u64());
    assert!(v["closed_form"].is_string() || v["closed_form"].is_null());
    for k in ["numeric", "oracle", "abs_disagreement"] {
        assert!(v[k].is_f64() || v[k].is_null(), "{k} in {v}");
    }
    let status = v["status"].as_str().unwrap();
    assert!(["ok", "oracle_only", "error"].contains(&status));
    assert!(v["error"].is_string() || v["error"].is_null());
    match status {
        "ok" => {
            assert!(v["closed_form"].is_string() && v["numeric"].is_f64() && v["error"].is_null());
        }
        "oracle_only" => assert!(v["closed_form"].is_null() && v["oracle"].is_f64()),
        _ => assert!(v["error"].is_string()),
    }
}

#[test]
fn eval_exit_codes() {
    let out = logint(&["eval", "--expr", "(1-x)/(1-x^6)", "--power", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(8*sqrt(3)*pi^3 + 351*zeta(3))/486"));

    let out = logint(&["eval", "--expr", "1/(1+x)", "--power", "1", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eval_schema(&v);
    assert_eq!(v["closed_form"], "-pi^2/12");

    let out = logint(&["eval", "--expr", "1/(1-x)", "--power", "1"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("pole at x = 1 inside closed interval"));

    let out = logint(&["eval", "--expr", "2x", "--power", "1"]);
    assert_eq!(code(&out), 2);
    let out = logint(&["eval", "--expr", "1", "--power", "1", "--rel-tol", "1e-3"]);
    assert_eq!(code(&out), 2);

    // Nearly coincident poles: the closed form is exact but its f64 evaluation
    // cancels ~10 digits, so it disagrees with quadrature.
    let out = logint(&["eval", "--expr", "1/((x+1)*(x+10000000001/10000000000))", "--power", "1", "--json"]);
    assert_eq!(code(&out), 4);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eval_schema(&v);
    assert_eq!(v["status"], "error");
}

#[test]
fn oracle_only_fallback() {
    let out = logint(&["eval", "--expr", "1/(x^3+x+1)", "--power", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eval_schema(&v);
    assert_eq!(v["status"], "oracle_only");
}

#[test]
fn corpus_exit_codes() {
    let out = logint(&["corpus"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("12/12 pass"));

    let out = logint(&["corpus", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 12);
    for e in entries {
        assert!(e["passed"].as_bool().unwrap());
        assert!(e["provenance"] == "PAPER" || e["provenance"] == "DERIVED");
        assert!(e["numeric"].is_f64() && e["oracle"].is_f64());
    }

    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/erratum_j4.json");
    let out = logint(&["corpus", "--corpus-file", fixture]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("J4-wrong-numerator"));

    let out = logint(&["corpus", "--corpus-file", "/nonexistent/corpus.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn constants_table() {
    let out = logint(&["constants"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for needle in ["0.915965594177219", "1.20205690315959", "10.0955971254271", "1.01494160640965"] {
        assert!(text.contains(needle), "{needle} missing from\n{text}");
    }
}

#[test]
fn random_eval_reports_match_schema() {
    let pieces = ["1+x", "x+2", "x+3/2", "x^2+1", "x^2+x+1", "x^2-x+1", "x^3+x+1", "x^2-x/3+1"];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let k = rng.gen_range(1..=3);
        let den: Vec<String> = (0..k)
            .map(|_| format!("({})", pieces[rng.gen_range(0..pieces.len())]))
            .collect();
        let num = format!("{}*x^{} - {}", rng.gen_range(1..9), rng.gen_range(0..3), rng.gen_range(0..5));
        let expr = format!("({num})/({})", den.join("*"));
        let power = rng.gen_range(0..4);
        let (code, report) = evaluate(&expr, power, 1e-11, RenderStyle::Ascii);
        let v = serde_json::to_value(&report).unwrap();
        assert_eval_schema(&v);
        match report.status {
            EvalStatus::Ok | EvalStatus::OracleOnly => assert_eq!(code, 0, "{expr}"),
            EvalStatus::Error => assert_ne!(code, 0, "{expr}"),
        }
    }
}
