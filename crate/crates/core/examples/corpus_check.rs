//! Runs the built-in corpus, then a file whose J4 value has the wrong numerator.

use logint::corpus::{embedded, load_corpus, run_corpus};

fn main() {
    for o in run_corpus(&embedded()) {
        println!(
            "{} {:<12} {:?}  {}",
            if o.passed { "ok  " } else { "FAIL" },
            o.id,
            o.provenance,
            o.rendered.unwrap_or_default()
        );
    }
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/erratum_j4.json");
    let bad = run_corpus(&load_corpus(std::path::Path::new(path)).unwrap());
    for o in bad {
        println!(
            "{} {}: expected {} but computed {:.15} (off by {:.6})",
            if o.passed { "ok  " } else { "FAIL" },
            o.id,
            o.expected_numeric,
            o.numeric.unwrap(),
            o.abs_disagreement.unwrap()
        );
    }
}
