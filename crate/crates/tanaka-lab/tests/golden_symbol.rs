//! `symbol` reports against checked-in golden files.
//!
//! Run with `UPDATE_GOLDEN=1` to rewrite them after an intended change.

use std::path::PathBuf;

use clap::Parser;
use tanaka_lab::cli::{render, run, Format, RunConfig};

fn golden_path(k: usize, l: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/symbol_k{k}_l{l}.json"))
}

fn report(k: usize, l: usize) -> String {
    let (ks, ls) = (k.to_string(), l.to_string());
    let args = ["tanaka-lab", "symbol", "--k", &ks, "--l", &ls, "--check-prolongation", "--cross-check-poisson"];
    let cfg = RunConfig::parse_from(args);
    let out = run(&cfg);
    assert_eq!(out.exit_code, 0, "({k},{l}): {}", out.report);
    render(&out.report, Format::Json)
}

#[test]
fn symbol_goldens() {
    let update = std::env::var("UPDATE_GOLDEN").is_ok();
    for k in 2..=4 {
        for l in 0..=2 {
            let got = report(k, l);
            let path = golden_path(k, l);
            if update {
                std::fs::write(&path, &got).unwrap();
                continue;
            }
            let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
            assert_eq!(got, want, "({k},{l}) differs from {}", path.display());
        }
    }
}
