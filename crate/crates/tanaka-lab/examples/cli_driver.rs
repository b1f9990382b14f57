//! Driving the command-line layer from code: any subcommand can be run
//! in-process and rendered as JSON or text.
//!
//! `cargo run --release --example cli_driver`

use clap::Parser;
use tanaka_lab::cli::{render, run, Format, RunConfig};

fn main() {
    for args in [
        vec!["tanaka-lab", "gdim", "--k", "2", "--l", "0"],
        vec!["tanaka-lab", "diagram", "--model", "flat:2,2", "--samples", "3", "--seed", "4"],
        vec!["tanaka-lab", "selftest"],
    ] {
        let cfg = RunConfig::parse_from(&args);
        let out = run(&cfg);
        println!("$ {} (exit {})", args[1..].join(" "), out.exit_code);
        let fmt = if args[1] == "gdim" { Format::Json } else { Format::Text };
        let text = render(&out.report, fmt);
        for line in text.lines().filter(|l| !l.contains("report.") && !l.contains("sample.")) {
            println!("  {line}");
        }
    }
}
