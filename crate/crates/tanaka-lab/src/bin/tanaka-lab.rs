use clap::Parser;
use tanaka_lab::cli::{emit, run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let outcome = run(&config);
    if let Err(e) = emit(&outcome, &config) {
        eprintln!("tanaka-lab: {e}");
        std::process::exit(1);
    }
    std::process::exit(outcome.exit_code);
}
