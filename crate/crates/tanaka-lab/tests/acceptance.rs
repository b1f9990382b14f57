//! One PASS/FAIL line per acceptance criterion.

use tanaka_lab::cli::run_suite;

fn main() {
    let seed = std::env::var("TANAKA_LAB_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let rep = run_suite(seed);
    for c in &rep.criteria {
        println!("{} {:>2} {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.title);
        if !c.pass {
            println!("     {}", c.details);
        }
    }
    if !rep.all_pass {
        std::process::exit(1);
    }
}
