//! dim G_{k,l} by degree from the Tanaka prolongation, with the Poisson
//! model as a second route when l >= 1.
//!
//! `cargo run --release --example symmetry_dimensions`

use tanaka_lab::flags::{build_model, build_poisson_g, build_symbol};
use tanaka_lab::liecore::{heisenberg_extend, tanaka_prolongation};

fn main() {
    println!("{:>6} {:>6} {:>8}  per degree", "(k,l)", "total", "poisson");
    for (k, l) in [(2, 0), (3, 0), (4, 0), (2, 1), (2, 2), (3, 1), (2, 3)] {
        let m = build_model(k, l).unwrap();
        let s = build_symbol(k, l).unwrap();
        let h = heisenberg_extend(m.dim(), &m.sigma).unwrap();
        let t = tanaka_prolongation(&h, &s, Some(m.r)).unwrap();
        let p = if l > 0 { build_poisson_g(k, l).unwrap().dim().to_string() } else { "-".into() };
        println!("{:>6} {:>6} {:>8}  {:?}", format!("({k},{l})"), t.total(), p, t.per_degree());
    }
}
