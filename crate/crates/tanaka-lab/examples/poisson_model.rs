//! The Poisson-algebra model of G_{k,l}: generators, ideal pieces, grading
//! by Z' and the comparison of its degree-0 part with s_{k,l}.
//!
//! `cargo run --release --example poisson_model -- 2 2`

use tanaka_lab::flags::{build_poisson_g, compare_degree_zero};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, l) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(2));
    let pm = build_poisson_g(k, l).expect("k >= 2, l >= 1");
    println!("G_({k},{l}) via Poisson brackets: dim {}", pm.dim());
    println!("Z'-grading {:?}", pm.graded_dims());
    println!("ideal pieces I_s {:?}", pm.ideal_dims);
    for (lab, e) in pm.labels.iter().zip(&pm.elements).take(4) {
        println!("  {lab} = {e}");
    }
    let cmp = compare_degree_zero(&pm).unwrap();
    println!("degree 0 (dim {}) equals s_({k},{l}) (dim {}): {}", cmp.degree_zero_dim, cmp.symbol_dim, cmp.equal);
}
