//! Modified prolongations against the Tanaka prolongation.
//!
//! `cargo run --release --example prolongations`

use tanaka_lab::exactla::MatQ;
use tanaka_lab::flags::{build_model, build_symbol};
use tanaka_lab::liecore::{
    csp_algebra, default_anchor, modified_prolongation, modified_tower, prolongations_agree, standard_form, LinMapSpace,
};

fn main() {
    for (k, l) in [(2, 0), (2, 1), (3, 0)] {
        let m = build_model(k, l).unwrap();
        let s = build_symbol(k, l).unwrap();
        let rep = prolongations_agree(&s, &m.sigma, 4).unwrap();
        let dims: Vec<(usize, usize)> = rep.degrees.iter().map(|d| (d.modified_dim, d.tanaka_dim)).collect();
        println!("s_({k},{l}): (modified, tanaka) by degree {dims:?}, equal {}", rep.all_equal);
    }

    let om = standard_form(4);
    let (u, v) = default_anchor(&om).unwrap();
    let tower = modified_tower(&csp_algebra(&om), &om, (&u, &v), 2).unwrap();
    println!("csp(4) tower {:?}", tower.iter().map(|t| t.dim()).collect::<Vec<_>>());

    // dim V = 2: the modified condition is empty.
    let om2 = standard_form(2);
    let diag = LinMapSpace::span(2, 2, &[MatQ::from_i64(2, 2, &[1, 0, 0, 0]), MatQ::from_i64(2, 2, &[0, 0, 0, 1])]);
    let (a, b) = default_anchor(&om2).unwrap();
    let w1 = modified_prolongation(&diag, &om2, (&a, &b)).unwrap();
    println!("diagonal in gl(2): first modified prolongation has dim {} = dim Hom(V, W)", w1.dim());
    println!("comparison: {:?}", prolongations_agree(&diag, &om2, 2).unwrap_err());
}
