//! Ideals of the rational normal curve, its tangential variety and its
//! secant varieties, degree by degree.
//!
//! `cargo run --example vanishing_ideals`

use tanaka_lab::poly::{hankel_minors, vanishing_ideal_piece, verify_vanishing, Variety};

fn main() {
    let r = 6;
    println!("r = {r} (curve in P^{})", r - 1);
    for (name, v) in [
        ("curve", Variety::curve()),
        ("tangential 1", Variety::tangential(1)),
        ("tangential 2", Variety::tangential(2)),
        ("secant 2", Variety::secant(2, 0)),
    ] {
        let dims: Vec<usize> = (2..=3).map(|d| vanishing_ideal_piece(r, v, d).unwrap().dim()).collect();
        println!("{name:>13}: dim I_2 = {}, dim I_3 = {}, fills space: {}", dims[0], dims[1], v.fills_space(r).unwrap());
    }

    let i2 = vanishing_ideal_piece(r, Variety::curve(), 2).unwrap();
    println!("curve quadrics verified by substitution: {}", verify_vanishing(&i2, Variety::curve()).unwrap());
    println!("equal to 2x2 Hankel minors: {}", i2 == hankel_minors(r, 2, 2).unwrap());
    for f in i2.basis.iter().take(3) {
        println!("  {f}");
    }
}
