//! Left-invariant realizations of the flat models m_{k,l} and their growth
//! vectors.
//!
//! `cargo run --example flat_models`

use tanaka_lab::dist::{growth_vector, realize_flat};
use tanaka_lab::exactla::Rational;

fn main() {
    for (k, l) in [(2, 0), (2, 1), (3, 0), (3, 2)] {
        let fr = realize_flat(k, l).unwrap();
        let n = fr.distribution.ambient_dim;
        let q: Vec<Rational> = (0..n).map(|i| Rational::new(i as i64 % 3 - 1, 2)).collect();
        println!(
            "m_({k},{l}): dim {n}, grading {:?}, growth at 0 {:?}, at q {:?}",
            fr.algebra.graded_dims(),
            growth_vector(&fr.distribution, &vec![Rational::zero(); n], n).unwrap(),
            growth_vector(&fr.distribution, &q, n).unwrap(),
        );
    }
    let fr = realize_flat(2, 0).unwrap();
    for (i, g) in fr.distribution.generators.iter().enumerate() {
        let comps: Vec<String> = g.components().iter().map(|c| c.to_string()).collect();
        println!("X{} = ({})", i + 1, comps.join(", "));
    }
}
