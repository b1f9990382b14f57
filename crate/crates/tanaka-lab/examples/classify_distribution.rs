//! Classifying user-supplied rank-3 distributions: a generic (3,6) case,
//! a product with a reduced square and the abelian case.
//!
//! `cargo run --example classify_distribution`

use tanaka_lab::abnormal::classify;
use tanaka_lab::dist::{DistributionSpec, PolyVectorField};
use tanaka_lab::exactla::Rational;
use tanaka_lab::poly::MPoly;

fn field(comps: Vec<MPoly>) -> PolyVectorField {
    PolyVectorField::new(comps).unwrap()
}

fn main() {
    // Free nilpotent (3,6): X_i = d_i + (bracket terms) on R^6.
    let n = 6;
    let x = |i| MPoly::var(n, 0, i);
    let z = || MPoly::zero(n, 0);
    let one = || MPoly::constant(n, 0, Rational::one());
    let x1 = field(vec![one(), z(), z(), z(), -&x(1), -&x(2)]);
    let x2 = field(vec![z(), one(), z(), z(), z(), z()]);
    let x3 = field(vec![z(), z(), one(), x(1), z(), z()]);
    let d = DistributionSpec::new(vec![x1, x2, x3]).unwrap();
    let q = vec![Rational::zero(); n];
    println!("free (3,6): {}", serde_json::to_string(&classify(&d, &q, 6, 0).unwrap()).unwrap());

    // Heisenberg times a line: dim D^2 = 4.
    let m = 4;
    let y = |i| MPoly::var(m, 0, i);
    let zz = || MPoly::zero(m, 0);
    let o = || MPoly::constant(m, 0, Rational::one());
    let h = DistributionSpec::new(vec![
        field(vec![o(), zz(), zz(), zz()]),
        field(vec![zz(), o(), y(0), zz()]),
        field(vec![zz(), zz(), zz(), o()]),
    ])
    .unwrap();
    let c = classify(&h, &vec![Rational::zero(); m], 4, 0).unwrap();
    println!("Heisenberg x R: {}", serde_json::to_string(&c).unwrap());

    let ab = DistributionSpec::new((0..3).map(|i| PolyVectorField::coordinate(3, i)).collect()).unwrap();
    println!("abelian: {}", serde_json::to_string(&classify(&ab, &vec![Rational::zero(); 3], 4, 0).unwrap()).unwrap());
}
