//! Exact rationals, reduced row-echelon form and canonical subspaces.
//!
//! `cargo run --example exact_linear_algebra`

use tanaka_lab::exactla::{kernel, rref, MatQ, Rational, Subspace};
use tanaka_lab::liecore::standard_form;

fn main() {
    // i64 arithmetic spills into big integers and comes back when it can.
    let big = Rational::from_int(i64::MAX);
    let sq = &big * &big;
    println!("(2^63-1)^2 = {sq}");
    println!("back down: {}", &sq / &big);

    let m = MatQ::from_i64(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 1, 0, -1, 2]);
    let (r, pivots, rank) = rref(&m);
    println!("rref pivots {pivots:?}, rank {rank}");
    for row in r.row_vecs() {
        println!("  {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("  "));
    }
    println!("kernel dim {}", kernel(&m).dim());

    // Two spanning sets, one canonical form.
    let a = Subspace::span(4, &m.row_vecs());
    let b = Subspace::span(4, &[r.row(0).to_vec(), r.row(1).to_vec()]);
    println!("same subspace: {}", a == b);

    let om = standard_form(4);
    let c = a.skew_complement(&om).unwrap();
    println!("skew complement dim {}, double complement equal: {}", c.dim(), c.skew_complement(&om).unwrap() == a);
}
