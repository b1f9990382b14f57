//! Low-rank elements of the quadric space p: witnesses or a Macaulay
//! certificate of emptiness.
//!
//! `cargo run --release --example rank_filter`

use tanaka_lab::flags::{p_quadrics, rank_filter};

fn main() {
    for (k, l, rho) in [(2, 1, 2), (2, 2, 2), (2, 2, 4), (3, 2, 2)] {
        let q = p_quadrics(k, l).unwrap();
        let rep = rank_filter(&q, rho);
        print!("p for ({k},{l}) has dim {}; rank <= {rho}: {:?}", q.dim(), rep.verdict);
        if let Some(c) = &rep.certificate {
            print!(" (degree {}, {} minors)", c.degree, c.minors);
        }
        if let Some(w) = rep.witnesses.first() {
            print!(" e.g. {w}");
        }
        println!();
    }
}
