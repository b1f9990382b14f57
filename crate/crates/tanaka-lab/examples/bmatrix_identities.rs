//! The matrices B and M^{k,l} with the identities behind det B_p != 0.
//!
//! `cargo run --example bmatrix_identities`

use tanaka_lab::flags::{bmatrix_suite, bmatrix_sweep, c_kl, d_ksj};

fn main() {
    let r = bmatrix_suite(3, 2);
    println!("B for (3,2):");
    for row in r.b.row_vecs() {
        println!("  {}", row.iter().map(|x| format!("{:>5}", x.to_string())).collect::<String>());
    }
    println!("det B_p = {:?}", r.dets.iter().map(|d| d.to_string()).collect::<Vec<_>>());
    println!("c(3,2) = {}, d(3,2,3) = {}", c_kl(3, 2), d_ksj(3, 2, 3));

    let sweep = bmatrix_sweep(2..=6, 0..=5);
    let bad: Vec<_> = sweep.iter().filter(|s| !s.ok()).map(|s| (s.k, s.l)).collect();
    let exact = sweep.iter().filter(|s| s.det_ratio_exact == Some(false)).count();
    println!("{} cases, failing {bad:?}, det ratio off by a sign in {exact}", sweep.len());
}
