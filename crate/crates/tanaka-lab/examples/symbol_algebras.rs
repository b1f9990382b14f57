//! The symbols s_{k,l}: explicit construction against the stabilizer of the
//! flat curve.
//!
//! `cargo run --release --example symbol_algebras`

use tanaka_lab::flags::{build_symbol, flat_curve_symmetries, matrix_lie_algebra, p_dim_formula, symbol_parts};

fn main() {
    println!("{:>6} {:>6} {:>8} {:>10} {:>7}", "(k,l)", "dim V", "dim s", "formula", "equal");
    for (k, l) in [(2, 0), (3, 0), (2, 1), (2, 2), (3, 1), (3, 2), (2, 3)] {
        let (m, parts) = symbol_parts(k, l).unwrap();
        let s = build_symbol(k, l).unwrap();
        let st = flat_curve_symmetries(k, l).unwrap();
        let formula = if l == 0 { 7 } else { 5 + p_dim_formula(l) };
        println!("{:>6} {:>6} {:>8} {:>10} {:>7}", format!("({k},{l})"), m.dim(), s.dim(), formula, st.equals_symbol);
        assert_eq!(parts.all().len(), s.dim());
    }
    let alg = matrix_lie_algebra(&build_symbol(2, 1).unwrap()).unwrap();
    println!("s_(2,1) as an abstract algebra: dim {}, lower central series {:?}", alg.dim(), alg.lower_central_series());
}
