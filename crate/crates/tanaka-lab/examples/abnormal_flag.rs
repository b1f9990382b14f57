//! The flag of an abnormal extremal at a covector of the flat model m_{2,1}.
//!
//! `cargo run --example abnormal_flag`

use tanaka_lab::abnormal::{characteristic_field, flag_at, quasi_impulses, sample_covectors};
use tanaka_lab::dist::realize_flat;
use tanaka_lab::exactla::Rational;

fn main() {
    let d = realize_flat(2, 1).unwrap().distribution;
    let n = d.ambient_dim;
    let qi = quasi_impulses(&d).unwrap();
    println!("u12 = {}\nu13 = {}\nu23 = {}", qi.u12, qi.u13, qi.u23);
    let h = characteristic_field(&d).unwrap();
    println!("characteristic field is tangent to the annihilator ({} components)", h.ambient_dim());

    for lam in sample_covectors(&d, &vec![Rational::zero(); n], 4, 1).unwrap() {
        let r = flag_at(&d, &lam, None).unwrap();
        let p: Vec<String> = lam.p.iter().map(|x| x.to_string()).collect();
        println!("p = [{}]", p.join(", "));
        println!("  dims J {:?}, dim Delta {}", r.dims_j, r.delta_dim);
        match r.young {
            Some(y) => println!("  young {y}, duality {}", r.duality),
            None => println!("  not regular: {}", r.failure.unwrap_or_default()),
        }
    }
}
