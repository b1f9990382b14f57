//! The symplectic model V = V_e + V_f of the flat curve: form, filtration,
//! shift and quasisymplectic frames.
//!
//! `cargo run --example flat_curve -- 2 1`

use tanaka_lab::exactla::Rational;
use tanaka_lab::flags::{build_model, distinguished_frame, exp_shift, is_quasisymplectic};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (k, l) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(1));
    let m = build_model(k, l).expect("k >= 2");
    println!("(k,l) = ({k},{l}), r = {}, dim V = {}", m.r, m.dim());
    println!("filtration dims {:?}", m.filtration_dims());
    println!("duality V^(i) = V^(-i-1)^perp: {}", m.duality_holds());
    println!("X V^(i) in V^(i+1): {}", m.shift_compatible());

    let frame = distinguished_frame(&m);
    let v = is_quasisymplectic(&frame, k, l, &m.sigma).unwrap();
    println!("distinguished frame quasisymplectic: {} (scale {:?})", v.pass, v.scale.map(|c| c.to_string()));

    let g = exp_shift(&m, &Rational::new(1, 2));
    let moved: Vec<Vec<Rational>> = frame.iter().map(|e| g.mul_vec(e)).collect();
    println!("after exp(X/2): {}", is_quasisymplectic(&moved, k, l, &m.sigma).unwrap().pass);

    let mut swapped = frame.clone();
    swapped.swap(0, m.r);
    let bad = is_quasisymplectic(&swapped, k, l, &m.sigma).unwrap();
    println!("e1 <-> f1 swapped: pass {}, first violation {:?}", bad.pass, bad.first_violation());
}
