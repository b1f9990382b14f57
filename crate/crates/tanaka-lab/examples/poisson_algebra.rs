//! The Poisson bracket on polynomials in x and p, and the sl(2)-triple of
//! quadratic Hamiltonians.
//!
//! `cargo run --example poisson_algebra`

use tanaka_lab::exactla::Rational;
use tanaka_lab::flags::{poisson_h, poisson_x, poisson_y};
use tanaka_lab::poly::{poisson, z_element, MPoly};

fn main() {
    let r = 4;
    let x = poisson_x(r);
    let h = poisson_h(r).unwrap();
    let y = poisson_y(r, &x, &h).unwrap();
    let z = z_element(r);
    println!("X = {x}\nH = {h}\nY = {y}\nZ = {z}");
    let two = Rational::from_int(2);
    println!("{{H,X}} = 2X: {}", poisson(&h, &x).unwrap() == x.scale(&two));
    println!("{{H,Y}} = -2Y: {}", poisson(&h, &y).unwrap() == y.scale(&-two));
    println!("{{X,Y}} = H: {}", poisson(&x, &y).unwrap() == h);
    for g in [&x, &y, &h] {
        assert!(poisson(&z, g).unwrap().is_zero());
    }
    println!("Z commutes with the triple");
    let x1 = MPoly::x(r, r, 1);
    println!("{{X, x1}} = {}", poisson(&x, &x1).unwrap());
}
