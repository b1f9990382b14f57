//! Poisson bracket on ℚ[x₁..x_r, p₁..p_r].
//!
//! The symplectic form is ω = Σᵢ εᵢ dxᵢ ∧ dp_{r+1−i} with εᵢ = (−1)^{i+1}, i.e.
//! `dx1∧dp_r − dx2∧dp_{r−1} + …`. The bracket is
//!
//! {f, g} = Σᵢ εᵢ (∂f/∂xᵢ · ∂g/∂p_{r+1−i} − ∂f/∂p_{r+1−i} · ∂g/∂xᵢ),
//!
//! so {xᵢ, p_{r+1−i}} = εᵢ.

use super::mpoly::{MPoly, PolyError};
use crate::exactla::Rational;

/// Global sign of the bracket: {x₁, p_r} = `POISSON_SIGN`.
pub const POISSON_SIGN: i64 = 1;

/// Sign εᵢ for the pair (xᵢ, p_{r+1−i}), `i` 1-based.
pub fn pair_sign(i: usize) -> i64 {
    if i % 2 == 1 {
        POISSON_SIGN
    } else {
        -POISSON_SIGN
    }
}

pub fn poisson(f: &MPoly, g: &MPoly) -> Result<MPoly, PolyError> {
    f.check_ring(g)?;
    let r = f.num_x();
    if f.num_p() != r {
        return Err(PolyError::NotSymplectic(f.num_x(), f.num_p()));
    }
    let mut out = MPoly::zero(r, r);
    for i in 1..=r {
        let j = r + 1 - i;
        let fx = f.dx(i);
        let gp = g.dp(j);
        let fp = f.dp(j);
        let gx = g.dx(i);
        let eps = Rational::from_int(pair_sign(i));
        if !fx.is_zero() && !gp.is_zero() {
            out.add_assign_scaled(&(&fx * &gp), &eps);
        }
        if !fp.is_zero() && !gx.is_zero() {
            out.add_assign_scaled(&(&fp * &gx), &-eps);
        }
    }
    Ok(out)
}

/// Z = Σ (−1)^{i−1} xᵢ p_{r+1−i}, the grading element of the 𝔤𝔩(2) part.
pub fn z_element(r: usize) -> MPoly {
    let mut z = MPoly::zero(r, r);
    for i in 1..=r {
        let t = &MPoly::x(r, r, i) * &MPoly::p(r, r, r + 1 - i);
        z.add_assign_scaled(&t, &Rational::from_int(if i % 2 == 1 { 1 } else { -1 }));
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pairs() {
        let r = 4;
        for i in 1..=r {
            for j in 1..=r {
                let b = poisson(&MPoly::x(r, r, i), &MPoly::x(r, r, j)).unwrap();
                assert!(b.is_zero());
            }
            let b = poisson(&MPoly::x(r, r, i), &MPoly::p(r, r, r + 1 - i)).unwrap();
            assert_eq!(b, MPoly::constant(r, r, Rational::from_int(pair_sign(i))));
        }
    }

    #[test]
    fn z_scales_x_uniformly() {
        let r = 5;
        let z = z_element(r);
        for j in 1..=r {
            let x = MPoly::x(r, r, j);
            assert_eq!(poisson(&z, &x).unwrap(), x.scale(&Rational::from_int(-1)));
        }
    }

    #[test]
    fn ring_checks() {
        let a = MPoly::x(2, 2, 1);
        let b = MPoly::x(3, 3, 1);
        assert!(poisson(&a, &b).is_err());
        let c = MPoly::x(2, 0, 1);
        assert!(poisson(&c, &c).is_err());
    }
}
