//! Infinitesimal symmetries of the flat curve by the iterated stabilizer.

use serde::Serialize;

use super::model::{build_model, FlagsError};
use super::symbol::build_symbol;
use crate::exactla::{kernel_rows, MatQ, Rational};
use crate::liecore::LinMapSpace;

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub k: usize,
    pub l: usize,
    /// dim h_m along the iteration, starting at h₀.
    pub chain: Vec<usize>,
    pub sym: LinMapSpace,
    pub dim: usize,
    pub equals_symbol: bool,
}

/// h₀ = flag stabilizer ∩ 𝔠𝔰𝔭(V).
fn initial_stabilizer(k: usize, l: usize) -> Result<(super::model::SymplecticModelV, LinMapSpace), FlagsError> {
    let m = build_model(k, l)?;
    let n = m.dim();
    let nv = n * n + 1;
    let mut rows = Vec::new();
    let s = &m.sigma;
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Rational::zero(); nv];
            for t in 0..n {
                row[t * n + i] += &s[(t, j)];
                row[t * n + j] += &s[(i, t)];
            }
            row[n * n] = -&s[(i, j)];
            rows.push(row);
        }
    }
    // A V⁽ⁱ⁾ ⊆ V⁽ⁱ⁾ on coordinate subspaces.
    for (_, piece) in &m.filtration {
        let inside = piece.pivots();
        for &src in &inside {
            for t in 0..n {
                if !inside.contains(&t) {
                    let mut row = vec![Rational::zero(); nv];
                    row[t * n + src] = Rational::one();
                    rows.push(row);
                }
            }
        }
    }
    let ker = kernel_rows(&rows, nv);
    let maps: Vec<MatQ> = ker
        .vectors()
        .iter()
        .map(|v| MatQ::from_vec(n, n, v[..n * n].to_vec()))
        .collect();
    Ok((m, LinMapSpace::span(n, n, &maps)))
}

pub fn flat_curve_symmetries(k: usize, l: usize) -> Result<SymmetryReport, FlagsError> {
    let (m, mut h) = initial_stabilizer(k, l)?;
    let n = m.dim();
    let mut chain = vec![h.dim()];
    let bound = n * n + 1;
    let mut settled = false;
    for _ in 0..bound {
        let with_x = h.sum(&LinMapSpace::span(n, n, std::slice::from_ref(&m.x)));
        let ann = with_x.as_subspace().annihilator().vectors();
        let images: Vec<Vec<Rational>> = h.basis().iter().map(|b| m.x.commutator(b).flatten()).collect();
        let rows: Vec<Vec<Rational>> = ann
            .iter()
            .map(|w| {
                images
                    .iter()
                    .map(|img| w.iter().zip(img).map(|(a, b)| a * b).sum())
                    .collect()
            })
            .collect();
        let ker = kernel_rows(&rows, h.dim());
        let next: Vec<MatQ> = ker
            .vectors()
            .iter()
            .map(|c| {
                let mut acc = MatQ::zeros(n, n);
                for (ci, b) in c.iter().zip(h.basis()) {
                    if !ci.is_zero() {
                        acc = acc.add(&b.scale(ci));
                    }
                }
                acc
            })
            .collect();
        let next = LinMapSpace::span(n, n, &next);
        if next.dim() == h.dim() {
            settled = true;
            break;
        }
        h = next;
        chain.push(h.dim());
    }
    if !settled {
        return Err(FlagsError::NoStabilization(bound));
    }
    let sym = h.sum(&LinMapSpace::span(n, n, std::slice::from_ref(&m.x)));
    let equals_symbol = sym == build_symbol(k, l)?;
    Ok(SymmetryReport {
        k,
        l,
        chain,
        dim: sym.dim(),
        sym,
        equals_symbol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stabilizer_matches_symbol() {
        for (k, l, d) in [(2, 0, 7), (2, 1, 8), (3, 0, 7)] {
            let r = flat_curve_symmetries(k, l).unwrap();
            assert_eq!(r.dim, d, "({k},{l}) chain {:?}", r.chain);
            assert!(r.equals_symbol, "({k},{l})");
        }
    }
}
