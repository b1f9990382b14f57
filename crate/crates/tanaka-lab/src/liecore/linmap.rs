//! Subspaces of Hom(ℚ^source, ℚ^target) in canonical form.
//!
//! A map is a `target × source` matrix. Flattening is row-major, so the
//! coordinate of entry `(t, s)` is `t·source + s`; canonical form is that of
//! the flattened span.

use serde::{Deserialize, Serialize};

use crate::exactla::{to_sparse, Echelon, MatQ, Rational, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinMapSpace {
    source_dim: usize,
    target_dim: usize,
    basis: Vec<MatQ>,
}

impl LinMapSpace {
    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        LinMapSpace {
            source_dim,
            target_dim,
            basis: Vec::new(),
        }
    }

    pub fn span(source_dim: usize, target_dim: usize, maps: &[MatQ]) -> Self {
        let mut e = Echelon::new(source_dim * target_dim);
        for m in maps {
            assert_eq!((m.rows(), m.cols()), (target_dim, source_dim), "map shape mismatch");
            e.insert_dense(m.entries());
        }
        Self::from_echelon(source_dim, target_dim, &e)
    }

    pub(crate) fn from_echelon(source_dim: usize, target_dim: usize, e: &Echelon) -> Self {
        let basis = e
            .dense_rows()
            .into_iter()
            .map(|v| MatQ::from_vec(target_dim, source_dim, v))
            .collect();
        LinMapSpace {
            source_dim,
            target_dim,
            basis,
        }
    }

    /// From flattened coordinate vectors.
    pub fn from_flat(source_dim: usize, target_dim: usize, vecs: &[Vec<Rational>]) -> Self {
        let mut e = Echelon::new(source_dim * target_dim);
        for v in vecs {
            e.insert_dense(v);
        }
        Self::from_echelon(source_dim, target_dim, &e)
    }

    /// All linear maps.
    pub fn full(source_dim: usize, target_dim: usize) -> Self {
        let mut maps = Vec::new();
        for t in 0..target_dim {
            for s in 0..source_dim {
                let mut m = MatQ::zeros(target_dim, source_dim);
                m[(t, s)] = Rational::one();
                maps.push(m);
            }
        }
        Self::span(source_dim, target_dim, &maps)
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MatQ] {
        &self.basis
    }

    pub fn as_subspace(&self) -> Subspace {
        let vs: Vec<Vec<Rational>> = self.basis.iter().map(|m| m.flatten()).collect();
        Subspace::span(self.source_dim * self.target_dim, &vs)
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.source_dim * self.target_dim);
        for m in &self.basis {
            e.insert_dense(m.entries());
        }
        e
    }

    pub fn contains(&self, m: &MatQ) -> bool {
        self.echelon().contains(&to_sparse(m.entries()))
    }

    /// Coordinates of `m` in the canonical basis.
    pub fn coordinates(&self, m: &MatQ) -> Option<Vec<Rational>> {
        self.as_subspace().coordinates(m.entries())
    }

    pub fn contains_space(&self, other: &LinMapSpace) -> bool {
        other.basis.iter().all(|m| self.contains(m))
    }

    pub fn sum(&self, other: &LinMapSpace) -> LinMapSpace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.source_dim, self.target_dim, &all)
    }

    pub fn intersection(&self, other: &LinMapSpace) -> LinMapSpace {
        let s = self.as_subspace().intersection(&other.as_subspace()).unwrap();
        Self::from_flat(self.source_dim, self.target_dim, &s.vectors())
    }

    /// Closure under commutators, for endomorphism spaces.
    pub fn is_closed_under_commutator(&self) -> bool {
        if self.source_dim != self.target_dim {
            return false;
        }
        let e = self.echelon();
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                if !e.contains(&to_sparse(a.commutator(b).entries())) {
                    return false;
                }
            }
        }
        true
    }

    /// Push forward target coordinates through `m` (new_target × target).
    pub fn push_forward(&self, m: &MatQ) -> LinMapSpace {
        assert_eq!(m.cols(), self.target_dim);
        let maps: Vec<MatQ> = self.basis.iter().map(|a| m.mul(a)).collect();
        Self::span(self.source_dim, m.rows(), &maps)
    }
}

/// Conformal scalar c with Aᵀ Ω + Ω A = c Ω, if A ∈ 𝔠𝔰𝔭.
pub fn csp_scalar(a: &MatQ, omega: &MatQ) -> Option<Rational> {
    let m = a.transpose().mul(omega).add(&omega.mul(a));
    let n = omega.rows();
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !omega[(i, j)].is_zero())?;
    let c = &m[(i, j)] / &omega[(i, j)];
    (m == omega.scale(&c)).then_some(c)
}

/// The conformal symplectic algebra of a nondegenerate form.
pub fn csp_algebra(omega: &MatQ) -> LinMapSpace {
    let n = omega.rows();
    // Unknowns: entries of A (row-major) and c; equations AᵀΩ + ΩA − cΩ = 0.
    let nv = n * n + 1;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Rational::zero(); nv];
            // (AᵀΩ)_{ij} = Σ_k A_{ki} Ω_{kj};  (ΩA)_{ij} = Σ_k Ω_{ik} A_{kj}
            for k in 0..n {
                row[k * n + i] += &omega[(k, j)];
                row[k * n + j] += &omega[(i, k)];
            }
            row[n * n] = -&omega[(i, j)];
            rows.push(row);
        }
    }
    let ker = crate::exactla::kernel_rows(&rows, nv);
    let maps: Vec<MatQ> = ker
        .vectors()
        .iter()
        .map(|v| MatQ::from_vec(n, n, v[..n * n].to_vec()))
        .collect();
    LinMapSpace::span(n, n, &maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::standard_form;

    #[test]
    fn csp_dimensions() {
        for n in [2usize, 4, 6] {
            let c = csp_algebra(&standard_form(n));
            assert_eq!(c.dim(), n * (n + 1) / 2 + 1);
            assert!(c.is_closed_under_commutator());
            for a in c.basis() {
                assert!(csp_scalar(a, &standard_form(n)).is_some());
            }
        }
    }

    #[test]
    fn canonical_span() {
        let a = MatQ::from_i64(2, 2, &[1, 0, 0, 1]);
        let b = MatQ::from_i64(2, 2, &[1, 0, 0, -1]);
        let s1 = LinMapSpace::span(2, 2, &[a.clone(), b.clone()]);
        let s2 = LinMapSpace::span(2, 2, &[a.add(&b), a.sub(&b)]);
        assert_eq!(s1, s2);
        assert_eq!(LinMapSpace::full(2, 3).dim(), 6);
    }
}
