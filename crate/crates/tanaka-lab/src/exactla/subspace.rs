//! Linear subspaces of ℚⁿ in canonical form.
//!
//! The basis is the reduced column-echelon form: column `j` has a 1 in its
//! pivot coordinate and every other basis column is zero there. Two spans of
//! the same space therefore produce identical values.

use serde::{Deserialize, Serialize};

use super::echelon::Echelon;
use super::matrix::MatQ;
use super::rational::Rational;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ExactlaError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("form is not skew-symmetric")]
    NotSkew,
    #[error("form has size {0}, expected {1}")]
    FormSize(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: MatQ,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: MatQ::zeros(n, 0),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: MatQ::identity(n),
        }
    }

    fn from_echelon(e: &Echelon) -> Self {
        let n = e.cols();
        let rows = e.dense_rows();
        Subspace {
            ambient_dim: n,
            basis: MatQ::from_cols(n, &rows),
        }
    }

    /// Span of arbitrary vectors of length `n`.
    pub fn span(n: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut e = Echelon::new(n);
        for v in vectors {
            assert_eq!(v.len(), n, "vector length mismatch");
            e.insert_dense(v);
        }
        Self::from_echelon(&e)
    }

    /// Span of the coordinate vectors with the given indices.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); n];
                v[i] = Rational::one();
                v
            })
            .collect();
        Self::span(n, &vs)
    }

    /// Column span of a matrix.
    pub fn column_span(m: &MatQ) -> Self {
        Self::span(m.rows(), &m.col_vecs())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &MatQ {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.col_vecs()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in self.vectors() {
            e.insert_dense(&v);
        }
        e
    }

    fn check(&self, other: &Subspace) -> Result<(), ExactlaError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(ExactlaError::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    /// Pivot coordinate of each basis column.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|j| {
                (0..self.ambient_dim)
                    .find(|&i| !self.basis[(i, j)].is_zero())
                    .expect("zero basis column")
            })
            .collect()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        // Canonical form: v ∈ span iff v = Σ v[pivot_j] b_j.
        let piv = self.pivots();
        let mut r = v.to_vec();
        for (j, &p) in piv.iter().enumerate() {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for i in 0..self.ambient_dim {
                let b = &self.basis[(i, j)];
                if !b.is_zero() {
                    r[i] -= &f * b;
                }
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the space.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, ExactlaError> {
        self.check(other)?;
        Ok(other.vectors().iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactlaError> {
        self.check(other)?;
        let mut e = self.echelon();
        for v in other.vectors() {
            e.insert_dense(&v);
        }
        Ok(Self::from_echelon(&e))
    }

    /// Vectors orthogonal to the space under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let e = self.echelon();
        Subspace::span(self.ambient_dim, &e.kernel_basis())
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, ExactlaError> {
        self.check(other)?;
        let mut e = Echelon::new(self.ambient_dim);
        for v in self.annihilator().vectors() {
            e.insert_dense(&v);
        }
        for v in other.annihilator().vectors() {
            e.insert_dense(&v);
        }
        Ok(Subspace::span(self.ambient_dim, &e.kernel_basis()))
    }

    /// `{v : form(v, w) = 0 for all w in self}` with `form(v, w) = vᵀ F w`.
    pub fn skew_complement(&self, form: &MatQ) -> Result<Subspace, ExactlaError> {
        if form.rows() != self.ambient_dim || form.cols() != self.ambient_dim {
            return Err(ExactlaError::FormSize(form.rows(), self.ambient_dim));
        }
        if !form.is_skew() {
            return Err(ExactlaError::NotSkew);
        }
        let mut e = Echelon::new(self.ambient_dim);
        for w in self.vectors() {
            e.insert_dense(&form.mul_vec(&w));
        }
        Ok(Subspace::span(self.ambient_dim, &e.kernel_basis()))
    }

    /// Image under a linear map given by a matrix acting on columns.
    pub fn image(&self, m: &MatQ) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let vs: Vec<Vec<Rational>> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &vs)
    }

    /// True if `form` vanishes on the space.
    pub fn is_isotropic(&self, form: &MatQ) -> bool {
        let vs = self.vectors();
        vs.iter()
            .all(|v| vs.iter().all(|w| form.bilinear(v, w).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn canonical_from_different_spans() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::coordinate(4, &[0, 1]);
        let b = Subspace::coordinate(4, &[2, 3]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(4));
        assert_eq!(a.intersection(&b).unwrap().dim(), 0);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
        assert!(a.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn skew_complement_checks_form() {
        let a = Subspace::coordinate(2, &[0]);
        assert_eq!(a.skew_complement(&MatQ::identity(2)), Err(ExactlaError::NotSkew));
        let w = MatQ::from_i64(2, 2, &[0, 1, -1, 0]);
        assert_eq!(a.skew_complement(&w).unwrap(), a);
    }

    #[test]
    fn coordinates_roundtrip() {
        let a = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 5, 7]);
        let c = a.coordinates(&x).unwrap();
        let back = a.basis().mul_vec(&c);
        assert_eq!(back, x);
        assert!(a.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
