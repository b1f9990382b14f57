//! Exact linear algebra over ℚ: rationals, dense matrices, and subspaces in
//! canonical form.

mod echelon;
mod matrix;
mod rational;
mod subspace;

pub use echelon::{to_dense, to_sparse, Echelon, SparseVec};
pub use matrix::MatQ;
pub use rational::{
    binomial, double_factorial, factorial, lcm_denoms, ParseRationalError, Rational,
};
pub use subspace::{ExactlaError, Subspace};

/// Reduced row-echelon form, pivot columns, and rank.
///
/// The output keeps the shape of `m`: the nonzero rows come first, followed by
/// zero rows.
pub fn rref(m: &MatQ) -> (MatQ, Vec<usize>, usize) {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert_dense(m.row(i));
    }
    let pivots = e.pivots();
    let rank = pivots.len();
    let mut out = MatQ::zeros(m.rows(), m.cols());
    for (i, row) in e.rows().enumerate() {
        for (j, x) in row {
            out[(i, *j)] = x.clone();
        }
    }
    (out, pivots, rank)
}

/// Null space of a list of equations (each a row of length `cols`).
pub fn kernel_rows(rows: &[Vec<Rational>], cols: usize) -> Subspace {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.insert_dense(r);
    }
    Subspace::span(cols, &e.kernel_basis())
}

/// Null space of a system given by sparse equations.
pub fn kernel_sparse(rows: &[SparseVec], cols: usize) -> Subspace {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.insert(r);
    }
    Subspace::span(cols, &e.kernel_basis())
}

/// Null space of `m`.
pub fn kernel(m: &MatQ) -> Subspace {
    kernel_rows(&m.row_vecs(), m.cols())
}

/// Solve `m x = b`; returns one solution when consistent.
pub fn solve(m: &MatQ, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(m.rows(), b.len());
    let aug = m.hstack(&MatQ::from_cols(b.len(), &[b.to_vec()]));
    let (r, piv, _) = rref(&aug);
    let n = m.cols();
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &p) in piv.iter().enumerate() {
        x[p] = r[(i, n)].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, p, k) = rref(&MatQ::identity(3));
        assert_eq!(r, MatQ::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(k, 3);
        let (r, p, k) = rref(&MatQ::zeros(3, 3));
        assert_eq!(r, MatQ::zeros(3, 3));
        assert!(p.is_empty());
        assert_eq!(k, 0);
    }

    #[test]
    fn kernel_basics() {
        assert_eq!(kernel(&MatQ::identity(4)).dim(), 0);
        assert_eq!(kernel(&MatQ::zeros(2, 5)).dim(), 5);
        let m = MatQ::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.vectors() {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = MatQ::from_i64(2, 2, &[2, 1, 1, 3]);
        let x = solve(&m, &[q(3), q(5)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(3), q(5)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), MatQ::identity(2));
        assert_eq!(m.det(), q(5));
        assert!(MatQ::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert!(solve(&MatQ::from_i64(2, 1, &[1, 1]), &[q(1), q(2)]).is_none());
    }
}
