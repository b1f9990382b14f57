//! Lie algebras by structure constants, with optional integer grading.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::exactla::{to_sparse, Echelon, MatQ, Rational, Subspace};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket index out of range")]
    Index,
    #[error("structure constants not antisymmetric at ({0},{1})")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity fails on ({0},{1},{2})")]
    Jacobi(usize, usize, usize),
    #[error("bracket [{0},{1}] leaves degree {2}")]
    Grading(usize, usize, i32),
    #[error("k must be at least 2, got {0}")]
    SmallK(usize),
    #[error("form is not skew-symmetric")]
    NotSkew,
    #[error("form is degenerate")]
    Degenerate,
    #[error("odd dimension {0} for a symplectic space")]
    OddDim(usize),
    #[error("{0}")]
    Invalid(String),
}

/// Finite-dimensional Lie algebra; brackets stored for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlg {
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl LieAlg {
    /// Builds and validates: entries given for `i < j` only, or for both
    /// orders consistently.
    pub fn new(
        labels: Vec<String>,
        table: &[((usize, usize), Vec<(usize, Rational)>)],
    ) -> Result<LieAlg, LieError> {
        let dim = labels.len();
        let mut brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        let mut seen: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for ((i, j), v) in table {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim || v.iter().any(|(k, _)| *k >= dim) {
                return Err(LieError::Index);
            }
            let mut v: Vec<(usize, Rational)> = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
            v.sort_by_key(|(k, _)| *k);
            if i == j {
                if !v.is_empty() {
                    return Err(LieError::Antisymmetry(i, j));
                }
                continue;
            }
            seen.insert((i, j), v.clone());
            let (a, b, v) = if i < j {
                (i, j, v)
            } else {
                (j, i, v.into_iter().map(|(k, c)| (k, -c)).collect())
            };
            if v.is_empty() {
                continue;
            }
            if let Some(prev) = brackets.get(&(a, b)) {
                if *prev != v {
                    return Err(LieError::Antisymmetry(a, b));
                }
            }
            brackets.insert((a, b), v);
        }
        for ((i, j), v) in &seen {
            if let Some(w) = seen.get(&(*j, *i)) {
                let neg: Vec<(usize, Rational)> = w.iter().map(|(k, c)| (*k, -c)).collect();
                if *v != neg {
                    return Err(LieError::Antisymmetry(*i, *j));
                }
            }
        }
        let alg = LieAlg {
            dim,
            labels,
            brackets,
        };
        alg.check_jacobi()?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// [e_i, e_j] as a dense vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        if i == j {
            return out;
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        if let Some(v) = self.brackets.get(&(a, b)) {
            for (k, c) in v {
                out[*k] = if s == 1 { c.clone() } else { -c };
            }
        }
        out
    }

    /// Structure constant c_{ij}^k.
    pub fn c(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)[k].clone()
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for ((i, j), w) in &self.brackets {
            let a = &u[*i] * &v[*j] - &u[*j] * &v[*i];
            if a.is_zero() {
                continue;
            }
            for (k, c) in w {
                out[*k] += &a * c;
            }
        }
        out
    }

    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Rational)>)> {
        self.brackets.iter()
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim;
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..n {
                    let t1 = self.bracket(&bij, &e(k));
                    let t2 = self.bracket(&self.bracket_basis(j, k), &e(i));
                    let t3 = self.bracket(&self.bracket_basis(k, i), &e(j));
                    if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                        return Err(LieError::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of ad(u) acting on coordinates.
    pub fn ad(&self, u: &[Rational]) -> MatQ {
        let mut m = MatQ::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let mut ej = vec![Rational::zero(); self.dim];
            ej[j] = Rational::one();
            let col = self.bracket(u, &ej);
            for i in 0..self.dim {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    /// Span of all brackets of elements of `a` with elements of `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut e = Echelon::new(self.dim);
        for u in a.vectors() {
            for v in b.vectors() {
                e.insert(&to_sparse(&self.bracket(&u, &v)));
            }
        }
        Subspace::span(self.dim, &e.dense_rows())
    }

    /// Dimensions of the lower central series g ⊇ [g,g] ⊇ … down to 0 or a
    /// fixed point.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let g = Subspace::full(self.dim);
        let mut cur = g.clone();
        let mut out = vec![cur.dim()];
        loop {
            let next = self.bracket_span(&g, &cur);
            if next.dim() == cur.dim() {
                break;
            }
            out.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            cur = next;
        }
        out
    }

    /// Center, as the kernel of u ↦ ([u, e_j])_j.
    pub fn center(&self) -> Subspace {
        let mut rows = Vec::new();
        for j in 0..self.dim {
            for k in 0..self.dim {
                // coefficient of e_k in [u, e_j] is Σ_i u_i c_{ij}^k
                rows.push((0..self.dim).map(|i| self.c(i, j, k)).collect::<Vec<_>>());
            }
        }
        crate::exactla::kernel_rows(&rows, self.dim)
    }
}

impl Serialize for LieAlg {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Br {
            i: usize,
            j: usize,
            coeffs: BTreeMap<String, Rational>,
        }
        let brs: Vec<Br> = self
            .brackets
            .iter()
            .map(|((i, j), v)| Br {
                i: *i,
                j: *j,
                coeffs: v.iter().map(|(k, c)| (k.to_string(), c.clone())).collect(),
            })
            .collect();
        let mut st = s.serialize_struct("LieAlg", 3)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("labels", &self.labels)?;
        st.serialize_field("brackets", &brs)?;
        st.end()
    }
}

/// Lie algebra with an integer degree per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlg {
    pub alg: LieAlg,
    pub degree: Vec<i32>,
}

impl GradedLieAlg {
    pub fn new(alg: LieAlg, degree: Vec<i32>) -> Result<Self, LieError> {
        if degree.len() != alg.dim() {
            return Err(LieError::Index);
        }
        for ((i, j), v) in alg.nonzero_brackets() {
            let d = degree[*i] + degree[*j];
            if v.iter().any(|(k, _)| degree[*k] != d) {
                return Err(LieError::Grading(*i, *j, d));
            }
        }
        Ok(GradedLieAlg { alg, degree })
    }

    /// Basis indices of the given degree.
    pub fn piece(&self, d: i32) -> Vec<usize> {
        (0..self.degree.len()).filter(|&i| self.degree[i] == d).collect()
    }

    /// Dimensions per degree, from lowest to highest.
    pub fn graded_dims(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for d in &self.degree {
            *m.entry(*d).or_insert(0) += 1;
        }
        m
    }

    /// Number of bracket steps the degree −1 part needs to span everything,
    /// or `None` if it does not generate.
    pub fn generation_depth(&self) -> Option<usize> {
        let n = self.alg.dim();
        let gen = Subspace::coordinate(n, &self.piece(-1));
        let mut cur = gen.clone();
        let mut steps = 1;
        while cur.dim() < n {
            let next = cur.sum(&self.alg.bracket_span(&gen, &cur)).unwrap();
            if next.dim() == cur.dim() {
                return None;
            }
            cur = next;
            steps += 1;
        }
        Some(steps)
    }
}

impl Serialize for GradedLieAlg {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = serde_json::to_value(&self.alg).map_err(serde::ser::Error::custom)?;
        let mut obj = match v {
            serde_json::Value::Object(o) => o,
            _ => unreachable!(),
        };
        obj.insert("degrees".into(), serde_json::to_value(&self.degree).unwrap());
        obj.serialize(s)
    }
}

/// The flat algebra m_{k,l}: basis X, Y₁..Y_k, Z₁..Z_{k+l}, η with
/// [X,Yᵢ]=Y_{i+1}, [X,Zⱼ]=Z_{j+1}, [Y₁,Z₁]=η.
pub fn build_flat_algebra(k: usize, l: usize) -> Result<GradedLieAlg, LieError> {
    if k < 2 {
        return Err(LieError::SmallK(k));
    }
    let mut labels = vec!["X".to_string()];
    labels.extend((1..=k).map(|i| format!("Y{i}")));
    labels.extend((1..=k + l).map(|j| format!("Z{j}")));
    labels.push("eta".into());
    let y = |i: usize| i; // Y_i at index i
    let z = |j: usize| k + j;
    let eta = 2 * k + l + 1;
    let one = Rational::one();
    let mut table = Vec::new();
    for i in 1..k {
        table.push(((0, y(i)), vec![(y(i + 1), one.clone())]));
    }
    for j in 1..k + l {
        table.push(((0, z(j)), vec![(z(j + 1), one.clone())]));
    }
    table.push(((y(1), z(1)), vec![(eta, one.clone())]));
    let alg = LieAlg::new(labels, &table)?;
    let mut degree = vec![-1];
    degree.extend((1..=k).map(|i| -(i as i32)));
    degree.extend((1..=k + l).map(|j| -(j as i32)));
    degree.push(-2);
    GradedLieAlg::new(alg, degree)
}

/// g₋ = ℝη ⊕ V with [v₁, v₂] = ω(v₁, v₂) η; η is the last basis vector.
pub fn heisenberg_extend(v_dim: usize, omega: &MatQ) -> Result<GradedLieAlg, LieError> {
    if v_dim % 2 == 1 {
        return Err(LieError::OddDim(v_dim));
    }
    if omega.rows() != v_dim || !omega.is_skew() {
        return Err(LieError::NotSkew);
    }
    if omega.det().is_zero() {
        return Err(LieError::Degenerate);
    }
    let mut labels: Vec<String> = (1..=v_dim).map(|i| format!("v{i}")).collect();
    labels.push("eta".into());
    let mut table = Vec::new();
    for a in 0..v_dim {
        for c in a + 1..v_dim {
            if !omega[(a, c)].is_zero() {
                table.push(((a, c), vec![(v_dim, omega[(a, c)].clone())]));
            }
        }
    }
    let alg = LieAlg::new(labels, &table)?;
    let mut degree = vec![-1; v_dim];
    degree.push(-2);
    GradedLieAlg::new(alg, degree)
}

/// Standard symplectic form on ℚ^{2m} with ω(e_i, e_{m+i}) = 1.
pub fn standard_form(v_dim: usize) -> MatQ {
    let m = v_dim / 2;
    let mut w = MatQ::zeros(v_dim, v_dim);
    for i in 0..m {
        w[(i, m + i)] = Rational::one();
        w[(m + i, i)] = -Rational::one();
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_dims_and_series() {
        let m = build_flat_algebra(2, 0).unwrap();
        assert_eq!(m.alg.dim(), 6);
        assert_eq!(m.generation_depth(), Some(2));
        let m = build_flat_algebra(2, 1).unwrap();
        assert_eq!(m.alg.lower_central_series(), vec![7, 4, 1, 0]);
        assert!(build_flat_algebra(1, 3).is_err());
    }

    #[test]
    fn heisenberg_center() {
        for n in [2, 4, 6] {
            let h = heisenberg_extend(n, &standard_form(n)).unwrap();
            assert_eq!(h.alg.dim(), n + 1);
            assert_eq!(h.alg.center(), Subspace::coordinate(n + 1, &[n]));
        }
        assert_eq!(
            heisenberg_extend(2, &MatQ::zeros(2, 2)),
            Err(LieError::Degenerate)
        );
    }

    #[test]
    fn jacobi_rejected() {
        // [e0,e1]=e1, [e0,e2]=e2, [e1,e2]=e0 violates Jacobi.
        let one = Rational::one();
        let t = vec![
            ((0, 1), vec![(1, one.clone())]),
            ((0, 2), vec![(2, one.clone())]),
            ((1, 2), vec![(0, one.clone())]),
        ];
        let r = LieAlg::new(vec!["a".into(), "b".into(), "c".into()], &t);
        assert!(matches!(r, Err(LieError::Jacobi(..))));
    }
}
