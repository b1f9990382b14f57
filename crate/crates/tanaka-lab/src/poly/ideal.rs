//! Homogeneous pieces of vanishing ideals of the rational normal curve, its
//! tangential developables, and their secant varieties.
//!
//! A variety is given by a parametrization. The degree-`d` piece of its ideal
//! is the kernel of the linear map sending a form F to F ∘ (parametrization),
//! read off coefficient by coefficient. No Gröbner machinery is involved.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::mpoly::{MPoly, Monomial};
use crate::exactla::{Echelon, MatQ, Rational, SparseVec};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("r must be at least 2, got {0}")]
    SmallR(usize),
    #[error("jet order {b} out of range for r = {r}")]
    JetOrder { r: usize, b: usize },
    #[error("secant index must be at least 1")]
    SecantZero,
    #[error("Hankel parameters out of range: r={r}, alpha={alpha}, size={size}")]
    Hankel { r: usize, alpha: usize, size: usize },
    #[error("piece elements must be homogeneous of degree {0}")]
    NotHomogeneous(u32),
}

/// The family Σⱼ λⱼ c⁽ʲ⁾(t) over the affine Veronese curve c(t) = (1, t, …, t^{r−1}).
///
/// Variables of the parameter ring: `t` is index 0 and `λ_j` is index `j+1`.
#[derive(Clone, Debug)]
pub struct JetFamily {
    pub r: usize,
    pub b: usize,
    pub components: Vec<MPoly>,
}

pub fn veronese_jet(r: usize, b: usize) -> Result<JetFamily, IdealError> {
    if r < 1 || b >= r {
        return Err(IdealError::JetOrder { r, b });
    }
    Ok(JetFamily {
        r,
        b,
        components: jet_components(r, b, 1),
    })
}

/// Components of Σ_σ Σ_j λ_{σ,j} c⁽ʲ⁾(t_σ) over `s` points.
///
/// Point σ uses variable `σ(b+2)` for t and the next `b+1` for λ.
fn jet_components(r: usize, b: usize, s: usize) -> Vec<MPoly> {
    let nv = s * (b + 2);
    let mut comps = vec![MPoly::zero(nv, 0); r];
    for sigma in 0..s {
        let tv = sigma * (b + 2);
        for (m, comp) in comps.iter_mut().enumerate() {
            for j in 0..=b.min(m) {
                // d^j/dt^j t^m = m!/(m−j)! t^{m−j}
                let mut coef = Rational::one();
                for q in 0..j {
                    coef *= Rational::from_int((m - q) as i64);
                }
                let mut e = vec![0u8; nv];
                e[tv] = (m - j) as u8;
                e[tv + 1 + j] = 1;
                comp.add_term(Monomial::from_exponents(&e), coef);
            }
        }
    }
    comps
}

/// Secant variety through `s` points of the `b`-th tangential developable.
/// `s = 1` is the tangential developable itself and `b = 0` the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variety {
    pub secant: usize,
    pub tangential: usize,
}

impl Variety {
    pub fn curve() -> Self {
        Variety {
            secant: 1,
            tangential: 0,
        }
    }

    pub fn tangential(b: usize) -> Self {
        Variety {
            secant: 1,
            tangential: b,
        }
    }

    pub fn secant(s: usize, b: usize) -> Self {
        Variety {
            secant: s,
            tangential: b,
        }
    }

    /// Parametrization of the affine cone, in `secant·(tangential+2)` variables.
    pub fn parametrization(&self, r: usize) -> Result<Vec<MPoly>, IdealError> {
        if r < 2 {
            return Err(IdealError::SmallR(r));
        }
        if self.secant == 0 {
            return Err(IdealError::SecantZero);
        }
        if self.tangential >= r {
            return Err(IdealError::JetOrder {
                r,
                b: self.tangential,
            });
        }
        Ok(jet_components(r, self.tangential, self.secant))
    }

    /// True when the parametrization is dominant onto ℚ^r, so the ideal is 0.
    ///
    /// The Jacobian is evaluated at a fixed point with distinct parameters; its
    /// rank there bounds the generic rank from below.
    pub fn fills_space(&self, r: usize) -> Result<bool, IdealError> {
        let comps = self.parametrization(r)?;
        let nv = self.secant * (self.tangential + 2);
        let point: Vec<Rational> = (0..nv)
            .map(|i| Rational::from_int((i as i64 * 7 + 3) % 11 + 1 + i as i64))
            .collect();
        let rows: Vec<Vec<Rational>> = comps
            .iter()
            .map(|c| (0..nv).map(|v| c.derivative(v).eval(&point)).collect())
            .collect();
        Ok(MatQ::from_rows(&rows).rank() == r)
    }
}

/// A subspace of homogeneous forms of one degree, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: u32,
    /// Ring of the basis polynomials.
    pub num_x: usize,
    pub num_p: usize,
    pub basis: Vec<MPoly>,
    /// Row `i` gives `basis[i]` in [`GradedPiece::monomials`].
    pub coord: MatQ,
}

impl GradedPiece {
    /// Degree-`d` monomials in the `x` block of the ring, graded lex ascending.
    pub fn x_monomials(num_x: usize, num_p: usize, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(num_x, d)
            .into_iter()
            .map(|m| {
                let mut e = m.exponents().to_vec();
                e.extend(std::iter::repeat_n(0, num_p));
                Monomial::from_exponents(&e)
            })
            .collect()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        Self::x_monomials(self.num_x, self.num_p, self.degree)
    }

    /// Canonical span of homogeneous forms in the x variables.
    pub fn from_polys(
        num_x: usize,
        num_p: usize,
        degree: u32,
        polys: &[MPoly],
    ) -> Result<GradedPiece, IdealError> {
        let mons = Self::x_monomials(num_x, num_p, degree);
        let mut e = Echelon::new(mons.len());
        for f in polys {
            if f.is_zero() {
                continue;
            }
            let c = f
                .coords_in(&mons)
                .ok_or(IdealError::NotHomogeneous(degree))?;
            e.insert_dense(&c);
        }
        Ok(Self::from_echelon(num_x, num_p, degree, &mons, &e))
    }

    fn from_echelon(num_x: usize, num_p: usize, degree: u32, mons: &[Monomial], e: &Echelon) -> Self {
        let rows = e.dense_rows();
        let basis = rows
            .iter()
            .map(|c| MPoly::from_coords(num_x, num_p, mons, c))
            .collect();
        let coord = if rows.is_empty() {
            MatQ::zeros(0, mons.len())
        } else {
            MatQ::from_rows(&rows)
        };
        GradedPiece {
            degree,
            num_x,
            num_p,
            basis,
            coord,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        if f.is_zero() {
            return true;
        }
        let mons = self.monomials();
        let Some(c) = f.coords_in(&mons) else {
            return false;
        };
        let mut e = Echelon::new(mons.len());
        for r in self.coord.row_vecs() {
            e.insert_dense(&r);
        }
        e.contains(&crate::exactla::to_sparse(&c))
    }

    pub fn contains_piece(&self, other: &GradedPiece) -> bool {
        other.degree == self.degree && other.basis.iter().all(|f| self.contains(f))
    }
}

/// {F of degree d in x₁..x_r : F vanishes on the variety}, as polynomials in
/// the (r, r) ring.
pub fn vanishing_ideal_piece(r: usize, variety: Variety, d: u32) -> Result<GradedPiece, IdealError> {
    let comps = variety.parametrization(r)?;
    let mons = GradedPiece::x_monomials(r, r, d);
    if variety.fills_space(r)? {
        return Ok(GradedPiece::from_echelon(r, r, d, &mons, &Echelon::new(mons.len())));
    }
    let nv = comps[0].nvars();
    // Images of every monomial of degree ≤ d, built by multiplying one
    // component onto a previously computed monomial.
    let mut images: HashMap<Vec<u8>, MPoly> = HashMap::new();
    images.insert(vec![0u8; r], MPoly::constant(nv, 0, Rational::one()));
    for deg in 1..=d {
        for m in Monomial::all_of_degree(r, deg) {
            let e = m.exponents().to_vec();
            let i = e.iter().position(|&x| x > 0).unwrap();
            let mut prev = e.clone();
            prev[i] -= 1;
            let img = &images[&prev] * &comps[i];
            images.insert(e, img);
        }
    }
    // One equation per parameter monomial.
    let mut eqs: BTreeMap<Monomial, SparseVec> = BTreeMap::new();
    for (col, m) in mons.iter().enumerate() {
        let img = &images[&m.exponents()[..r].to_vec()];
        for (pm, c) in img.terms() {
            eqs.entry(pm.clone()).or_default().push((col, c.clone()));
        }
    }
    let mut e = Echelon::new(mons.len());
    for row in eqs.values() {
        e.insert(row);
    }
    let ker = e.kernel_basis();
    let polys: Vec<MPoly> = ker
        .iter()
        .map(|c| MPoly::from_coords(r, r, &mons, c))
        .collect();
    GradedPiece::from_polys(r, r, d, &polys)
}

/// Re-check that every element of `piece` composes to zero with the
/// parametrization of `variety`.
pub fn verify_vanishing(piece: &GradedPiece, variety: Variety) -> Result<bool, IdealError> {
    let r = piece.num_x;
    let comps = variety.parametrization(r)?;
    let nv = comps[0].nvars();
    let mut images: Vec<MPoly> = comps.clone();
    images.extend((0..piece.num_p).map(|_| MPoly::zero(nv, 0)));
    Ok(piece.basis.iter().all(|f| f.substitute(&images).is_zero()))
}

/// Span of the `size × size` minors of the (alpha+1) × (r−alpha) Hankel
/// matrix with entries x_{i+j+1} (0-based i, j).
pub fn hankel_minors(r: usize, alpha: usize, size: usize) -> Result<GradedPiece, IdealError> {
    let bad = IdealError::Hankel { r, alpha, size };
    if alpha < 1 || 2 * alpha > r || size < 1 || size > (alpha + 1).min(r - alpha) {
        return Err(bad);
    }
    let rows = alpha + 1;
    let cols = r - alpha;
    let entry = |i: usize, j: usize| MPoly::x(r, r, i + j + 1);
    let mut minors = Vec::new();
    for rs in combinations(rows, size) {
        for cs in combinations(cols, size) {
            let m: Vec<Vec<MPoly>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| entry(i, j)).collect())
                .collect();
            minors.push(poly_det(&m));
        }
    }
    GradedPiece::from_polys(r, r, size as u32, &minors)
}

/// All increasing `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn poly_det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    if n == 1 {
        return m[0][0].clone();
    }
    let (nx, np) = (m[0][0].num_x(), m[0][0].num_p());
    let mut acc = MPoly::zero(nx, np);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let t = &m[0][j] * &poly_det(&minor);
        let s = if j % 2 == 0 { 1 } else { -1 };
        acc.add_assign_scaled(&t, &Rational::from_int(s));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jets() {
        let f = veronese_jet(3, 0).unwrap();
        let s: Vec<String> = f.components.iter().map(|c| c.to_string()).collect();
        assert_eq!(s, vec!["x2", "x1*x2", "x1^2*x2"]);
        assert!(veronese_jet(3, 3).is_err());
    }

    #[test]
    fn quartic_curve_quadrics() {
        let p = vanishing_ideal_piece(4, Variety::curve(), 2).unwrap();
        assert_eq!(p.dim(), 3);
        let h = hankel_minors(4, 1, 2).unwrap();
        assert_eq!(p, h);
        assert!(verify_vanishing(&p, Variety::curve()).unwrap());
    }

    #[test]
    fn rank_shortcut_and_dims() {
        assert!(Variety::secant(2, 0).fills_space(4).unwrap());
        assert!(!Variety::secant(2, 0).fills_space(5).unwrap());
        assert_eq!(vanishing_ideal_piece(5, Variety::curve(), 2).unwrap().dim(), 6);
        assert_eq!(vanishing_ideal_piece(6, Variety::tangential(1), 2).unwrap().dim(), 3);
        assert_eq!(hankel_minors(5, 2, 3).unwrap().dim(), 1);
        assert_eq!(hankel_minors(5, 2, 1).unwrap().dim(), 5);
    }
}
