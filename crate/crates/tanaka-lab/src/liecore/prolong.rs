//! Standard, modified and Tanaka prolongations.
//!
//! All spaces are [`LinMapSpace`]s of maps V → (previous level), where the
//! previous level is written in its own canonical basis. Equality of two
//! prolongations is therefore decided by comparing canonical bases.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::algebra::GradedLieAlg;
use super::linmap::{csp_scalar, LinMapSpace};
use crate::exactla::{Echelon, MatQ, Rational, SparseVec};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ProlongError {
    #[error("anchor pair spans an ω-null plane")]
    BadAnchor,
    #[error("form must be a skew-symmetric {0}×{0} matrix")]
    BadForm(usize),
    #[error("map space has source {0}, expected {1}")]
    Shape(usize, usize),
    #[error("g_minus must live in degrees −2 and −1")]
    NotContactGraded,
    #[error("g_minus is not generated by its degree −1 part")]
    NotFundamental,
    #[error("element {0} of g0 is not a derivation of g_minus")]
    NotDerivation(usize),
    #[error("dim V = {0} is below 4; modified and Tanaka prolongations need not agree")]
    SmallV(usize),
    #[error("W is not closed under commutators")]
    NotClosed,
    #[error("element {0} of W is not conformally symplectic")]
    NotCsp(usize),
    #[error("max degree {0} exceeds the hard cap {1}")]
    Cap(usize, usize),
}

/// Accumulates one equation with possibly repeated unknowns.
#[derive(Default)]
struct Row(BTreeMap<usize, Rational>);

impl Row {
    fn add(&mut self, i: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(Rational::zero);
        *e += c;
    }
    fn finish(self) -> SparseVec {
        self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

fn solve_kernel(rows: Vec<SparseVec>, nv: usize) -> Vec<Vec<Rational>> {
    let mut e = Echelon::new(nv);
    for r in rows {
        if !r.is_empty() {
            e.insert(&r);
        }
    }
    // Canonicalize the kernel: RREF of its basis.
    let mut k = Echelon::new(nv);
    for v in e.kernel_basis_sparse() {
        k.insert(&v);
    }
    k.dense_rows()
}

fn check_anchor(omega: &MatQ, anchor: (&[Rational], &[Rational])) -> Result<Rational, ProlongError> {
    let w = omega.bilinear(anchor.0, anchor.1);
    if w.is_zero() {
        Err(ProlongError::BadAnchor)
    } else {
        Ok(w)
    }
}

fn check_form(w: &LinMapSpace, omega: &MatQ) -> Result<(), ProlongError> {
    let n = w.source_dim();
    if omega.rows() != n || omega.cols() != n || !omega.is_skew() {
        return Err(ProlongError::BadForm(n));
    }
    Ok(())
}

/// Unknown φ ∈ Hom(V, W): φ(v_a) = Σ_β φ[β][a] w_β, flattened at β·n + a.
/// Pushes the coefficient rows of S(φ)(v_a, v_c)_τ for all a < c, τ.
fn spencer_rows(w: &LinMapSpace) -> Vec<((usize, usize, usize), Row)> {
    let n = w.source_dim();
    let t = w.target_dim();
    let mut out = Vec::new();
    for a in 0..n {
        for c in a + 1..n {
            for tau in 0..t {
                let mut row = Row::default();
                for (beta, wb) in w.basis().iter().enumerate() {
                    row.add(beta * n + a, &wb[(tau, c)]);
                    row.add(beta * n + c, &-&wb[(tau, a)]);
                }
                out.push(((a, c, tau), row));
            }
        }
    }
    out
}

fn project_phi(vecs: &[Vec<Rational>], n: usize, d: usize) -> LinMapSpace {
    let flat: Vec<Vec<Rational>> = vecs.iter().map(|v| v[..d * n].to_vec()).collect();
    LinMapSpace::from_flat(n, d, &flat)
}

/// First standard prolongation {φ ∈ Hom(V, W) : φ(v₁)v₂ = φ(v₂)v₁}.
pub fn standard_prolongation(w: &LinMapSpace) -> LinMapSpace {
    let n = w.source_dim();
    let d = w.dim();
    let rows: Vec<SparseVec> = spencer_rows(w).into_iter().map(|(_, r)| r.finish()).collect();
    let ker = solve_kernel(rows, d * n);
    project_phi(&ker, n, d)
}

/// Modified prolongation: φ ∈ Hom(V, W) with S(φ)(v₁,v₂) = ω(v₁,v₂)·v for
/// some v, solved jointly in (φ, v).
///
/// The anchor pair is only validated here; [`modified_prolongation_anchored`]
/// eliminates v through it instead.
pub fn modified_prolongation(
    w: &LinMapSpace,
    omega: &MatQ,
    anchor: (&[Rational], &[Rational]),
) -> Result<LinMapSpace, ProlongError> {
    check_form(w, omega)?;
    check_anchor(omega, anchor)?;
    let n = w.source_dim();
    let d = w.dim();
    let t = w.target_dim();
    let nv = d * n + t;
    let rows: Vec<SparseVec> = spencer_rows(w)
        .into_iter()
        .map(|((a, c, tau), mut row)| {
            row.add(d * n + tau, &-&omega[(a, c)]);
            row.finish()
        })
        .collect();
    let ker = solve_kernel(rows, nv);
    Ok(project_phi(&ker, n, d))
}

/// Modified prolongation as the kernel of the modified Spencer operator
/// S̃(φ) = S(φ) − ω(·,·)·S(φ)(v̄₁,v̄₂)/ω(v̄₁,v̄₂).
pub fn modified_prolongation_anchored(
    w: &LinMapSpace,
    omega: &MatQ,
    anchor: (&[Rational], &[Rational]),
) -> Result<LinMapSpace, ProlongError> {
    check_form(w, omega)?;
    let wbar = check_anchor(omega, anchor)?;
    let n = w.source_dim();
    let d = w.dim();
    let t = w.target_dim();
    let srows = spencer_rows(w);
    let mut by_key: BTreeMap<(usize, usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
    for (k, r) in &srows {
        by_key.insert(*k, r.0.clone());
    }
    // S(φ)(v̄₁, v̄₂)_τ = Σ_{a<c} (v̄₁_a v̄₂_c − v̄₁_c v̄₂_a) S(φ)(v_a, v_c)_τ
    let mut sbar: Vec<Row> = (0..t).map(|_| Row::default()).collect();
    for a in 0..n {
        for c in a + 1..n {
            let f = &anchor.0[a] * &anchor.1[c] - &anchor.0[c] * &anchor.1[a];
            if f.is_zero() {
                continue;
            }
            for (tau, row) in sbar.iter_mut().enumerate() {
                for (i, x) in &by_key[&(a, c, tau)] {
                    row.add(*i, &(&f * x));
                }
            }
        }
    }
    let sbar: Vec<BTreeMap<usize, Rational>> = sbar.into_iter().map(|r| r.0).collect();
    let mut rows = Vec::new();
    for ((a, c, tau), mut row) in srows {
        let f = -(&omega[(a, c)] / &wbar);
        for (i, x) in &sbar[tau] {
            row.add(*i, &(&f * x));
        }
        rows.push(row.finish());
    }
    let ker = solve_kernel(rows, d * n);
    Ok(project_phi(&ker, n, d))
}

/// Iterated modified prolongations W, W^(1m), W^(2m), … up to `depth`
/// (stopping early at 0).
pub fn modified_tower(
    w: &LinMapSpace,
    omega: &MatQ,
    anchor: (&[Rational], &[Rational]),
    depth: usize,
) -> Result<Vec<LinMapSpace>, ProlongError> {
    let mut out = vec![w.clone()];
    for _ in 0..depth {
        let last = out.last().unwrap();
        if last.dim() == 0 {
            break;
        }
        let next = modified_prolongation(last, omega, anchor)?;
        out.push(next);
    }
    Ok(out)
}

/// One degree of a graded prolongation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TanakaLevel {
    pub degree: usize,
    /// Restriction to g₋₁, as maps V → g_{degree−1}.
    pub on_v: LinMapSpace,
    /// For each basis element, its action g₋₂ → g_{degree−2}
    /// (a `dim g_{degree−2} × dim g₋₂` matrix).
    pub on_eta: Vec<MatQ>,
}

impl TanakaLevel {
    pub fn dim(&self) -> usize {
        self.on_v.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TanakaProlongation {
    pub dim_minus2: usize,
    pub dim_minus1: usize,
    /// Levels of degree 0, 1, 2, … (the last one may be zero).
    pub levels: Vec<TanakaLevel>,
    /// First positive degree with a zero space, if reached.
    pub first_zero: Option<usize>,
}

impl TanakaProlongation {
    /// Dimensions by degree, starting at −2.
    pub fn per_degree(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        m.insert(-2, self.dim_minus2);
        m.insert(-1, self.dim_minus1);
        for lv in &self.levels {
            if lv.dim() > 0 || lv.degree == 0 {
                m.insert(lv.degree as i32, lv.dim());
            }
        }
        m
    }

    /// Dimensions of g₁, g₂, … as computed (including the terminal zero).
    pub fn positive_dims(&self) -> Vec<usize> {
        self.levels.iter().skip(1).map(|l| l.dim()).collect()
    }

    pub fn total(&self) -> usize {
        self.dim_minus2 + self.dim_minus1 + self.levels.iter().map(|l| l.dim()).sum::<usize>()
    }

    pub fn is_finite(&self) -> bool {
        self.first_zero.is_some()
    }
}

struct Minus {
    n: usize,
    m: usize,
    /// ω[b] is the n×n matrix of η_b-coefficients of [v_a, v_c].
    omega: Vec<MatQ>,
}

fn split_minus(g: &GradedLieAlg) -> Result<Minus, ProlongError> {
    if g.degree.iter().any(|&d| d != -1 && d != -2) {
        return Err(ProlongError::NotContactGraded);
    }
    let vs = g.piece(-1);
    let es = g.piece(-2);
    let (n, m) = (vs.len(), es.len());
    let mut omega = vec![MatQ::zeros(n, n); m];
    for (a, &ia) in vs.iter().enumerate() {
        for (c, &ic) in vs.iter().enumerate() {
            let br = g.alg.bracket_basis(ia, ic);
            for (b, &ib) in es.iter().enumerate() {
                omega[b][(a, c)] = br[ib].clone();
            }
        }
    }
    // Fundamental: the ω_b must be linearly independent.
    let mut e = Echelon::new(n * n);
    for w in &omega {
        if !e.insert_dense(w.entries()) {
            return Err(ProlongError::NotFundamental);
        }
    }
    Ok(Minus { n, m, omega })
}

/// Induced action on g₋₂ of a degree-0 map A, if A is a derivation.
fn induced_on_eta(mi: &Minus, a: &MatQ) -> Option<MatQ> {
    let (n, m) = (mi.n, mi.m);
    // Unknown B (m×m) with Σ_b ω^b_{ac} B[b'][b] = (Aᵀω^{b'} + ω^{b'}A)_{ac}.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a_ in 0..n {
        for c in a_ + 1..n {
            for bp in 0..m {
                let mut row = vec![Rational::zero(); m * m];
                for b in 0..m {
                    row[bp * m + b] = mi.omega[b][(a_, c)].clone();
                }
                let mut val = Rational::zero();
                for k in 0..n {
                    val += &a[(k, a_)] * &mi.omega[bp][(k, c)];
                    val += &a[(k, c)] * &mi.omega[bp][(a_, k)];
                }
                rows.push(row);
                rhs.push(val);
            }
        }
    }
    if rows.is_empty() {
        return Some(MatQ::zeros(m, m));
    }
    let sol = crate::exactla::solve(&MatQ::from_rows(&rows), &rhs)?;
    Some(MatQ::from_vec(m, m, sol))
}

/// Tanaka prolongation of (g₋, g₀) up to `max_degree` (default dim V / 2,
/// hard cap dim V), stopping at the first zero space.
pub fn tanaka_prolongation(
    g_minus: &GradedLieAlg,
    g0: &LinMapSpace,
    max_degree: Option<usize>,
) -> Result<TanakaProlongation, ProlongError> {
    let mi = split_minus(g_minus)?;
    let (n, m) = (mi.n, mi.m);
    if g0.source_dim() != n || g0.target_dim() != n {
        return Err(ProlongError::Shape(g0.source_dim(), n));
    }
    let cap = n.max(1);
    let max_degree = max_degree.unwrap_or((n / 2).max(1));
    if max_degree > cap {
        return Err(ProlongError::Cap(max_degree, cap));
    }
    let on_eta0: Vec<MatQ> = g0
        .basis()
        .iter()
        .enumerate()
        .map(|(i, a)| induced_on_eta(&mi, a).ok_or(ProlongError::NotDerivation(i)))
        .collect::<Result<_, _>>()?;
    let mut levels = vec![TanakaLevel {
        degree: 0,
        on_v: g0.clone(),
        on_eta: on_eta0,
    }];
    let mut first_zero = None;
    if g0.dim() == 0 {
        first_zero = Some(1);
    }
    // dim of g_j for j ≥ −2
    let dim_of = |levels: &Vec<TanakaLevel>, j: i64| -> usize {
        match j {
            -2 => m,
            -1 => n,
            _ => levels[j as usize].dim(),
        }
    };
    let mut i = 1usize;
    while first_zero.is_none() && i <= max_degree {
        let d1 = dim_of(&levels, i as i64 - 1);
        let d2 = dim_of(&levels, i as i64 - 2);
        let off = d1 * n;
        let nv = off + d2 * m;
        let prev = &levels[i - 1];
        let mut rows: Vec<SparseVec> = Vec::new();
        // (a) Σ_b ω^b_{ac} φ(η_b) = φ(v_a)(v_c) − φ(v_c)(v_a), in g_{i−2}.
        let eq_a: Vec<Vec<SparseVec>> = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut out = Vec::new();
                for c in a + 1..n {
                    for g in 0..d2 {
                        let mut row = Row::default();
                        for b in 0..m {
                            row.add(off + g * m + b, &mi.omega[b][(a, c)]);
                        }
                        for (beta, l) in prev.on_v.basis().iter().enumerate() {
                            row.add(beta * n + a, &-&l[(g, c)]);
                            row.add(beta * n + c, &l[(g, a)]);
                        }
                        out.push(row.finish());
                    }
                }
                out
            })
            .collect();
        rows.extend(eq_a.into_iter().flatten());
        // (b) [φ(η_b), v_c] − φ(v_c)(η_b) = 0, in g_{i−3}.
        let d3 = dim_of(&levels, i as i64 - 3);
        for b in 0..m {
            for c in 0..n {
                for g in 0..d3 {
                    let mut row = Row::default();
                    if i == 1 {
                        // φ(η_b) ∈ V, [u, v_c] = Σ_e ω^e(u, v_c) η_e; g indexes η.
                        for ap in 0..n {
                            row.add(off + ap * m + b, &mi.omega[g][(ap, c)]);
                        }
                    } else {
                        for (bp, l) in levels[i - 2].on_v.basis().iter().enumerate() {
                            row.add(off + bp * m + b, &l[(g, c)]);
                        }
                    }
                    for (beta, e) in prev.on_eta.iter().enumerate() {
                        row.add(beta * n + c, &-&e[(g, b)]);
                    }
                    rows.push(row.finish());
                }
            }
        }
        // (c) φ(η_b)(η_e) − φ(η_e)(η_b) = 0, in g_{i−4}.
        if i >= 2 {
            let d4 = dim_of(&levels, i as i64 - 4);
            for b in 0..m {
                for e_ in b + 1..m {
                    for g in 0..d4 {
                        let mut row = Row::default();
                        for (bp, e) in levels[i - 2].on_eta.iter().enumerate() {
                            row.add(off + bp * m + b, &e[(g, e_)]);
                            row.add(off + bp * m + e_, &-&e[(g, b)]);
                        }
                        rows.push(row.finish());
                    }
                }
            }
        }
        let ker = solve_kernel(rows, nv);
        // g₋ fundamental ⇒ φ is determined by its restriction to V.
        if ker.iter().any(|v| v[..off].iter().all(|x| x.is_zero())) {
            return Err(ProlongError::NotFundamental);
        }
        let on_v = project_phi(&ker, n, d1);
        let on_eta: Vec<MatQ> = ker
            .iter()
            .map(|v| MatQ::from_vec(d2, m, v[off..].to_vec()))
            .collect();
        let dim = on_v.dim();
        levels.push(TanakaLevel {
            degree: i,
            on_v,
            on_eta,
        });
        if dim == 0 {
            first_zero = Some(i);
        }
        i += 1;
    }
    Ok(TanakaProlongation {
        dim_minus2: m,
        dim_minus1: n,
        levels,
        first_zero,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeAgreement {
    pub degree: usize,
    pub modified_dim: usize,
    pub tanaka_dim: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub degrees: Vec<DegreeAgreement>,
    pub all_equal: bool,
    pub terminated_at: Option<usize>,
}

/// Validates that `w` is a subalgebra of 𝔠𝔰𝔭(V, ω).
pub fn validate_csp_subalgebra(w: &LinMapSpace, omega: &MatQ) -> Result<(), ProlongError> {
    check_form(w, omega)?;
    for (i, a) in w.basis().iter().enumerate() {
        if csp_scalar(a, omega).is_none() {
            return Err(ProlongError::NotCsp(i));
        }
    }
    if !w.is_closed_under_commutator() {
        return Err(ProlongError::NotClosed);
    }
    Ok(())
}

/// A pair (v̄₁, v̄₂) with ω(v̄₁, v̄₂) ≠ 0, first in lexicographic order of
/// coordinate vectors.
pub fn default_anchor(omega: &MatQ) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let n = omega.rows();
    for a in 0..n {
        for c in 0..n {
            if !omega[(a, c)].is_zero() {
                let mut u = vec![Rational::zero(); n];
                let mut v = vec![Rational::zero(); n];
                u[a] = Rational::one();
                v[c] = Rational::one();
                return Some((u, v));
            }
        }
    }
    None
}

/// Compares iterated modified prolongations of `w` with the Tanaka
/// prolongation of (Heisenberg(ω), w) degree by degree.
pub fn prolongations_agree(w: &LinMapSpace, omega: &MatQ, depth: usize) -> Result<AgreementReport, ProlongError> {
    let n = w.source_dim();
    if n < 4 {
        return Err(ProlongError::SmallV(n));
    }
    validate_csp_subalgebra(w, omega)?;
    let heis = super::algebra::heisenberg_extend(n, omega).map_err(|_| ProlongError::BadForm(n))?;
    let tan = tanaka_prolongation(&heis, w, Some(depth.min(n)))?;
    let (u, v) = default_anchor(omega).ok_or(ProlongError::BadAnchor)?;
    let tower = modified_tower(w, omega, (&u, &v), depth)?;
    let mut degrees = Vec::new();
    for i in 1..=depth {
        let md = tower.get(i).map(|s| s.dim());
        let td = tan.levels.get(i).map(|l| l.dim());
        let (md, td) = match (md, td) {
            (Some(a), Some(b)) => (a, b),
            // Both towers stopped at zero earlier.
            (None, None) => break,
            (a, b) => (a.unwrap_or(0), b.unwrap_or(0)),
        };
        let equal = match (tower.get(i), tan.levels.get(i)) {
            (Some(a), Some(b)) => *a == b.on_v,
            _ => md == 0 && td == 0,
        };
        degrees.push(DegreeAgreement {
            degree: i,
            modified_dim: md,
            tanaka_dim: td,
            equal,
        });
    }
    let all_equal = degrees.iter().all(|d| d.equal);
    Ok(AgreementReport {
        degrees,
        all_equal,
        terminated_at: tan.first_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{csp_algebra, heisenberg_extend, standard_form};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn zero_space() {
        let w = LinMapSpace::zero(4, 4);
        let om = standard_form(4);
        let (u, v) = default_anchor(&om).unwrap();
        assert_eq!(modified_prolongation(&w, &om, (&u, &v)).unwrap().dim(), 0);
    }

    #[test]
    fn anchor_validation() {
        let om = standard_form(4);
        let w = csp_algebra(&om);
        let u = vec![q(1), q(0), q(0), q(0)];
        assert_eq!(
            modified_prolongation(&w, &om, (&u, &u)),
            Err(ProlongError::BadAnchor)
        );
    }

    #[test]
    fn two_dim_diagonal_counterexample() {
        let om = standard_form(2);
        let diag = LinMapSpace::span(
            2,
            2,
            &[MatQ::from_i64(2, 2, &[1, 0, 0, 0]), MatQ::from_i64(2, 2, &[0, 0, 0, 1])],
        );
        let (u, v) = default_anchor(&om).unwrap();
        let m1 = modified_prolongation(&diag, &om, (&u, &v)).unwrap();
        assert_eq!(m1, LinMapSpace::full(2, 2));
        let h = heisenberg_extend(2, &om).unwrap();
        let t = tanaka_prolongation(&h, &diag, Some(2)).unwrap();
        assert_eq!(t.levels[1].dim(), 2);
        assert!(m1.contains_space(&t.levels[1].on_v));
        assert!(matches!(prolongations_agree(&diag, &om, 3), Err(ProlongError::SmallV(2))));
    }
}
