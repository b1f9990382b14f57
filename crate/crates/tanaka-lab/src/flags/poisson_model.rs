//! The Poisson-algebra model of 𝔊_{k,l}.
//!
//! 𝔤̃ is spanned by the 𝔤𝔩(2) quadratics X, Y, H, Z, the momenta p₁..p_r and
//! the graded ideal pieces I₀ = ⟨1⟩, I₁ = ⟨x₁..x_r⟩, I_s (s ≥ 2) of the
//! secant varieties of the (k−2)-th tangential developable. 𝔊_{k,l} adjoins
//! Z′ with [Z′, f] = (deg f − 2) f.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::model::FlagsError;
use super::symbol::build_symbol;
use crate::exactla::{solve, MatQ, Rational};
use crate::liecore::{LieAlg, LinMapSpace};
use crate::poly::{poisson, vanishing_ideal_piece, z_element, MPoly, Monomial, Variety};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

#[derive(Clone, Debug, Serialize)]
pub struct PoissonModel {
    pub k: usize,
    pub l: usize,
    pub r: usize,
    pub labels: Vec<String>,
    /// Polynomial elements of 𝔤̃ in label order (Z′ excluded).
    pub elements: Vec<MPoly>,
    /// Eigenvalue of Z′ on each basis element, Z′ itself last (degree 0).
    pub degrees: Vec<i32>,
    /// Dimension of each I_s, s = 0, 1, 2, …
    pub ideal_dims: Vec<usize>,
    pub alg: LieAlg,
}

impl PoissonModel {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn graded_dims(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for d in &self.degrees {
            *m.entry(*d).or_insert(0) += 1;
        }
        m
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|s| s == label)
    }
}

/// X = Σ_{i=1}^{r−1} (−1)^{i−1}(r−i) x_{i+1} p_{r+1−i}.
pub fn poisson_x(r: usize) -> MPoly {
    let mut x = MPoly::zero(r, r);
    for i in 1..r {
        let s = if i % 2 == 1 { 1 } else { -1 };
        let t = &MPoly::x(r, r, i + 1) * &MPoly::p(r, r, r + 1 - i);
        x.add_assign_scaled(&t, &q(s * (r - i) as i64));
    }
    x
}

/// H = Σ (−1)^{i−1}(r+1−2i) x_i p_{r+1−i}, rescaled so that {H, X} = 2X.
pub fn poisson_h(r: usize) -> Result<MPoly, FlagsError> {
    let mut h = MPoly::zero(r, r);
    for i in 1..=r {
        let s = if i % 2 == 1 { 1 } else { -1 };
        let t = &MPoly::x(r, r, i) * &MPoly::p(r, r, r + 1 - i);
        h.add_assign_scaled(&t, &q(s * (r as i64 + 1 - 2 * i as i64)));
    }
    let x = poisson_x(r);
    let hx = poisson(&h, &x).expect("same ring");
    let lead = x.terms().next().expect("X nonzero");
    let mu = &hx.coeff(lead.0) / lead.1;
    if mu.is_zero() || hx != x.scale(&mu) {
        return Err(FlagsError::Closure("{H, X} is not proportional to X".into()));
    }
    Ok(h.scale(&(&q(2) / &mu)))
}

/// The lowering element forced by {H, Y} = −2Y and {X, Y} = H.
pub fn poisson_y(r: usize, x: &MPoly, h: &MPoly) -> Result<MPoly, FlagsError> {
    let unknowns: Vec<MPoly> = (1..=r)
        .flat_map(|i| (1..=r).map(move |j| (i, j)))
        .map(|(i, j)| &MPoly::x(r, r, i) * &MPoly::p(r, r, j))
        .collect();
    let mons: Vec<Monomial> = unknowns.iter().map(|u| u.terms().next().unwrap().0.clone()).collect();
    let coords = |f: &MPoly| {
        f.coords_in(&mons)
            .ok_or_else(|| FlagsError::Closure("bracket leaves the x·p quadratics".into()))
    };
    let nu = unknowns.len();
    let nm = mons.len();
    let mut a = MatQ::zeros(2 * nm, nu);
    for (c, u) in unknowns.iter().enumerate() {
        let hy = &poisson(h, u).unwrap() + &u.scale(&q(2));
        let xy = poisson(x, u).unwrap();
        for (rw, v) in coords(&hy)?.into_iter().enumerate() {
            a[(rw, c)] = v;
        }
        for (rw, v) in coords(&xy)?.into_iter().enumerate() {
            a[(nm + rw, c)] = v;
        }
    }
    let mut b = vec![Rational::zero(); nm];
    b.extend(coords(h)?);
    let sol = solve(&a, &b).ok_or_else(|| FlagsError::Closure("no Y completes the triple".into()))?;
    let mut y = MPoly::zero(r, r);
    for (c, u) in sol.iter().zip(&unknowns) {
        y.add_assign_scaled(u, c);
    }
    Ok(y)
}

/// Coordinates of homogeneous polynomials against a fixed family.
struct DegreeSolver {
    mons: Vec<Monomial>,
    mat: MatQ,
    members: Vec<usize>,
}

impl DegreeSolver {
    fn new(elements: &[MPoly], members: Vec<usize>) -> Self {
        let set: BTreeSet<Monomial> = members
            .iter()
            .flat_map(|&i| elements[i].terms().map(|(m, _)| m.clone()).collect::<Vec<_>>())
            .collect();
        let mons: Vec<Monomial> = set.into_iter().collect();
        let mut mat = MatQ::zeros(mons.len(), members.len());
        for (c, &i) in members.iter().enumerate() {
            for (rw, v) in elements[i].coords_in(&mons).unwrap().into_iter().enumerate() {
                mat[(rw, c)] = v;
            }
        }
        DegreeSolver { mons, mat, members }
    }

    fn express(&self, f: &MPoly) -> Option<Vec<(usize, Rational)>> {
        if f.is_zero() {
            return Some(Vec::new());
        }
        let b = f.coords_in(&self.mons)?;
        if f.terms().any(|(m, _)| self.mons.binary_search(m).is_err()) {
            return None;
        }
        let sol = solve(&self.mat, &b)?;
        Some(
            sol.into_iter()
                .zip(&self.members)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, &i)| (i, c))
                .collect(),
        )
    }
}

pub fn build_poisson_g(k: usize, l: usize) -> Result<PoissonModel, FlagsError> {
    if k < 2 {
        return Err(FlagsError::SmallK(k));
    }
    if l == 0 {
        return Err(FlagsError::ZeroL);
    }
    let r = 2 * k + l - 1;
    let x = poisson_x(r);
    let h = poisson_h(r)?;
    let y = poisson_y(r, &x, &h)?;
    let z = z_element(r);
    let mut labels: Vec<String> = vec!["X".into(), "Y".into(), "H".into(), "Z".into()];
    let mut elements = vec![x, y, h, z];
    for j in 1..=r {
        labels.push(format!("p{j}"));
        elements.push(MPoly::p(r, r, j));
    }
    labels.push("1".into());
    elements.push(MPoly::constant(r, r, Rational::one()));
    for i in 1..=r {
        labels.push(format!("x{i}"));
        elements.push(MPoly::x(r, r, i));
    }
    let mut ideal_dims = vec![1, r];
    for s in 2..=2 * r {
        let var = Variety::secant(s - 1, k - 2);
        if var.fills_space(r)? {
            break;
        }
        let piece = vanishing_ideal_piece(r, var, s as u32)?;
        ideal_dims.push(piece.dim());
        for (t, f) in piece.basis.iter().enumerate() {
            labels.push(format!("I{s}_{}", t + 1));
            elements.push(f.clone());
        }
    }
    let poly_deg: Vec<u32> = elements.iter().map(|f| f.homogeneous_degree().unwrap()).collect();
    let mut by_deg: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, d) in poly_deg.iter().enumerate() {
        by_deg.entry(*d).or_default().push(i);
    }
    let solvers: BTreeMap<u32, DegreeSolver> = by_deg
        .into_iter()
        .map(|(d, m)| (d, DegreeSolver::new(&elements, m)))
        .collect();
    let nz = elements.len();
    let mut table = Vec::new();
    for i in 0..nz {
        for j in i + 1..nz {
            let br = poisson(&elements[i], &elements[j]).unwrap();
            if br.is_zero() {
                continue;
            }
            let d = poly_deg[i] + poly_deg[j] - 2;
            let coeffs = solvers
                .get(&d)
                .and_then(|s| s.express(&br))
                .ok_or_else(|| FlagsError::Closure(format!("{{{}, {}}} leaves 𝔤̃", labels[i], labels[j])))?;
            table.push(((i, j), coeffs));
        }
        // [Z′, f] = (deg f − 2) f
        let w = poly_deg[i] as i64 - 2;
        if w != 0 {
            table.push(((nz, i), vec![(i, q(w))]));
        }
    }
    labels.push("Z'".into());
    let mut degrees: Vec<i32> = poly_deg.iter().map(|&d| d as i32 - 2).collect();
    degrees.push(0);
    let alg = LieAlg::new(labels.clone(), &table)?;
    Ok(PoissonModel {
        k,
        l,
        r,
        labels,
        elements,
        degrees,
        ideal_dims,
        alg,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeZeroComparison {
    /// dim of the gl(2)-part ⟨X, Y, H, Z, Z′⟩ acting on V.
    pub reductive_dim: usize,
    pub degree_zero_dim: usize,
    pub symbol_dim: usize,
    /// The degree-0 part of 𝔊_{k,l}, transported to V_e ⊕ V_f, equals 𝔰_{k,l}.
    pub equal: bool,
}

/// Transports ad(𝔤₀) on span(x, p) to the symplectic model via the diagonal
/// identification e_i ↦ d_i x_i, f_j ↦ g_j p_j matching the two shifts.
pub fn compare_degree_zero(model: &PoissonModel) -> Result<DegreeZeroComparison, FlagsError> {
    let r = model.r;
    let n = 2 * r;
    let mut d = vec![Rational::one(); r];
    let mut g = vec![Rational::one(); r];
    for i in 1..r {
        d[i] = &d[i - 1] * &q(-((r - i) as i64));
        g[i] = &g[i - 1] * &q(-(i as i64));
    }
    let mut phi = vec![Rational::zero(); n];
    phi[..r].clone_from_slice(&d);
    phi[r..].clone_from_slice(&g);
    let vbasis: Vec<MPoly> = (1..=r)
        .map(|i| MPoly::x(r, r, i))
        .chain((1..=r).map(|j| MPoly::p(r, r, j)))
        .collect();
    let lin: Vec<Monomial> = vbasis.iter().map(|f| f.terms().next().unwrap().0.clone()).collect();
    let transported = |f: &MPoly| -> Result<MatQ, FlagsError> {
        let mut a = MatQ::zeros(n, n);
        for (c, v) in vbasis.iter().enumerate() {
            let br = poisson(f, v).unwrap();
            let co = br
                .coords_in(&lin)
                .ok_or_else(|| FlagsError::Closure("degree-0 element does not preserve V".into()))?;
            for (rw, x) in co.into_iter().enumerate() {
                // Φ⁻¹ ad_f Φ
                a[(rw, c)] = &(&x * &phi[c]) / &phi[rw];
            }
        }
        Ok(a)
    };
    let mut reductive = Vec::new();
    let mut all = Vec::new();
    for (i, f) in model.elements.iter().enumerate() {
        if model.degrees[i] == 0 {
            let a = transported(f)?;
            if i < 4 {
                reductive.push(a.clone());
            }
            all.push(a);
        }
    }
    reductive.push(MatQ::identity(n).scale(&q(-1)));
    all.push(MatQ::identity(n).scale(&q(-1)));
    let red = LinMapSpace::span(n, n, &reductive);
    let g0 = LinMapSpace::span(n, n, &all);
    let sym = build_symbol(model.k, model.l)?;
    Ok(DegreeZeroComparison {
        reductive_dim: red.dim(),
        degree_zero_dim: g0.dim(),
        symbol_dim: sym.dim(),
        equal: g0 == sym,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_21_22() {
        let m = build_poisson_g(2, 1).unwrap();
        assert_eq!(m.dim(), 17);
        assert_eq!(m.ideal_dims, vec![1, 4, 3]);
        let m = build_poisson_g(2, 2).unwrap();
        assert_eq!(m.dim(), 23);
        assert_eq!(m.ideal_dims, vec![1, 5, 6, 1]);
    }

    #[test]
    fn gl2_part() {
        let r = 5;
        let x = poisson_x(r);
        let h = poisson_h(r).unwrap();
        let y = poisson_y(r, &x, &h).unwrap();
        let z = z_element(r);
        assert_eq!(poisson(&h, &x).unwrap(), x.scale(&q(2)));
        assert_eq!(poisson(&h, &y).unwrap(), y.scale(&q(-2)));
        assert_eq!(poisson(&x, &y).unwrap(), h);
        for f in [&x, &y, &h] {
            assert!(poisson(&z, f).unwrap().is_zero());
        }
    }

    #[test]
    fn degree_zero_matches_symbol() {
        for (k, l) in [(2, 1), (2, 2), (3, 1)] {
            let m = build_poisson_g(k, l).unwrap();
            let c = compare_degree_zero(&m).unwrap();
            assert_eq!(c.reductive_dim, 5);
            assert!(c.equal, "({k},{l}) {c:?}");
        }
    }
}
