//! Quasi-impulses, Hamiltonian fields and the characteristic line field on T*M.
//!
//! T*M = ℝ^{2N} with q at indices 0..N and p at N..2N. The canonical form is
//! σ̂ = Σ dp_a ∧ dq_a and u⃗ is fixed by i_{u⃗}σ̂ = −du, so u⃗ = (∂u/∂p, −∂u/∂q).

use serde::Serialize;

use crate::dist::{lie_bracket, DistError, DistributionSpec, PolyVectorField};
use crate::exactla::{MatQ, Rational};
use crate::poly::{combinations, MPoly};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum AbnormalError {
    #[error("distribution must have rank 3, got {0}")]
    Rank(usize),
    #[error("ambient dimension must be at least 3, got {0}")]
    SmallAmbient(usize),
    #[error("covector is not in the annihilator of D")]
    NotAnnihilating,
    #[error("covector annihilates D², the characteristic field vanishes")]
    InD2Perp,
    #[error("generators are dependent at the base point")]
    Dependent,
    #[error("point has length {0}, expected {1}")]
    PointLength(usize, usize),
    #[error("characteristic field is not tangent to the annihilator (u{0})")]
    NotTangent(usize),
    #[error("no admissible covector found in {0} samples")]
    Budget(usize),
    #[error(transparent)]
    Dist(#[from] DistError),
}

/// u_i = p·X_i and u_{ij} = p·[X_i, X_j] as polynomials on ℝ^{2N}.
#[derive(Clone, Debug, Serialize)]
pub struct QuasiImpulses {
    pub n: usize,
    pub u: Vec<MPoly>,
    pub u23: MPoly,
    pub u13: MPoly,
    pub u12: MPoly,
}

impl QuasiImpulses {
    /// u_{ij} for 0-based i, j.
    pub fn uij(&self, i: usize, j: usize) -> MPoly {
        match (i, j) {
            (0, 1) => self.u12.clone(),
            (1, 0) => self.u12.scale(&-Rational::one()),
            (0, 2) => self.u13.clone(),
            (2, 0) => self.u13.scale(&-Rational::one()),
            (1, 2) => self.u23.clone(),
            (2, 1) => self.u23.scale(&-Rational::one()),
            _ => MPoly::zero(2 * self.n, 0),
        }
    }
}

pub(crate) fn check_rank3(d: &DistributionSpec) -> Result<usize, AbnormalError> {
    if d.generators.len() != 3 {
        return Err(AbnormalError::Rank(d.generators.len()));
    }
    if d.ambient_dim < 3 {
        return Err(AbnormalError::SmallAmbient(d.ambient_dim));
    }
    Ok(d.ambient_dim)
}

/// Embeds a polynomial on M into the ring of T*M.
pub fn lift_function(f: &MPoly, n: usize) -> MPoly {
    let map: Vec<usize> = (0..n).collect();
    f.embed(2 * n, 0, &map)
}

/// p·X as a polynomial on T*M.
pub fn impulse(x: &PolyVectorField) -> MPoly {
    let n = x.ambient_dim();
    let mut u = MPoly::zero(2 * n, 0);
    for (a, c) in x.components().iter().enumerate() {
        if !c.is_zero() {
            u = &u + &(&lift_function(c, n) * &MPoly::var(2 * n, 0, n + a));
        }
    }
    u
}

pub fn quasi_impulses(d: &DistributionSpec) -> Result<QuasiImpulses, AbnormalError> {
    let n = check_rank3(d)?;
    let g = &d.generators;
    let u = g.iter().map(impulse).collect();
    Ok(QuasiImpulses {
        n,
        u,
        u23: impulse(&lie_bracket(&g[1], &g[2])?),
        u13: impulse(&lie_bracket(&g[0], &g[2])?),
        u12: impulse(&lie_bracket(&g[0], &g[1])?),
    })
}

/// u⃗ = (∂u/∂p, −∂u/∂q) on ℝ^{2N}.
pub fn hamiltonian_field(u: &MPoly, n: usize) -> PolyVectorField {
    let mut comps = Vec::with_capacity(2 * n);
    for a in 0..n {
        comps.push(u.derivative(n + a));
    }
    for a in 0..n {
        comps.push(u.derivative(a).scale(&-Rational::one()));
    }
    PolyVectorField::new(comps).expect("2N components")
}

/// Matrix of σ̂ in (q, p) order: σ̂(v, w) = vᵀ S w = Σ (v_p w_q − v_q w_p).
pub fn canonical_form(n: usize) -> MatQ {
    let mut s = MatQ::zeros(2 * n, 2 * n);
    for a in 0..n {
        s[(a, n + a)] = -Rational::one();
        s[(n + a, a)] = Rational::one();
    }
    s
}

fn char_field_from(qi: &QuasiImpulses) -> PolyVectorField {
    let n = qi.n;
    let h1 = hamiltonian_field(&qi.u[0], n).mul_fn(&qi.u23);
    let h2 = hamiltonian_field(&qi.u[1], n).mul_fn(&qi.u13);
    let h3 = hamiltonian_field(&qi.u[2], n).mul_fn(&qi.u12);
    h1.sub(&h2).add(&h3)
}

/// Polynomial annihilator frame of D near points where the rows `k` of
/// (X₁ X₂ X₃) are independent: ψ_s·X_i ≡ 0 and, together with the
/// adjugate rows θ_j (θ_j·X_i = Δ δ_ij), a basis of covectors where Δ ≠ 0.
#[derive(Clone, Debug)]
pub struct AdjugateFrame {
    pub rows: [usize; 3],
    pub delta: MPoly,
    pub theta: Vec<Vec<MPoly>>,
    pub psi: Vec<Vec<MPoly>>,
}

fn det3(a: &[Vec<MPoly>]) -> MPoly {
    crate::poly::poly_det(a)
}

/// Builds the frame from base-field components `x[i][a]` (ring of any size).
pub fn adjugate_frame(x: &[Vec<MPoly>], rows: [usize; 3]) -> AdjugateFrame {
    let n = x[0].len();
    let ring = (x[0][0].num_x(), x[0][0].num_p());
    let a: Vec<Vec<MPoly>> = rows.iter().map(|&r| (0..3).map(|i| x[i][r].clone()).collect()).collect();
    let delta = det3(&a);
    // adj(A)[j][c] = (−1)^{j+c} M_{c j}
    let minor = |r: usize, c: usize| {
        let rr: Vec<usize> = (0..3).filter(|&t| t != r).collect();
        let cc: Vec<usize> = (0..3).filter(|&t| t != c).collect();
        let m: Vec<Vec<MPoly>> = rr.iter().map(|&i| cc.iter().map(|&j| a[i][j].clone()).collect()).collect();
        det3(&m)
    };
    let mut adj = vec![vec![MPoly::zero(ring.0, ring.1); 3]; 3];
    for j in 0..3 {
        for c in 0..3 {
            let m = minor(c, j);
            adj[j][c] = if (j + c) % 2 == 0 { m } else { m.scale(&-Rational::one()) };
        }
    }
    let theta: Vec<Vec<MPoly>> = (0..3)
        .map(|j| {
            let mut row = vec![MPoly::zero(ring.0, ring.1); n];
            for (kc, &r) in rows.iter().enumerate() {
                row[r] = adj[j][kc].clone();
            }
            row
        })
        .collect();
    let others: Vec<usize> = (0..n).filter(|r| !rows.contains(r)).collect();
    let psi = others
        .iter()
        .map(|&s| {
            let mut row = vec![MPoly::zero(ring.0, ring.1); n];
            // −(B adjA)[s][kc] with B[s][i] = X_i[s]
            for (kc, &r) in rows.iter().enumerate() {
                let mut acc = MPoly::zero(ring.0, ring.1);
                for (i, xi) in x.iter().enumerate() {
                    acc = &acc - &(&xi[s] * &adj[i][kc]);
                }
                row[r] = acc;
            }
            row[s] = delta.clone();
            row
        })
        .collect();
    AdjugateFrame {
        rows,
        delta,
        theta,
        psi,
    }
}

/// First row triple (lexicographic) with Δ ≠ 0 at `point`, or with Δ not
/// identically zero when `point` is `None`.
pub fn choose_rows(x: &[Vec<MPoly>], point: Option<&[Rational]>) -> Option<[usize; 3]> {
    let n = x[0].len();
    for c in combinations(n, 3) {
        let a: Vec<Vec<MPoly>> = c.iter().map(|&r| (0..3).map(|i| x[i][r].clone()).collect()).collect();
        let d = det3(&a);
        let ok = match point {
            Some(pt) => !d.eval(pt).is_zero(),
            None => !d.is_zero(),
        };
        if ok {
            return Some([c[0], c[1], c[2]]);
        }
    }
    None
}

/// Does f vanish on D^⊥ over the chart Δ ≠ 0? Substitutes p = Σ t_s ψ_s(q)
/// and tests the result for identical vanishing.
pub fn vanishes_on_annihilator(f: &MPoly, d: &DistributionSpec) -> Result<bool, AbnormalError> {
    let n = check_rank3(d)?;
    let x: Vec<Vec<MPoly>> = d.generators.iter().map(|g| g.components().to_vec()).collect();
    let rows = choose_rows(&x, None).ok_or(AbnormalError::Dependent)?;
    let fr = adjugate_frame(&x, rows);
    let m = n - 3;
    let nv = n + m;
    let map: Vec<usize> = (0..n).collect();
    let mut images: Vec<MPoly> = (0..n).map(|a| MPoly::var(nv, 0, a)).collect();
    for b in 0..n {
        let mut pb = MPoly::zero(nv, 0);
        for (s, psi) in fr.psi.iter().enumerate() {
            if !psi[b].is_zero() {
                pb = &pb + &(&psi[b].embed(nv, 0, &map) * &MPoly::var(nv, 0, n + s));
            }
        }
        images.push(pb);
    }
    Ok(f.substitute(&images).is_zero())
}

/// H = u₂₃ u⃗₁ − u₁₃ u⃗₂ + u₁₂ u⃗₃, validated tangent to D^⊥.
pub fn characteristic_field(d: &DistributionSpec) -> Result<PolyVectorField, AbnormalError> {
    let qi = quasi_impulses(d)?;
    let h = char_field_from(&qi);
    for (j, u) in qi.u.iter().enumerate() {
        let hu = h.apply(u);
        if !hu.is_zero() && !vanishes_on_annihilator(&hu, d)? {
            return Err(AbnormalError::NotTangent(j + 1));
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_case() {
        let n = 3;
        let d = DistributionSpec::new((0..3).map(|i| PolyVectorField::coordinate(n, i)).collect()).unwrap();
        let qi = quasi_impulses(&d).unwrap();
        for i in 0..3 {
            assert_eq!(qi.u[i], MPoly::var(6, 0, 3 + i));
        }
        assert!(qi.u12.is_zero() && qi.u13.is_zero() && qi.u23.is_zero());
        assert!(characteristic_field(&d).unwrap().is_zero());
    }
}
