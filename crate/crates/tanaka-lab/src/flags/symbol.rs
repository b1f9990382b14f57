//! Explicit symbol algebras 𝔰_{k,0} and 𝔰_{k,l} = 𝔞 + 𝔭 inside 𝔤𝔩(V).

use serde::Serialize;

use super::model::{build_model, FlagsError, SymplecticModelV};
use crate::exactla::{MatQ, Rational};
use crate::liecore::{csp_scalar, LieAlg, LinMapSpace};
use crate::poly::{vanishing_ideal_piece, GradedPiece, MPoly, Variety};

/// Named generators of the reductive part.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolParts {
    pub x: MatQ,
    pub h: MatQ,
    pub y: MatQ,
    /// Extra generators: E11, E22, E12, E21 (rectangular) or Z1, Z2.
    pub extra: Vec<(String, MatQ)>,
    /// 𝔭 ⊂ Hom(V_f, V_e), empty for l = 0.
    pub p: Vec<MatQ>,
}

impl SymbolParts {
    pub fn all(&self) -> Vec<MatQ> {
        let mut v = vec![self.x.clone(), self.h.clone(), self.y.clone()];
        v.extend(self.extra.iter().map(|(_, m)| m.clone()));
        v.extend(self.p.iter().cloned());
        v
    }
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// The 𝔰𝔩(2)-triple acting diagonally on V_e ⊕ V_f.
fn sl2_triple(m: &SymplecticModelV) -> (MatQ, MatQ, MatQ) {
    let n = m.dim();
    let r = m.r as i64;
    let mut h = MatQ::zeros(n, n);
    let mut y = MatQ::zeros(n, n);
    for i in 1..=m.r {
        let w = q(2 * i as i64 - r - 1);
        h[(m.e(i), m.e(i))] = w.clone();
        h[(m.f(i), m.f(i))] = w;
        if i > 1 {
            let c = q((i as i64 - 1) * (r + 1 - i as i64));
            y[(m.e(i - 1), m.e(i))] = c.clone();
            y[(m.f(i - 1), m.f(i))] = c;
        }
    }
    (m.x.clone(), h, y)
}

fn check_csp(space: &[MatQ], sigma: &MatQ) -> Result<(), FlagsError> {
    for (i, a) in space.iter().enumerate() {
        if csp_scalar(a, sigma).is_none() {
            return Err(FlagsError::Closure(format!("generator {i} is not conformally symplectic")));
        }
    }
    Ok(())
}

pub fn symbol_parts_rect(k: usize) -> Result<(SymplecticModelV, SymbolParts), FlagsError> {
    let m = build_model(k, 0)?;
    let n = m.dim();
    let (x, h, y) = sl2_triple(&m);
    let unit = |pairs: &[(usize, usize)]| {
        let mut a = MatQ::zeros(n, n);
        for &(t, s) in pairs {
            a[(t, s)] = Rational::one();
        }
        a
    };
    let r = m.r;
    let e11 = unit(&(1..=r).map(|i| (m.e(i), m.e(i))).collect::<Vec<_>>());
    let e22 = unit(&(1..=r).map(|i| (m.f(i), m.f(i))).collect::<Vec<_>>());
    let e12 = unit(&(1..=r).map(|i| (m.e(i), m.f(i))).collect::<Vec<_>>());
    let e21 = unit(&(1..=r).map(|i| (m.f(i), m.e(i))).collect::<Vec<_>>());
    let parts = SymbolParts {
        x,
        h,
        y,
        extra: vec![
            ("E11".into(), e11),
            ("E22".into(), e22),
            ("E12".into(), e12),
            ("E21".into(), e21),
        ],
        p: Vec::new(),
    };
    Ok((m, parts))
}

/// 𝔰_{k,0}, of dimension 7.
pub fn build_symbol_rect(k: usize) -> Result<LinMapSpace, FlagsError> {
    let (m, parts) = symbol_parts_rect(k)?;
    finish(&m, &parts)
}

/// Degree-2 piece of the ideal of the (k−2)-th tangential variety, in the
/// x-coordinates of V_e (z_j = (j−1)!·y_j).
pub fn p_quadrics(k: usize, l: usize) -> Result<GradedPiece, FlagsError> {
    let r = 2 * k + l - 1;
    let piece = vanishing_ideal_piece(r, Variety::tangential(k - 2), 2)?;
    let images: Vec<MPoly> = (0..2 * r)
        .map(|v| {
            let mut x = MPoly::var(r, r, v);
            if v < r {
                x = x.scale(&crate::exactla::factorial(v as u64));
            }
            x
        })
        .collect();
    let polys: Vec<MPoly> = piece.basis.iter().map(|f| f.substitute(&images)).collect();
    Ok(GradedPiece::from_polys(r, r, 2, &polys)?)
}

/// Hessian-type symmetric matrix S_{ab} = ½ ∂²Q/∂y_a∂y_b (0-based a, b).
pub fn quadric_matrix(qf: &MPoly, r: usize) -> MatQ {
    let mut s = MatQ::zeros(r, r);
    let half = Rational::new(1, 2);
    for a in 0..r {
        let da = qf.derivative(a);
        for b in 0..r {
            s[(a, b)] = &da.derivative(b).constant_term() * &half;
        }
    }
    s
}

/// A_Q ∈ Hom(V_f, V_e) with σ(A_Q f_a, f_b) = S_{ab}.
pub fn quadric_operator(m: &SymplecticModelV, qf: &MPoly) -> MatQ {
    let r = m.r;
    let s = quadric_matrix(qf, r);
    let mut a = MatQ::zeros(2 * r, 2 * r);
    for col in 1..=r {
        for i in 1..=r {
            let v = &s[(col - 1, r - i)];
            if !v.is_zero() {
                a[(m.e(i), m.f(col))] = if i % 2 == 0 { v.clone() } else { -v };
            }
        }
    }
    a
}

pub fn symbol_parts_nonrect(k: usize, l: usize) -> Result<(SymplecticModelV, SymbolParts), FlagsError> {
    if l == 0 {
        return Err(FlagsError::ZeroL);
    }
    let m = build_model(k, l)?;
    let n = m.dim();
    let (x, h, y) = sl2_triple(&m);
    let mut z1 = MatQ::zeros(n, n);
    for i in 1..=m.r {
        z1[(m.e(i), m.e(i))] = q(1);
        z1[(m.f(i), m.f(i))] = q(-1);
    }
    let z2 = MatQ::identity(n);
    let quad = p_quadrics(k, l)?;
    let p = quad.basis.iter().map(|f| quadric_operator(&m, f)).collect();
    let parts = SymbolParts {
        x,
        h,
        y,
        extra: vec![("Z1".into(), z1), ("Z2".into(), z2)],
        p,
    };
    Ok((m, parts))
}

/// 𝔰_{k,l} = 𝔞 + 𝔭 for l ≥ 1.
pub fn build_symbol_nonrect(k: usize, l: usize) -> Result<LinMapSpace, FlagsError> {
    let (m, parts) = symbol_parts_nonrect(k, l)?;
    finish(&m, &parts)
}

/// Dispatches on l.
pub fn build_symbol(k: usize, l: usize) -> Result<LinMapSpace, FlagsError> {
    if l == 0 {
        build_symbol_rect(k)
    } else {
        build_symbol_nonrect(k, l)
    }
}

pub fn symbol_parts(k: usize, l: usize) -> Result<(SymplecticModelV, SymbolParts), FlagsError> {
    if l == 0 {
        symbol_parts_rect(k)
    } else {
        symbol_parts_nonrect(k, l)
    }
}

/// Σ_{s=0}^{⌊l/2⌋} (2l − 4s + 1).
pub fn p_dim_formula(l: usize) -> usize {
    (0..=l / 2).map(|s| 2 * l - 4 * s + 1).sum()
}

fn finish(m: &SymplecticModelV, parts: &SymbolParts) -> Result<LinMapSpace, FlagsError> {
    let gens = parts.all();
    check_csp(&gens, &m.sigma)?;
    let space = LinMapSpace::span(m.dim(), m.dim(), &gens);
    if !space.is_closed_under_commutator() {
        return Err(FlagsError::Closure("symbol not closed under commutator".into()));
    }
    Ok(space)
}

/// Abstract Lie algebra of a matrix algebra in its canonical basis; the
/// isomorphism sends label `A{i}` to `space.basis()[i]`.
pub fn matrix_lie_algebra(space: &LinMapSpace) -> Result<LieAlg, FlagsError> {
    let b = space.basis();
    let labels = (0..b.len()).map(|i| format!("A{i}")).collect();
    let mut table = Vec::new();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let c = space
                .coordinates(&b[i].commutator(&b[j]))
                .ok_or_else(|| FlagsError::Closure(format!("[A{i}, A{j}] leaves the span")))?;
            let coeffs: Vec<(usize, Rational)> =
                c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            table.push(((i, j), coeffs));
        }
    }
    Ok(LieAlg::new(labels, &table)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_dims_and_triple() {
        for k in 2..=4 {
            let (_, p) = symbol_parts_rect(k).unwrap();
            assert_eq!(p.h.commutator(&p.x), p.x.scale(&q(2)));
            assert_eq!(p.h.commutator(&p.y), p.y.scale(&q(-2)));
            assert_eq!(p.x.commutator(&p.y), p.h);
            let s = build_symbol_rect(k).unwrap();
            assert_eq!(s.dim(), 7);
            assert_eq!(matrix_lie_algebra(&s).unwrap().dim(), 7);
        }
    }

    #[test]
    fn nonrect_dims() {
        for (k, l, d) in [(2, 1, 8), (2, 2, 11), (3, 1, 8)] {
            let s = build_symbol_nonrect(k, l).unwrap();
            assert_eq!(s.dim(), d, "({k},{l})");
            assert_eq!(d, 5 + p_dim_formula(l));
        }
    }

    #[test]
    fn p_maps_f_to_e() {
        let (m, parts) = symbol_parts_nonrect(2, 2).unwrap();
        for a in &parts.p {
            for i in 1..=m.r {
                for t in 0..m.dim() {
                    assert!(a[(t, m.e(i))].is_zero());
                    if t >= m.r {
                        assert!(a[(t, m.f(i))].is_zero());
                    }
                }
            }
        }
    }
}
