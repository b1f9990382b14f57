//! Low-rank elements of a space of quadrics.
//!
//! A witness search over small integer combinations finds elements of rank
//! ≤ ρ. Emptiness is certified by Macaulay's criterion: the (ρ+1)-minors of
//! the generic combination Σ cᵢ Sᵢ, multiplied by all monomials of degree
//! D − ρ − 1, span every form of degree D in c. Then the minors have no common
//! projective zero, so no nonzero combination reaches rank ≤ ρ (over ℂ, hence
//! over ℚ).

use serde::Serialize;

use super::symbol::quadric_matrix;
use crate::exactla::{Echelon, MatQ, Rational};
use crate::poly::{combinations, poly_det, GradedPiece, MPoly, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RankVerdict {
    Witnesses,
    CertifiedEmpty,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct MacaulayCertificate {
    /// Degree D at which the multiplied minors span all forms.
    pub degree: u32,
    /// Independent (ρ+1)-minors in the combination coefficients.
    pub minors: usize,
    pub columns: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankFilterReport {
    pub max_rank: usize,
    pub dim: usize,
    pub verdict: RankVerdict,
    pub witnesses: Vec<MPoly>,
    pub certificate: Option<MacaulayCertificate>,
}

const MAX_WITNESSES: usize = 16;
const MAX_EXTRA_DEGREE: u32 = 6;

fn combo_of(piece: &GradedPiece, c: &[i64]) -> MPoly {
    let mut f = MPoly::zero(piece.num_x, piece.num_p);
    for (ci, b) in c.iter().zip(&piece.basis) {
        if *ci != 0 {
            f.add_assign_scaled(b, &Rational::from_int(*ci));
        }
    }
    f
}

/// Nonzero vectors in {−1,0,1}^d with first nonzero entry 1.
fn sign_vectors(d: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 3usize.pow(d as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(d);
        let mut c = code;
        for _ in 0..d {
            v.push((c % 3) as i64 - 1);
            c /= 3;
        }
        if v.iter().find(|x| **x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

fn macaulay(mats: &[MatQ], max_rank: usize) -> Option<MacaulayCertificate> {
    let d = mats.len();
    let n = mats[0].rows();
    let m = max_rank + 1;
    if m > n {
        return None;
    }
    let generic: Vec<Vec<MPoly>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut f = MPoly::zero(d, 0);
                    for (i, s) in mats.iter().enumerate() {
                        if !s[(a, b)].is_zero() {
                            f.add_assign_scaled(&MPoly::var(d, 0, i), &s[(a, b)]);
                        }
                    }
                    f
                })
                .collect()
        })
        .collect();
    let base = Monomial::all_of_degree(d, m as u32);
    let mut ind = Echelon::new(base.len());
    let mut minors = Vec::new();
    for rs in combinations(n, m) {
        for cs in combinations(n, m) {
            let sub: Vec<Vec<MPoly>> = rs.iter().map(|&i| cs.iter().map(|&j| generic[i][j].clone()).collect()).collect();
            let f = poly_det(&sub);
            if f.is_zero() {
                continue;
            }
            if ind.insert_dense(&f.coords_in(&base).unwrap()) {
                minors.push(f);
            }
        }
    }
    for extra in 0..=MAX_EXTRA_DEGREE {
        let deg = m as u32 + extra;
        let cols = Monomial::all_of_degree(d, deg);
        let mults = Monomial::all_of_degree(d, extra);
        let mut e = Echelon::new(cols.len());
        'outer: for f in &minors {
            for mu in &mults {
                let g = f * &MPoly::monomial(d, 0, mu.clone(), Rational::one());
                e.insert_dense(&g.coords_in(&cols).unwrap());
                if e.rank() == cols.len() {
                    break 'outer;
                }
            }
        }
        if e.rank() == cols.len() {
            return Some(MacaulayCertificate {
                degree: deg,
                minors: minors.len(),
                columns: cols.len(),
                rank: e.rank(),
            });
        }
    }
    None
}

pub fn rank_filter(space: &GradedPiece, max_rank: usize) -> RankFilterReport {
    let d = space.dim();
    let r = space.num_x;
    if d == 0 {
        return RankFilterReport {
            max_rank,
            dim: 0,
            verdict: RankVerdict::CertifiedEmpty,
            witnesses: Vec::new(),
            certificate: Some(MacaulayCertificate {
                degree: 0,
                minors: 0,
                columns: 0,
                rank: 0,
            }),
        };
    }
    let mats: Vec<MatQ> = space.basis.iter().map(|f| quadric_matrix(f, r)).collect();
    let mut witnesses = Vec::new();
    if d <= 10 {
        for c in sign_vectors(d) {
            let mut s = MatQ::zeros(r, r);
            for (ci, mi) in c.iter().zip(&mats) {
                if *ci != 0 {
                    s = s.add(&mi.scale(&Rational::from_int(*ci)));
                }
            }
            if s.rank() <= max_rank {
                witnesses.push(combo_of(space, &c));
                if witnesses.len() >= MAX_WITNESSES {
                    break;
                }
            }
        }
    }
    if !witnesses.is_empty() {
        return RankFilterReport {
            max_rank,
            dim: d,
            verdict: RankVerdict::Witnesses,
            witnesses,
            certificate: None,
        };
    }
    let certificate = macaulay(&mats, max_rank);
    RankFilterReport {
        max_rank,
        dim: d,
        verdict: if certificate.is_some() {
            RankVerdict::CertifiedEmpty
        } else {
            RankVerdict::Undetermined
        },
        witnesses,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::p_quadrics;

    #[test]
    fn full_quadrics_have_rank_one() {
        let r = 4;
        let all: Vec<MPoly> = GradedPiece::x_monomials(r, r, 2)
            .into_iter()
            .map(|m| MPoly::monomial(r, r, m, Rational::one()))
            .collect();
        let s2 = GradedPiece::from_polys(r, r, 2, &all).unwrap();
        let rep = rank_filter(&s2, 1);
        assert_eq!(rep.verdict, RankVerdict::Witnesses);
        assert!(rep.witnesses.contains(&(&MPoly::x(r, r, 1) * &MPoly::x(r, r, 1))));
    }

    #[test]
    fn p_has_no_rank_two() {
        let rep = rank_filter(&p_quadrics(2, 1).unwrap(), 2);
        assert_eq!(rep.verdict, RankVerdict::CertifiedEmpty);
    }
}
