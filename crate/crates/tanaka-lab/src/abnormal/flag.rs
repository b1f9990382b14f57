//! The flag 𝒥̂⁽ⁱ⁾ at a covector λ ∈ D^⊥ and its Young-diagram type.
//!
//! Everything is translated to λ and truncated: a field entering the flag at
//! level i only needs its jet of order L − i, where L is the deepest level
//! computed. The lifts are built from the adjugate frame, so they are
//! polynomial and exactly tangent to D^⊥.

use std::collections::BTreeMap;

use serde::Serialize;

use super::impulse::{adjugate_frame, canonical_form, check_rank3, choose_rows, AbnormalError};
use crate::dist::{lie_bracket, DistributionSpec, PolyVectorField};
use crate::exactla::{kernel_rows, Echelon, Rational, Subspace};
use crate::poly::MPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CotangentPoint {
    pub q: Vec<Rational>,
    pub p: Vec<Rational>,
}

impl CotangentPoint {
    pub fn new(q: Vec<Rational>, p: Vec<Rational>) -> Self {
        CotangentPoint { q, p }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        CotangentPoint {
            q: self.q.clone(),
            p: self.p.iter().map(|x| x * c).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct YoungType {
    pub k: usize,
    pub l: usize,
}

impl std::fmt::Display for YoungType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagReport {
    pub dims_hat: BTreeMap<i64, usize>,
    #[serde(rename = "dims_J")]
    pub dims_j: BTreeMap<i64, usize>,
    /// dim Δ = dim Δ̂ − 2.
    pub delta_dim: usize,
    pub young: Option<YoungType>,
    pub failure: Option<String>,
    pub regular: bool,
    pub maximal_class: bool,
    /// skew complements within Δ̂ recomputed in both directions.
    pub duality: bool,
    /// E(λ) and H(λ) lie in every 𝒥̂⁽ⁱ⁾ and in ker σ̂|Δ̂.
    pub euler_and_characteristic: bool,
    /// 0 ≤ jump ≤ 2 for every consecutive pair.
    pub jump_bounds: bool,
}

/// [a, b] with every product truncated at total degree `deg`.
fn bracket_trunc(a: &PolyVectorField, b: &PolyVectorField, deg: u32) -> PolyVectorField {
    let n = a.ambient_dim();
    let (ac, bc) = (a.components(), b.components());
    let apply = |x: &[MPoly], f: &MPoly| {
        let mut out = MPoly::zero(f.num_x(), f.num_p());
        for (j, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.derivative(j);
            if !d.is_zero() {
                out = &out + &c.mul_truncated(&d, Some(deg));
            }
        }
        out
    };
    let comps = (0..n).map(|i| &apply(ac, &bc[i]) - &apply(bc, &ac[i])).collect();
    PolyVectorField::new(comps).expect("same ring")
}

fn truncate_field(f: &PolyVectorField, deg: u32) -> PolyVectorField {
    PolyVectorField::new(f.components().iter().map(|c| c.truncate(deg)).collect()).expect("same ring")
}

fn value(f: &PolyVectorField) -> Vec<Rational> {
    f.components().iter().map(|c| c.constant_term()).collect()
}

/// Data of the problem translated to λ: all polynomials are in (y, z) with
/// q = q₀ + y, p = p₀ + z.
struct Local {
    n: usize,
    /// Hamiltonian fields u⃗_i.
    ham: Vec<PolyVectorField>,
    /// u_{ij}, antisymmetric.
    uij: Vec<Vec<MPoly>>,
    /// du_i(λ), i.e. the linear parts of u_i.
    du: Vec<Vec<Rational>>,
    /// Lifted frame data.
    delta: MPoly,
    theta: Vec<Vec<MPoly>>,
    psi: Vec<Vec<MPoly>>,
}

fn localize(d: &DistributionSpec, lam: &CotangentPoint) -> Result<Local, AbnormalError> {
    let n = check_rank3(d)?;
    if lam.q.len() != n {
        return Err(AbnormalError::PointLength(lam.q.len(), n));
    }
    if lam.p.len() != n {
        return Err(AbnormalError::PointLength(lam.p.len(), n));
    }
    if d.rank_at(&lam.q) != 3 {
        return Err(AbnormalError::Dependent);
    }
    let g = &d.generators;
    let tr = |f: &PolyVectorField| -> Vec<MPoly> { f.components().iter().map(|c| c.translate(&lam.q)).collect() };
    let x: Vec<Vec<MPoly>> = g.iter().map(tr).collect();
    let mut br = vec![vec![Vec::new(); 3]; 3];
    for i in 0..3 {
        for j in i + 1..3 {
            br[i][j] = tr(&lie_bracket(&g[i], &g[j])?);
        }
    }
    let nn = 2 * n;
    let map: Vec<usize> = (0..n).collect();
    let lift = |f: &MPoly| f.embed(nn, 0, &map);
    let pvar: Vec<MPoly> = (0..n)
        .map(|a| &MPoly::constant(nn, 0, lam.p[a].clone()) + &MPoly::var(nn, 0, n + a))
        .collect();
    let impulse = |comps: &[MPoly]| {
        let mut u = MPoly::zero(nn, 0);
        for (a, c) in comps.iter().enumerate() {
            if !c.is_zero() {
                u = &u + &(&lift(c) * &pvar[a]);
            }
        }
        u
    };
    let u: Vec<MPoly> = x.iter().map(|c| impulse(c)).collect();
    if u.iter().any(|ui| !ui.constant_term().is_zero()) {
        return Err(AbnormalError::NotAnnihilating);
    }
    let zero = MPoly::zero(nn, 0);
    let mut uij = vec![vec![zero.clone(); 3]; 3];
    for i in 0..3 {
        for j in i + 1..3 {
            let v = impulse(&br[i][j]);
            uij[j][i] = -&v;
            uij[i][j] = v;
        }
    }
    if uij.iter().flatten().all(|v| v.constant_term().is_zero()) {
        return Err(AbnormalError::InD2Perp);
    }
    let ham = u
        .iter()
        .map(|ui| {
            let mut comps: Vec<MPoly> = (0..n).map(|a| ui.derivative(n + a)).collect();
            comps.extend((0..n).map(|a| -&ui.derivative(a)));
            PolyVectorField::new(comps).expect("2N components")
        })
        .collect();
    let du = u
        .iter()
        .map(|ui| (0..nn).map(|v| ui.derivative(v).constant_term()).collect())
        .collect();
    let origin = vec![Rational::zero(); n];
    let rows = choose_rows(&x, Some(&origin)).ok_or(AbnormalError::Dependent)?;
    let fr = adjugate_frame(&x, rows);
    let lift_rows = |rs: &[Vec<MPoly>]| -> Vec<Vec<MPoly>> { rs.iter().map(|r| r.iter().map(&lift).collect()).collect() };
    Ok(Local {
        n,
        ham,
        uij,
        du,
        delta: lift(&fr.delta),
        theta: lift_rows(&fr.theta),
        psi: lift_rows(&fr.psi),
    })
}

impl Local {
    fn characteristic(&self, deg: u32) -> PolyVectorField {
        let (u23, u13, u12) = (&self.uij[1][2], &self.uij[0][2], &self.uij[0][1]);
        let t = |f: &PolyVectorField, c: &MPoly| {
            PolyVectorField::new(f.components().iter().map(|x| x.mul_truncated(c, Some(deg))).collect()).unwrap()
        };
        t(&self.ham[0], u23).sub(&t(&self.ham[1], u13)).add(&t(&self.ham[2], u12))
    }

    /// Field (0, w) from covector components w.
    fn vertical(&self, w: &[MPoly]) -> PolyVectorField {
        let nn = 2 * self.n;
        let mut comps = vec![MPoly::zero(nn, 0); self.n];
        comps.extend(w.iter().cloned());
        PolyVectorField::new(comps).unwrap()
    }

    /// Spanning family of 𝒥̂⁽⁰⁾: X̂_i = Δ·u⃗_i − Σ_j u_{ij} θ_j and (0, ψ_s).
    fn level_zero(&self, deg: u32) -> Vec<PolyVectorField> {
        let n = self.n;
        let mut fam = Vec::with_capacity(n);
        for i in 0..3 {
            let mut w = vec![MPoly::zero(2 * n, 0); n];
            for j in 0..3 {
                if self.uij[i][j].is_zero() {
                    continue;
                }
                for b in 0..n {
                    if !self.theta[j][b].is_zero() {
                        w[b] = &w[b] - &self.uij[i][j].mul_truncated(&self.theta[j][b], Some(deg));
                    }
                }
            }
            let h = PolyVectorField::new(
                self.ham[i].components().iter().map(|c| c.mul_truncated(&self.delta, Some(deg))).collect(),
            )
            .unwrap();
            fam.push(h.add(&self.vertical(&w)));
        }
        for s in &self.psi {
            fam.push(truncate_field(&self.vertical(s), deg));
        }
        fam
    }

    /// Δ̂ = T_λD^⊥ ∩ ker ς.
    fn delta_hat(&self, p0: &[Rational]) -> Subspace {
        let nn = 2 * self.n;
        let mut rows = self.du.clone();
        let mut vs = vec![Rational::zero(); nn];
        vs[..self.n].clone_from_slice(p0);
        rows.push(vs);
        kernel_rows(&rows, nn)
    }
}

fn span_of(n: usize, fam: &[PolyVectorField]) -> (Echelon, Vec<Vec<Rational>>) {
    let mut e = Echelon::new(n);
    let mut vs = Vec::new();
    for f in fam {
        let v = value(f);
        if e.insert_dense(&v) {
            vs.push(v);
        }
    }
    (e, vs)
}

/// Positive spaces 𝒥̂⁽⁰⁾ ⊂ … ⊂ 𝒥̂⁽ᴸ⁾ at λ (stopping once Δ̂ is reached).
fn positive_flag(loc: &Local, levels: usize, target: usize) -> (Vec<Subspace>, PolyVectorField) {
    let nn = 2 * loc.n;
    let l = levels as u32;
    let h = loc.characteristic(l);
    let mut fam = loc.level_zero(l);
    let (mut e, mut vecs) = span_of(nn, &fam);
    let mut spaces = vec![Subspace::span(nn, &vecs)];
    for i in 1..=levels {
        if e.rank() >= target {
            break;
        }
        let deg = l - i as u32;
        fam = fam.iter().map(|f| bracket_trunc(&h, f, deg)).collect();
        for f in &fam {
            let v = value(f);
            if e.insert_dense(&v) {
                vecs.push(v);
            }
        }
        spaces.push(Subspace::span(nn, &vecs));
    }
    (spaces, h)
}

/// Default bound on the number of positive levels: the jumps of J⁽ⁱ⁾ are
/// at least 1 until Δ is reached and add up to N − 4.
pub fn default_levels(n: usize) -> usize {
    n.saturating_sub(4).max(1)
}

/// Computes the flag at λ with at most `max_i` positive levels.
pub fn flag_at(d: &DistributionSpec, lam: &CotangentPoint, max_i: Option<usize>) -> Result<FlagReport, AbnormalError> {
    let loc = localize(d, lam)?;
    let n = loc.n;
    let nn = 2 * n;
    let dh = loc.delta_hat(&lam.p);
    let sigma = canonical_form(n);
    let cap = max_i.unwrap_or_else(|| default_levels(n)).max(1);
    // Deeper levels need longer jets; grow L only while the flag keeps moving.
    let mut levels = cap.min(2);
    let (spaces, h) = loop {
        let (sp, h) = positive_flag(&loc, levels, dh.dim());
        let top = sp.last().unwrap().dim();
        let grew = sp.len() < 2 || sp[sp.len() - 2].dim() < top;
        if top >= dh.dim() || levels >= cap || !grew {
            break (sp, h);
        }
        levels = (2 * levels).min(cap);
    };

    let mut dims_hat = BTreeMap::new();
    let mut duality = true;
    let mut negatives = Vec::new();
    for (i, s) in spaces.iter().enumerate() {
        dims_hat.insert(i as i64, s.dim());
        let neg = dh.intersection(&s.skew_complement(&sigma).unwrap()).unwrap();
        let back = dh.intersection(&neg.skew_complement(&sigma).unwrap()).unwrap();
        duality &= back == *s && dh.contains(s).unwrap();
        dims_hat.insert(-(i as i64) - 1, neg.dim());
        negatives.push(neg);
    }

    // E(λ) = (0, p₀); H(λ) is the constant part of H.
    let mut e_val = vec![Rational::zero(); nn];
    e_val[n..].clone_from_slice(&lam.p);
    let h_val = value(&h);
    let smallest = negatives.last().unwrap();
    let in_kernel = |v: &[Rational]| dh.vectors().iter().all(|w| sigma.bilinear(v, w).is_zero());
    let euler_and_characteristic = !h_val.iter().all(|x| x.is_zero())
        && smallest.contains_vector(&e_val)
        && smallest.contains_vector(&h_val)
        && in_kernel(&e_val)
        && in_kernel(&h_val);

    let dims_j: BTreeMap<i64, usize> = dims_hat.iter().map(|(i, d)| (*i, d.saturating_sub(2))).collect();
    let seq: Vec<usize> = dims_j.values().copied().collect();
    let jumps_all: Vec<i64> = seq.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    let jump_bounds = jumps_all.iter().all(|j| (0..=2).contains(j));

    let delta_dim = dh.dim() - 2;
    let top = *dims_j.values().last().unwrap();
    let pos_jumps: Vec<usize> = (1..spaces.len()).map(|i| dims_j[&(i as i64)] - dims_j[&(i as i64 - 1)]).collect();
    let reaches = top == delta_dim;
    let nonincreasing = pos_jumps.windows(2).all(|w| w[1] <= w[0]);
    let (mut young, mut failure) = (None, None);
    if !reaches {
        failure = Some(format!("flag stops at dim {top} < dim Δ = {delta_dim} within {} levels", spaces.len() - 1));
    } else if !nonincreasing || pos_jumps.iter().any(|&j| j == 0 || j > 2) {
        failure = Some(format!("irregular jumps {pos_jumps:?}"));
    } else if !duality || !euler_and_characteristic {
        failure = Some("flag fails the duality or kernel checks".into());
    } else {
        let k = pos_jumps.iter().filter(|&&j| j == 2).count() + 1;
        let l = pos_jumps.iter().filter(|&&j| j == 1).count();
        if 2 * k + l + 2 != n {
            failure = Some(format!("type ({k},{l}) violates 2k+l+2 = {n}"));
        } else {
            young = Some(YoungType { k, l });
        }
    }
    let regular = young.is_some();
    Ok(FlagReport {
        dims_hat,
        dims_j,
        delta_dim,
        young,
        failure,
        regular,
        maximal_class: regular,
        duality,
        euler_and_characteristic,
        jump_bounds,
    })
}

/// Annihilator of D(q) from the adjugate frame (a basis where Δ(q) ≠ 0).
pub fn annihilator_basis(d: &DistributionSpec, q: &[Rational]) -> Result<Vec<Vec<Rational>>, AbnormalError> {
    let n = check_rank3(d)?;
    if q.len() != n {
        return Err(AbnormalError::PointLength(q.len(), n));
    }
    let x: Vec<Vec<MPoly>> = d.generators.iter().map(|g| g.components().to_vec()).collect();
    let rows = choose_rows(&x, Some(q)).ok_or(AbnormalError::Dependent)?;
    let fr = adjugate_frame(&x, rows);
    Ok(fr.psi.iter().map(|r| r.iter().map(|c| c.eval(q)).collect()).collect())
}
