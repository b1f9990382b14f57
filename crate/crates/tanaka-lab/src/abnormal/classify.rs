//! Young-diagram classification over a fiber of D^⊥ by seeded sampling.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::flag::{annihilator_basis, flag_at, CotangentPoint, FlagReport, YoungType};
use super::impulse::{check_rank3, AbnormalError};
use crate::dist::{growth_vector, lie_bracket, DistributionSpec};
use crate::exactla::{Rational, Subspace};

/// Coefficients of sampled covectors in the annihilator basis lie in −H..=H.
pub const SAMPLE_HEIGHT: i64 = 3;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Classification {
    /// dim D² = 6 and at least one sample is regular.
    Classified {
        young: YoungType,
        maximal_class: bool,
        votes: BTreeMap<String, usize>,
        admissible: usize,
        regular: usize,
        sample: CotangentPoint,
        report: FlagReport,
    },
    /// dim D² = 6 but no regular sample within the budget. Not a negative
    /// certificate.
    NotMaximalClass {
        admissible: usize,
        sample: CotangentPoint,
        report: FlagReport,
    },
    /// dim D² ∈ {4, 5}: only the characteristic sub-distribution D′ is reported.
    Reduced { dim_d2: usize, d_prime: Subspace },
    /// dim D² < 4.
    Degenerate { dim_d2: usize },
}

impl Classification {
    /// 0 classified (or not maximal class), 2 reduced or degenerate.
    pub fn exit_code(&self) -> i32 {
        match self {
            Classification::Classified { .. } | Classification::NotMaximalClass { .. } => 0,
            _ => 2,
        }
    }
}

fn d2_values(d: &DistributionSpec, q: &[Rational]) -> Result<Vec<Vec<Rational>>, AbnormalError> {
    let g = &d.generators;
    let mut vs: Vec<Vec<Rational>> = g.iter().map(|x| x.eval(q)).collect();
    for (i, j) in [(1, 2), (0, 2), (0, 1)] {
        vs.push(lie_bracket(&g[i], &g[j])?.eval(q));
    }
    Ok(vs)
}

/// D′(q) = span{u₂₃ X₁ − u₁₃ X₂ + u₁₂ X₃ : p ∈ D(q)^⊥}.
pub fn characteristic_subdistribution(d: &DistributionSpec, q: &[Rational]) -> Result<Subspace, AbnormalError> {
    let n = check_rank3(d)?;
    let vals = d2_values(d, q)?;
    let dot = |p: &[Rational], v: &[Rational]| -> Rational { p.iter().zip(v).map(|(a, b)| a * b).sum() };
    let mut out = Vec::new();
    for p in annihilator_basis(d, q)? {
        let (u23, u13, u12) = (dot(&p, &vals[3]), dot(&p, &vals[4]), dot(&p, &vals[5]));
        let v: Vec<Rational> = (0..n)
            .map(|a| &(&(&u23 * &vals[0][a]) - &(&u13 * &vals[1][a])) + &(&u12 * &vals[2][a]))
            .collect();
        out.push(v);
    }
    Ok(Subspace::span(n, &out))
}

/// Samples covectors p = Σ c_s ψ_s(q) with c drawn from a seeded ChaCha
/// stream and discards those in (D²)^⊥; returns up to `samples` candidates.
pub fn sample_covectors(d: &DistributionSpec, q: &[Rational], samples: usize, seed: u64) -> Result<Vec<CotangentPoint>, AbnormalError> {
    let basis = annihilator_basis(d, q)?;
    let vals = d2_values(d, q)?;
    let n = d.ambient_dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..samples {
        let c: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-SAMPLE_HEIGHT..=SAMPLE_HEIGHT)).collect();
        let mut p = vec![Rational::zero(); n];
        for (ci, b) in c.iter().zip(&basis) {
            if *ci != 0 {
                let ci = Rational::from_int(*ci);
                for (pa, ba) in p.iter_mut().zip(b) {
                    *pa += &(&ci * ba);
                }
            }
        }
        let admissible = vals[3..].iter().any(|v| !p.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>().is_zero());
        if admissible {
            out.push(CotangentPoint::new(q.to_vec(), p));
        }
    }
    Ok(out)
}

pub fn classify(d: &DistributionSpec, q: &[Rational], samples: usize, seed: u64) -> Result<Classification, AbnormalError> {
    check_rank3(d)?;
    let gv = growth_vector(d, q, 2)?;
    let dim_d2 = gv.get(1).copied().unwrap_or(gv[0]);
    if dim_d2 < 4 {
        return Ok(Classification::Degenerate { dim_d2 });
    }
    if dim_d2 < 6 {
        return Ok(Classification::Reduced {
            dim_d2,
            d_prime: characteristic_subdistribution(d, q)?,
        });
    }
    let pts = sample_covectors(d, q, samples, seed)?;
    if pts.is_empty() {
        return Err(AbnormalError::Budget(samples));
    }
    let reports: Vec<FlagReport> = pts
        .par_iter()
        .map(|lam| flag_at(d, lam, None))
        .collect::<Result<_, _>>()?;
    let mut votes: BTreeMap<YoungType, usize> = BTreeMap::new();
    for r in &reports {
        if let Some(y) = r.young {
            *votes.entry(y).or_default() += 1;
        }
    }
    let regular: usize = votes.values().sum();
    // Majority; ties go to the smallest type.
    let best = votes.iter().fold(None, |acc: Option<(YoungType, usize)>, (y, c)| match acc {
        Some((_, bc)) if bc >= *c => acc,
        _ => Some((*y, *c)),
    });
    Ok(match best {
        Some((young, _)) => {
            let idx = reports.iter().position(|r| r.young == Some(young)).unwrap();
            Classification::Classified {
                young,
                maximal_class: true,
                votes: votes.iter().map(|(y, c)| (y.to_string(), *c)).collect(),
                admissible: pts.len(),
                regular,
                sample: pts[idx].clone(),
                report: reports[idx].clone(),
            }
        }
        None => Classification::NotMaximalClass {
            admissible: pts.len(),
            sample: pts[0].clone(),
            report: reports[0].clone(),
        },
    })
}
