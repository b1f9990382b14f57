//! The symplectic space V = V_e ⊕ V_f of the flat curve and its filtration.

use serde::Serialize;

use crate::exactla::{MatQ, Rational, Subspace};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum FlagsError {
    #[error("k must be at least 2, got {0}")]
    SmallK(usize),
    #[error("l must be at least 1 for the non-rectangular symbol")]
    ZeroL,
    #[error("frame must consist of {0} independent vectors of length {0}")]
    DependentFrame(usize),
    #[error("closure failure: {0}")]
    Closure(String),
    #[error("stabilizer iteration did not settle within {0} steps")]
    NoStabilization(usize),
    #[error(transparent)]
    Ideal(#[from] crate::poly::IdealError),
    #[error(transparent)]
    Lie(#[from] crate::liecore::LieError),
}

/// V with basis e₁..e_r, f₁..f_r (indices 0..r−1 and r..2r−1), r = 2k+l−1.
#[derive(Clone, Debug, Serialize)]
pub struct SymplecticModelV {
    pub k: usize,
    pub l: usize,
    pub r: usize,
    pub labels: Vec<String>,
    /// σ(e_i, f_{2k+l−i}) = (−1)^i, all other basis pairings zero.
    pub sigma: MatQ,
    /// (i, V⁽ⁱ⁾) for i = −k−l ..= k+l−1.
    pub filtration: Vec<(i64, Subspace)>,
    /// Shift X e_i = e_{i+1}, X f_i = f_{i+1}.
    pub x: MatQ,
}

impl SymplecticModelV {
    pub fn dim(&self) -> usize {
        2 * self.r
    }

    /// Index of e_i (1-based i).
    pub fn e(&self, i: usize) -> usize {
        i - 1
    }

    /// Index of f_i (1-based i).
    pub fn f(&self, i: usize) -> usize {
        self.r + i - 1
    }

    pub fn piece(&self, i: i64) -> &Subspace {
        &self
            .filtration
            .iter()
            .find(|(j, _)| *j == i)
            .expect("filtration index out of range")
            .1
    }

    pub fn filtration_dims(&self) -> Vec<usize> {
        self.filtration.iter().map(|(_, s)| s.dim()).collect()
    }

    /// V⁽⁻ⁱ⁻¹⁾ = (V⁽ⁱ⁾)^∠ for every i in range.
    pub fn duality_holds(&self) -> bool {
        let lo = -((self.k + self.l) as i64);
        let hi = (self.k + self.l) as i64 - 1;
        (lo..=hi).all(|i| {
            let j = -i - 1;
            j >= lo && j <= hi && self.piece(i).skew_complement(&self.sigma).unwrap() == *self.piece(j)
        })
    }

    /// X V⁽ⁱ⁾ ⊆ V⁽ⁱ⁺¹⁾.
    pub fn shift_compatible(&self) -> bool {
        self.filtration.windows(2).all(|w| {
            w[1].1.contains(&w[0].1.image(&self.x)).unwrap()
        })
    }
}

pub fn build_model(k: usize, l: usize) -> Result<SymplecticModelV, FlagsError> {
    if k < 2 {
        return Err(FlagsError::SmallK(k));
    }
    let r = 2 * k + l - 1;
    let n = 2 * r;
    let mut labels: Vec<String> = (1..=r).map(|i| format!("e{i}")).collect();
    labels.extend((1..=r).map(|i| format!("f{i}")));
    let mut sigma = MatQ::zeros(n, n);
    for i in 1..=r {
        let j = 2 * k + l - i;
        let s = Rational::from_int(if i % 2 == 0 { 1 } else { -1 });
        sigma[(i - 1, r + j - 1)] = s.clone();
        sigma[(r + j - 1, i - 1)] = -s;
    }
    let mut filtration = Vec::new();
    let kl = (k + l) as i64;
    for i in -kl..kl {
        let ne = (i + kl).clamp(0, r as i64) as usize;
        let nf = (i + k as i64).clamp(0, r as i64) as usize;
        let mut idx: Vec<usize> = (0..ne).collect();
        idx.extend((0..nf).map(|j| r + j));
        filtration.push((i, Subspace::coordinate(n, &idx)));
    }
    let mut x = MatQ::zeros(n, n);
    for i in 0..r - 1 {
        x[(i + 1, i)] = Rational::one();
        x[(r + i + 1, r + i)] = Rational::one();
    }
    Ok(SymplecticModelV {
        k,
        l,
        r,
        labels,
        sigma,
        filtration,
        x,
    })
}

/// exp(tX) for the nilpotent shift.
pub fn exp_shift(model: &SymplecticModelV, t: &Rational) -> MatQ {
    let n = model.dim();
    let mut out = MatQ::identity(n);
    let mut term = MatQ::identity(n);
    for m in 1..=model.r {
        term = term.mul(&model.x).scale(&(t / &Rational::from_int(m as i64)));
        out = out.add(&term);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: u8,
    /// 1-based indices of the pair (or the single index for condition 2).
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiVerdict {
    pub pass: bool,
    /// Conformal factor c with σ(f_i, e_{2k+l−i}) = c·(−1)^{i−k}.
    pub scale: Option<Rational>,
    /// All violations, normalization condition (2) first since it fixes c.
    pub violations: Vec<Violation>,
}

impl QuasiVerdict {
    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks the four quasisymplectic conditions for a frame
/// (e₁..e_r, f₁..f_r), up to one overall conformal factor of σ.
pub fn is_quasisymplectic(
    frame: &[Vec<Rational>],
    k: usize,
    l: usize,
    sigma: &MatQ,
) -> Result<QuasiVerdict, FlagsError> {
    let r = 2 * k + l - 1;
    let n = 2 * r;
    if frame.len() != n || frame.iter().any(|v| v.len() != n) {
        return Err(FlagsError::DependentFrame(n));
    }
    if MatQ::from_cols(n, frame).rank() != n {
        return Err(FlagsError::DependentFrame(n));
    }
    let e = |i: usize| &frame[i - 1];
    let f = |i: usize| &frame[r + i - 1];
    let s = |u: &Vec<Rational>, v: &Vec<Rational>| sigma.bilinear(u, v);
    let sign = |p: i64| Rational::from_int(if p.rem_euclid(2) == 0 { 1 } else { -1 });
    let mut violations = Vec::new();
    // Condition 2: normalization, fixing the conformal factor at i = 1.
    let c = &s(f(1), e(2 * k + l - 1)) / &sign(1 - k as i64);
    let scale = if c.is_zero() { None } else { Some(c.clone()) };
    for i in 1..=r {
        let want = &c * &sign(i as i64 - k as i64);
        let got = s(f(i), e(2 * k + l - i));
        if c.is_zero() || got != want {
            violations.push(Violation {
                condition: 2,
                i,
                j: 2 * k + l - i,
            });
        }
    }
    // Condition 1: pairings above the antidiagonal vanish.
    for i in 1..=r {
        for j in 1..=r {
            if i + j <= 2 * k + 2 * l && !s(e(i), e(j)).is_zero() && i < j {
                violations.push(Violation { condition: 1, i, j });
            }
            if i + j < 2 * k + l && !s(e(i), f(j)).is_zero() {
                violations.push(Violation { condition: 1, i, j });
            }
            if i + j <= 2 * k && !s(f(i), f(j)).is_zero() && i < j {
                violations.push(Violation { condition: 1, i, j });
            }
        }
    }
    // Condition 3: f_i against e_{2k+l+1-i}.
    for i in 2..=r {
        let j = 2 * k + l + 1 - i;
        if j >= 1 && j <= r && !s(f(i), e(j)).is_zero() {
            violations.push(Violation { condition: 3, i, j });
        }
    }
    // Condition 4: adjacent f pairs in the tail.
    for i in 0..=l {
        if k + i < r && !s(f(k + i), f(k + i + 1)).is_zero() {
            violations.push(Violation {
                condition: 4,
                i: k + i,
                j: k + i + 1,
            });
        }
    }
    Ok(QuasiVerdict {
        pass: violations.is_empty(),
        scale,
        violations,
    })
}

/// The distinguished basis as a frame of coordinate vectors.
pub fn distinguished_frame(model: &SymplecticModelV) -> Vec<Vec<Rational>> {
    let n = model.dim();
    (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filtration_dims() {
        assert_eq!(build_model(2, 0).unwrap().filtration_dims(), vec![0, 2, 4, 6]);
        assert_eq!(build_model(2, 1).unwrap().filtration_dims(), vec![0, 1, 3, 5, 7, 8]);
        for (k, l) in [(2, 0), (2, 1), (3, 2), (4, 1)] {
            let m = build_model(k, l).unwrap();
            assert_eq!(m.dim(), 4 * k + 2 * l - 2);
            assert!(m.duality_holds());
            assert!(m.shift_compatible());
            assert!(!m.sigma.det().is_zero());
        }
        assert!(build_model(1, 0).is_err());
    }

    #[test]
    fn quasisymplectic_frames() {
        let m = build_model(2, 1).unwrap();
        let fr = distinguished_frame(&m);
        let v = is_quasisymplectic(&fr, 2, 1, &m.sigma).unwrap();
        assert!(v.pass);
        let mut sw = fr.clone();
        sw.swap(m.e(1), m.f(1));
        let v = is_quasisymplectic(&sw, 2, 1, &m.sigma).unwrap();
        assert!(!v.pass);
        assert_eq!(v.first_violation().unwrap().condition, 2);
        for t in [Rational::one(), Rational::new(1, 2), Rational::from_int(-2)] {
            let g = exp_shift(&m, &t);
            let moved: Vec<Vec<Rational>> = fr.iter().map(|u| g.mul_vec(u)).collect();
            assert!(is_quasisymplectic(&moved, 2, 1, &m.sigma).unwrap().pass);
        }
    }
}
