//! Sparse multivariate polynomials over ℚ.
//!
//! Variables are split into an `x` block and a `p` block, numbered
//! `0..num_x` and `num_x..num_x+num_p`. Terms are kept in graded
//! lexicographic order, which makes iteration and serialization canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactla::Rational;

/// Exponent vector with cached total degree; ordering is graded lex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exp: Box<[u8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exp: vec![0u8; nvars].into_boxed_slice(),
        }
    }

    pub fn from_exponents(exp: &[u8]) -> Self {
        Monomial {
            deg: exp.iter().map(|&e| e as u32).sum(),
            exp: exp.to_vec().into_boxed_slice(),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        Self::from_exponents(&e)
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exp
    }

    pub fn nvars(&self) -> usize {
        self.exp.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exp: Vec<u8> = self
            .exp
            .iter()
            .zip(other.exp.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            deg: self.deg + other.deg,
            exp: exp.into_boxed_slice(),
        }
    }

    /// Degree restricted to the variable range `lo..hi`.
    pub fn block_degree(&self, lo: usize, hi: usize) -> u32 {
        self.exp[lo..hi].iter().map(|&e| e as u32).sum()
    }

    /// All exponent vectors of total degree `d` in `n` variables, in graded
    /// lex order (ascending).
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u8; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u8;
                out.push(Monomial::from_exponents(cur));
                cur[i] = 0;
                return;
            }
            for e in 0..=left {
                cur[i] = e as u8;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exp[..])
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable sets differ: ({0},{1}) vs ({2},{3})")]
    RingMismatch(usize, usize, usize, usize),
    #[error("Poisson bracket needs equally many x and p variables, got ({0},{1})")]
    NotSymplectic(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    num_x: usize,
    num_p: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(num_x: usize, num_p: usize) -> Self {
        MPoly {
            num_x,
            num_p,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_x: usize, num_p: usize, c: Rational) -> Self {
        let mut m = Self::zero(num_x, num_p);
        if !c.is_zero() {
            m.terms.insert(Monomial::one(num_x + num_p), c);
        }
        m
    }

    /// Variable with global index `i` (x block first).
    pub fn var(num_x: usize, num_p: usize, i: usize) -> Self {
        assert!(i < num_x + num_p, "variable index out of range");
        let mut m = Self::zero(num_x, num_p);
        m.terms
            .insert(Monomial::var(num_x + num_p, i), Rational::one());
        m
    }

    /// `x_i` with 1-based `i`.
    pub fn x(num_x: usize, num_p: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= num_x);
        Self::var(num_x, num_p, i - 1)
    }

    /// `p_i` with 1-based `i`.
    pub fn p(num_x: usize, num_p: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= num_p);
        Self::var(num_x, num_p, num_x + i - 1)
    }

    pub fn monomial(num_x: usize, num_p: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), num_x + num_p);
        let mut out = Self::zero(num_x, num_p);
        if !c.is_zero() {
            out.terms.insert(m, c);
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(
        num_x: usize,
        num_p: usize,
        it: I,
    ) -> Self {
        let mut out = Self::zero(num_x, num_p);
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn num_p(&self) -> usize {
        self.num_p
    }

    pub fn nvars(&self) -> usize {
        self.num_x + self.num_p
    }

    pub fn same_ring(&self, other: &MPoly) -> bool {
        self.num_x == other.num_x && self.num_p == other.num_p
    }

    pub fn check_ring(&self, other: &MPoly) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(
                self.num_x,
                self.num_p,
                other.num_x,
                other.num_p,
            ))
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Lowest total degree among terms.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.min_degree()?;
        (self.total_degree() == Some(d)).then_some(d)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &MPoly, c: &Rational) {
        assert!(self.same_ring(other), "ring mismatch");
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return Self::zero(self.num_x, self.num_p);
        }
        MPoly {
            num_x: self.num_x,
            num_p: self.num_p,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Product keeping only terms of total degree ≤ `max_deg`.
    pub fn mul_truncated(&self, other: &MPoly, max_deg: Option<u32>) -> MPoly {
        assert!(self.same_ring(other), "ring mismatch");
        let mut out = Self::zero(self.num_x, self.num_p);
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                if let Some(md) = max_deg {
                    if m1.degree() + m2.degree() > md {
                        // Terms are ordered by degree, so the rest of this row is too big.
                        break;
                    }
                }
                out.add_term(m1.mul(m2), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = Self::constant(self.num_x, self.num_p, Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Drop terms of total degree above `max_deg`.
    pub fn truncate(&self, max_deg: u32) -> MPoly {
        MPoly {
            num_x: self.num_x,
            num_p: self.num_p,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> MPoly {
        MPoly {
            num_x: self.num_x,
            num_p: self.num_p,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to the variable with global index `i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = Self::zero(self.num_x, self.num_p);
        for (m, c) in &self.terms {
            let e = m.exp[i];
            if e == 0 {
                continue;
            }
            let mut exp = m.exp.to_vec();
            exp[i] -= 1;
            out.terms.insert(
                Monomial {
                    deg: m.deg - 1,
                    exp: exp.into_boxed_slice(),
                },
                c * &Rational::from_int(e as i64),
            );
        }
        out
    }

    pub fn dx(&self, i: usize) -> MPoly {
        self.derivative(i - 1)
    }

    pub fn dp(&self, i: usize) -> MPoly {
        self.derivative(self.num_x + i - 1)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "point has wrong length");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exp.iter().enumerate() {
                if e > 0 {
                    t *= point[i].pow(e as u32);
                    if t.is_zero() {
                        break;
                    }
                }
            }
            acc += t;
        }
        acc
    }

    /// Compose with `images[i]` in place of variable `i`; result lives in the
    /// ring of the images.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let (nx, np) = images
            .first()
            .map_or((0, 0), |g| (g.num_x, g.num_p));
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|g| vec![MPoly::constant(nx, np, Rational::one()), g.clone()])
            .collect();
        let mut out = MPoly::zero(nx, np);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(nx, np, c.clone());
            for (i, &e) in m.exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out.add_assign_scaled(&t, &Rational::one());
        }
        out
    }

    /// `f(v + shift)`.
    pub fn translate(&self, shift: &[Rational]) -> MPoly {
        assert_eq!(shift.len(), self.nvars());
        let images: Vec<MPoly> = (0..self.nvars())
            .map(|i| {
                let mut g = MPoly::var(self.num_x, self.num_p, i);
                g.add_term(Monomial::one(self.nvars()), shift[i].clone());
                g
            })
            .collect();
        self.substitute(&images)
    }

    /// Re-embed into a ring with `num_x'`, `num_p'` variables; `map[i]` is the
    /// new global index of old variable `i`.
    pub fn embed(&self, num_x: usize, num_p: usize, map: &[usize]) -> MPoly {
        assert_eq!(map.len(), self.nvars());
        let n = num_x + num_p;
        let mut out = MPoly::zero(num_x, num_p);
        for (m, c) in &self.terms {
            let mut e = vec![0u8; n];
            for (i, &x) in m.exp.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial::from_exponents(&e), c.clone());
        }
        out
    }

    /// Degree of every term in the `p` block, if uniform.
    pub fn p_degree(&self) -> Option<u32> {
        let lo = self.num_x;
        let hi = self.nvars();
        let mut it = self.terms.keys().map(|m| m.block_degree(lo, hi));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Coefficients in the given list of monomials; `None` if a term falls
    /// outside the list.
    pub fn coords_in(&self, monomials: &[Monomial]) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); monomials.len()];
        let mut found = 0;
        for (i, m) in monomials.iter().enumerate() {
            if let Some(c) = self.terms.get(m) {
                out[i] = c.clone();
                found += 1;
            }
        }
        (found == self.terms.len()).then_some(out)
    }

    pub fn from_coords(num_x: usize, num_p: usize, monomials: &[Monomial], c: &[Rational]) -> MPoly {
        MPoly::from_terms(
            num_x,
            num_p,
            monomials.iter().cloned().zip(c.iter().cloned()),
        )
    }

    fn var_name(&self, i: usize) -> String {
        if i < self.num_x {
            format!("x{}", i + 1)
        } else {
            format!("p{}", i - self.num_x + 1)
        }
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &Rational::one());
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Rational::one());
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in m.exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.var_name(i)),
                    _ => factors.push(format!("{}^{}", self.var_name(i), e)),
                }
            }
            let neg = c.signum() < 0;
            let a = c.abs();
            let body = if factors.is_empty() {
                a.to_string()
            } else if a.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", a, factors.join("*"))
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u8>,
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    num_x: usize,
    num_p: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            num_x: self.num_x,
            num_p: self.num_p,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exp: m.exp.to_vec(),
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let n = raw.num_x + raw.num_p;
        let mut out = MPoly::zero(raw.num_x, raw.num_p);
        for t in raw.terms {
            if t.exp.len() != n {
                return Err(serde::de::Error::custom("exponent length mismatch"));
            }
            out.add_term(Monomial::from_exponents(&t.exp), t.coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let ms = Monomial::all_of_degree(2, 2);
        let e: Vec<Vec<u8>> = ms.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(e, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert!(Monomial::from_exponents(&[0, 0, 3]) > Monomial::from_exponents(&[2, 0, 0]));
    }

    #[test]
    fn arithmetic() {
        let x = MPoly::x(2, 0, 1);
        let y = MPoly::x(2, 0, 2);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.dx(1).to_string(), "2*x1 + 2*x2");
        let two = Rational::from_int(2);
        assert_eq!(sq.eval(&[two.clone(), Rational::one()]), Rational::from_int(9));
        assert_eq!(sq.truncate(1), MPoly::zero(2, 0));
    }

    #[test]
    fn translate_and_substitute() {
        let x = MPoly::x(1, 0, 1);
        let f = &x * &x;
        let g = f.translate(&[Rational::one()]);
        assert_eq!(g.to_string(), "x1^2 + 2*x1 + 1");
        let h = f.substitute(&[&x + &x]);
        assert_eq!(h.to_string(), "4*x1^2");
    }

    #[test]
    fn serde_roundtrip() {
        let f = &MPoly::x(1, 1, 1) * &MPoly::p(1, 1, 1);
        let f = &f + &MPoly::constant(1, 1, Rational::new(-1, 2));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"num_x":1,"num_p":1,"terms":[{"exp":[0,0],"coef":"-1/2"},{"exp":[1,1],"coef":"1"}]}"#
        );
        let back: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
