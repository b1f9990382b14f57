//! Incremental sparse reduced row-echelon form.
//!
//! Rows are inserted one at a time; the stored rows are always fully reduced
//! against one another, so the final state is the unique RREF of everything
//! inserted so far.

use std::collections::BTreeMap;

use super::rational::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

fn coeff_at(row: &SparseVec, c: usize) -> Option<&Rational> {
    row.binary_search_by_key(&c, |(i, _)| *i)
        .ok()
        .map(|k| &row[k].1)
}

/// `a − f·b` for sorted sparse vectors.
fn axpy(a: &SparseVec, f: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(f * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = v.iter().cloned().collect();
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .cloned()
            .collect();
        for (c, f) in hits {
            for (j, x) in &self.rows[&c] {
                let e = acc.entry(*j).or_insert_with(Rational::zero);
                *e -= &f * x;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    /// Insert a vector; returns true if it increased the rank.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((p, lead)) = r.first().cloned() else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for (_, x) in r.iter_mut() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.values_mut() {
            if let Some(f) = coeff_at(row, p).cloned() {
                *row = axpy(row, &f, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        self.insert(&to_sparse(v))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn dense_rows(&self) -> Vec<Vec<Rational>> {
        self.rows.values().map(|r| to_dense(r, self.cols)).collect()
    }

    /// Basis of the null space of the inserted rows.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut out = Vec::new();
        for free in 0..self.cols {
            if self.rows.contains_key(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (p, row) in &self.rows {
                if let Some(x) = coeff_at(row, free) {
                    v[*p] = -x;
                }
            }
            out.push(v);
        }
        out
    }

    /// Kernel basis as sparse vectors.
    pub fn kernel_basis_sparse(&self) -> Vec<SparseVec> {
        let mut by_free: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for free in 0..self.cols {
            if !self.rows.contains_key(&free) {
                by_free.insert(free, vec![(free, Rational::one())]);
            }
        }
        for (p, row) in &self.rows {
            for (j, x) in row {
                if *j != *p {
                    if let Some(v) = by_free.get_mut(j) {
                        v.push((*p, -x));
                    }
                }
            }
        }
        by_free
            .into_values()
            .map(|mut v| {
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect()
    }
}
