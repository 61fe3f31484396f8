//! Sparse vectors and matrices with exact Gaussian elimination.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::scalar::{FieldSpec, LinalgError, Scalar};

/// Sorted `(index, value)` pairs with no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, field: FieldSpec) -> Self {
        SparseVec {
            entries: vec![(i, field.one())],
        }
    }

    /// Builds from arbitrary pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            match map.get_mut(&i) {
                Some(x) => *x += &v,
                None => {
                    map.insert(i, v);
                }
            }
        }
        SparseVec {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: FieldSpec) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn first(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn last(&self) -> Option<&(usize, Scalar)> {
        self.entries.last()
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c · other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0).unwrap_or(usize::MAX);
            let ib = other.entries.get(b).map(|e| e.0).unwrap_or(usize::MAX);
            if ia < ib {
                out.push(self.entries[a].clone());
                a += 1;
            } else if ib < ia {
                out.push((ib, c * &other.entries[b].1));
                b += 1;
            } else {
                let v = &self.entries[a].1 + &(c * &other.entries[b].1);
                if !v.is_zero() {
                    out.push((ia, v));
                }
                a += 1;
                b += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&v.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&-v.field().one(), other),
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Option<Scalar> {
        let mut acc: Option<Scalar> = None;
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (ia, ib) = (self.entries[a].0, other.entries[b].0);
            if ia < ib {
                a += 1;
            } else if ib < ia {
                b += 1;
            } else {
                let t = &self.entries[a].1 * &other.entries[b].1;
                acc = Some(match acc {
                    None => t,
                    Some(x) => x + t,
                });
                a += 1;
                b += 1;
            }
        }
        acc
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }
}

/// An incrementally built row-echelon basis: each stored row has pivot coefficient 1 at its
/// first index and no other stored row has a nonzero entry at that pivot.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.first().unwrap().0).collect()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_of.contains_key(&i)
    }

    /// Reduces `v` modulo the span; the result has no entries at pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        loop {
            let hit = cur
                .iter()
                .find_map(|(i, c)| self.pivot_of.get(i).map(|&r| (r, c.clone())));
            match hit {
                None => return cur,
                Some((r, c)) => cur = cur.add_scaled(&-c, &self.rows[r]),
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let red = self.reduce(v);
        let Some((p, c)) = red.first().cloned() else {
            return false;
        };
        let row = red.scale(&c.inv().unwrap());
        for other in self.rows.iter_mut() {
            if let Some(x) = other.get(p).cloned() {
                *other = other.add_scaled(&-x, &row);
            }
        }
        self.pivot_of.insert(p, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

/// A sparse matrix stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub field: FieldSpec,
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
}

/// One nonzero entry in serialized form: `[row, col, "value"]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triplet(pub usize, pub usize, pub String);

impl SparseMatrix {
    pub fn zeros(field: FieldSpec, nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            field,
            nrows,
            ncols,
            rows: vec![SparseVec::new(); nrows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        SparseMatrix {
            field,
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| SparseVec::unit(i, field)).collect(),
        }
    }

    pub fn from_rows(field: FieldSpec, ncols: usize, rows: Vec<SparseVec>) -> Self {
        SparseMatrix {
            field,
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// The matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(field: FieldSpec, nrows: usize, cols: &[SparseVec]) -> Self {
        let mut m = SparseMatrix::zeros(field, cols.len(), nrows);
        m.rows = cols.to_vec();
        m.transpose()
    }

    pub fn from_triplets(
        field: FieldSpec,
        nrows: usize,
        ncols: usize,
        triplets: &[(usize, usize, Scalar)],
    ) -> Result<Self, LinalgError> {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            if *r >= nrows || *c >= ncols {
                return Err(LinalgError::Dimension(format!(
                    "entry ({r},{c}) outside {nrows}×{ncols}"
                )));
            }
            buckets[*r].push((*c, v.clone()));
        }
        Ok(SparseMatrix {
            field,
            nrows,
            ncols,
            rows: buckets.into_iter().map(SparseVec::from_pairs).collect(),
        })
    }

    pub fn triplets(&self) -> Vec<Triplet> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row.iter() {
                out.push(Triplet(r, *c, v.to_string()));
            }
        }
        out
    }

    pub fn parse_triplets(
        field: FieldSpec,
        nrows: usize,
        ncols: usize,
        trips: &[Triplet],
    ) -> Result<Self, LinalgError> {
        let parsed: Result<Vec<_>, _> = trips.iter().map(|t| field.parse(&t.2).map(|v| (t.0, t.1, v))).collect();
        SparseMatrix::from_triplets(field, nrows, ncols, &parsed?)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.rows[r].get(c).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row.iter() {
                buckets[*c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows: buckets.into_iter().map(|b| SparseVec { entries: b }).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(r, row)| row.dot(v).map(|x| (r, x))),
        )
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "matrix product shape mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = SparseVec::new();
                for (k, v) in row.iter() {
                    acc = acc.add_scaled(v, &other.rows[*k]);
                }
                acc
            })
            .collect();
        SparseMatrix {
            field: self.field,
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for row in &self.rows {
            e.insert(row);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Kernel basis `{x : M x = 0}` in reduced form: one vector per free column, with a `1`
    /// there and zeros at the other free columns.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let e = self.echelon();
        let pivots: Vec<usize> = e.pivots();
        let mut out = Vec::new();
        for free in 0..self.ncols {
            if e.is_pivot(free) {
                continue;
            }
            let mut pairs = vec![(free, self.field.one())];
            for (row, &p) in e.rows().iter().zip(pivots.iter()) {
                if let Some(x) = row.get(free) {
                    pairs.push((p, -x));
                }
            }
            out.push(SparseVec::from_pairs(pairs));
        }
        out
    }

    /// A solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let aug_col = self.ncols;
        let mut e = Echelon::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut pairs: Vec<(usize, Scalar)> = row.iter().cloned().collect();
            if let Some(x) = b.get(r) {
                pairs.push((aug_col, x.clone()));
            }
            e.insert(&SparseVec::from_pairs(pairs));
        }
        for (r, _) in b.iter() {
            if *r >= self.nrows {
                return None;
            }
        }
        let mut x = Vec::new();
        for row in e.rows() {
            let (p, _) = row.first().unwrap();
            if *p == aug_col {
                return None;
            }
            if let Some(v) = row.get(aug_col) {
                x.push((*p, v.clone()));
            }
        }
        Some(SparseVec::from_pairs(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense_rank(field: FieldSpec, m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<Scalar>> = m
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        let (rows, cols) = (a.len(), a[0].len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let inv = a[rank][c].inv().unwrap();
            for r in 0..rows {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] * &inv;
                    for k in 0..cols {
                        let t = &f * &a[rank][k];
                        a[r][k] -= &t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_and_zero_kernels() {
        let f = FieldSpec::Rational;
        assert!(SparseMatrix::identity(f, 4).nullspace().is_empty());
        assert_eq!(SparseMatrix::zeros(f, 3, 3).nullspace().len(), 3);
    }

    #[test]
    fn random_low_rank_kernels() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for field in [FieldSpec::Rational, FieldSpec::Prime(3), FieldSpec::Prime(101)] {
            for r in [0usize, 3, 10, 20] {
                let left: Vec<Vec<i64>> = (0..20)
                    .map(|_| (0..r).map(|_| rng.gen_range(-3..=3)).collect())
                    .collect();
                let right: Vec<Vec<i64>> = (0..r)
                    .map(|_| (0..30).map(|_| rng.gen_range(-3..=3)).collect())
                    .collect();
                let m: Vec<Vec<i64>> = (0..20)
                    .map(|i| {
                        (0..30)
                            .map(|j| (0..r).map(|k| left[i][k] * right[k][j]).sum())
                            .collect()
                    })
                    .collect();
                let trips: Vec<(usize, usize, Scalar)> = m
                    .iter()
                    .enumerate()
                    .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &x)| (i, j, field.from_i64(x))))
                    .collect();
                let sm = SparseMatrix::from_triplets(field, 20, 30, &trips).unwrap();
                let rank = dense_rank(field, &m);
                let ker = sm.nullspace();
                assert_eq!(ker.len(), 30 - rank);
                for v in &ker {
                    assert!(sm.mul_vec(v).is_zero());
                }
            }
        }
    }

    #[test]
    fn solve_and_triplets() {
        let f = FieldSpec::Rational;
        let m = SparseMatrix::from_triplets(
            f,
            2,
            2,
            &[(0, 0, f.from_i64(2)), (0, 1, f.from_i64(1)), (1, 1, f.from_i64(3))],
        )
        .unwrap();
        let b = SparseVec::from_pairs([(0, f.from_i64(1)), (1, f.from_i64(1))]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let t = m.triplets();
        assert_eq!(SparseMatrix::parse_triplets(f, 2, 2, &t).unwrap(), m);
        let singular = SparseMatrix::from_triplets(f, 2, 2, &[(0, 0, f.one())]).unwrap();
        assert!(singular.solve(&SparseVec::unit(1, f)).is_none());
    }
}
