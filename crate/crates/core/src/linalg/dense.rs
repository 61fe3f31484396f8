//! Dense square matrices: characteristic and minimal polynomials, polynomial evaluation and
//! generalized kernels.

use super::poly::UniPoly;
use super::scalar::{FieldSpec, Scalar};
use super::sparse::{Echelon, SparseMatrix, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DMatrix {
    pub field: FieldSpec,
    pub n: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl DMatrix {
    pub fn zeros(field: FieldSpec, n: usize) -> Self {
        DMatrix {
            field,
            n,
            data: vec![vec![field.zero(); n]; n],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = DMatrix::zeros(field, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        DMatrix {
            field,
            n: rows.len(),
            data: rows
                .iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        }
    }

    pub fn from_sparse(m: &SparseMatrix) -> Self {
        assert_eq!(m.nrows, m.ncols, "square matrix expected");
        DMatrix {
            field: m.field,
            n: m.nrows,
            data: m.rows.iter().map(|r| r.to_dense(m.ncols, m.field)).collect(),
        }
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_rows(
            self.field,
            self.n,
            self.data.iter().map(|r| SparseVec::from_dense(r)).collect(),
        )
    }

    /// Companion matrix of a monic polynomial (ones on the subdiagonal).
    pub fn companion(f: &UniPoly) -> Self {
        let f = f.monic();
        let n = f.deg();
        let mut m = DMatrix::zeros(f.field, n);
        for i in 1..n {
            m.data[i][i - 1] = f.field.one();
        }
        for i in 0..n {
            m.data[i][n - 1] = -f.coeff(i);
        }
        m
    }

    pub fn mul(&self, other: &DMatrix) -> DMatrix {
        let mut out = DMatrix::zeros(self.field, self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    if !other.data[k][j].is_zero() {
                        let t = a * &other.data[k][j];
                        out.data[i][j] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &DMatrix) -> DMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[i][j] += &other.data[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> DMatrix {
        DMatrix {
            field: self.field,
            n: self.n,
            data: self.data.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.data
            .iter()
            .map(|row| {
                let mut acc = self.field.zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.n {
            t += &self.data[i][i];
        }
        t
    }

    /// `f(M)` by Horner's rule.
    pub fn eval_poly(&self, f: &UniPoly) -> DMatrix {
        let mut acc = DMatrix::zeros(self.field, self.n);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..self.n {
                acc.data[i][i] += c;
            }
        }
        acc
    }

    pub fn rank(&self) -> usize {
        self.to_sparse().rank()
    }

    pub fn nullspace(&self) -> Vec<SparseVec> {
        self.to_sparse().nullspace()
    }

    /// Characteristic polynomial `det(x − M)` via reduction to Hessenberg form.
    pub fn char_poly(&self) -> UniPoly {
        let n = self.n;
        let f = self.field;
        let mut h = self.data.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if piv != m {
                h.swap(piv, m);
                for row in h.iter_mut() {
                    row.swap(piv, m);
                }
            }
            let inv = h[m][m - 1].inv().unwrap();
            for i in m + 1..n {
                if h[i][m - 1].is_zero() {
                    continue;
                }
                let u = &h[i][m - 1] * &inv;
                for j in 0..n {
                    let t = &u * &h[m][j];
                    h[i][j] -= &t;
                }
                for row in h.iter_mut() {
                    let t = &u * &row[i];
                    row[m] += &t;
                }
            }
        }
        let x = UniPoly::x(f);
        let mut p: Vec<UniPoly> = vec![UniPoly::one(f)];
        for m in 0..n {
            let mut next = x.sub(&UniPoly::constant(h[m][m].clone())).mul(&p[m]);
            let mut t = f.one();
            for i in 1..=m {
                t = &t * &h[m - i + 1][m - i];
                if t.is_zero() {
                    break;
                }
                let c = &t * &h[m - i][m];
                next = next.sub(&p[m - i].scale(&c));
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// Minimal polynomial: the lcm of the minimal polynomials of enough vectors to span.
    pub fn min_poly(&self) -> UniPoly {
        let n = self.n;
        let f = self.field;
        let mut span = Echelon::new();
        let mut result = UniPoly::one(f);
        for j in 0..n {
            let start = SparseVec::unit(j, f);
            if span.contains(&start) {
                continue;
            }
            let mut krylov = Echelon::new();
            let mut v = start.to_dense(n, f);
            let mut k = 0;
            loop {
                let sv = SparseVec::from_dense(&v);
                let aug = sv.add(&SparseVec::unit(n + k, f));
                let red = krylov.reduce(&aug);
                if red.first().map(|e| e.0 >= n).unwrap_or(false) {
                    let coeffs: Vec<Scalar> = (0..=k)
                        .map(|i| red.get(n + i).cloned().unwrap_or_else(|| f.zero()))
                        .collect();
                    result = result.lcm(&UniPoly::new(f, coeffs).monic());
                    break;
                }
                krylov.insert(&aug);
                span.insert(&sv);
                v = self.mul_vec(&v);
                k += 1;
            }
        }
        result
    }

    /// Basis of `ker g(M)^m`.
    pub fn generalized_kernel(&self, g: &UniPoly, m: u32) -> Vec<SparseVec> {
        self.eval_poly(&g.pow(m)).nullspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_nilpotent() {
        let q = FieldSpec::Rational;
        let id = DMatrix::identity(q, 4);
        assert_eq!(id.min_poly(), UniPoly::from_i64(q, &[-1, 1]));
        assert_eq!(id.char_poly(), UniPoly::from_i64(q, &[-1, 1]).pow(4));
        let j = DMatrix::from_i64(q, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(j.min_poly(), UniPoly::from_i64(q, &[0, 0, 0, 1]));
        assert_eq!(j.char_poly(), UniPoly::from_i64(q, &[0, 0, 0, 1]));
    }

    #[test]
    fn companion_matrices() {
        for field in [FieldSpec::Rational, FieldSpec::Prime(5)] {
            let f = UniPoly::from_i64(field, &[3, -1, 0, 2, 1]);
            let c = DMatrix::companion(&f);
            assert_eq!(c.min_poly(), f);
            assert_eq!(c.char_poly(), f);
            assert!(c.eval_poly(&f).data.iter().all(|r| r.iter().all(|x| x.is_zero())));
        }
    }

    #[test]
    fn min_divides_char_on_block_matrix() {
        let q = FieldSpec::Rational;
        let m = DMatrix::from_i64(
            q,
            &[vec![2, 1, 0, 0], vec![0, 2, 0, 0], vec![0, 0, 2, 0], vec![0, 0, 0, -1]],
        );
        let mp = m.min_poly();
        let cp = m.char_poly();
        assert_eq!(mp.deg(), 3);
        assert_eq!(cp.deg(), 4);
        assert!(mp.divides(&cp));
    }

    #[test]
    fn generalized_kernels() {
        let q = FieldSpec::Rational;
        let zero = DMatrix::zeros(q, 3);
        assert_eq!(zero.generalized_kernel(&UniPoly::x(q), 1).len(), 3);
        let j = DMatrix::from_i64(q, &[vec![5, 1], vec![0, 5]]);
        let g = UniPoly::from_i64(q, &[-5, 1]);
        assert_eq!(j.generalized_kernel(&g, 2).len(), 2);
        assert_eq!(j.generalized_kernel(&g, 1).len(), 1);
    }
}
