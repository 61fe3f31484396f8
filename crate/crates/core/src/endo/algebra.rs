//! Structure constants of `End(S^λ)` in the basis of [`EndoSpace`].

use crate::klr::ModuleElement;
use crate::linalg::{DMatrix, FieldSpec, Scalar, SparseVec};
use crate::specht::SpechtModule;

use super::map::EndoMap;
use super::space::{EndoError, EndoSpace};

/// `table[a][b]` holds the coordinates of `φ_a ∘ φ_b`.
#[derive(Debug, Clone)]
pub struct EndoAlgebra {
    pub space: EndoSpace,
    pub table: Vec<Vec<SparseVec>>,
}

/// Expands `φ_a(u_b)` in the basis for every pair.
pub fn structure_constants(module: &mut SpechtModule, space: &EndoSpace) -> Result<EndoAlgebra, EndoError> {
    let m = space.dim();
    let mut table = vec![vec![SparseVec::new(); m]; m];
    for a in 0..m {
        let mut map = EndoMap::new(space.field, &space.basis[a]);
        for b in 0..m {
            let img = map.apply(&mut module.engine, &space.basis[b]);
            table[a][b] = space.coords(&img).ok_or(EndoError::NotInSpan)?;
        }
    }
    Ok(EndoAlgebra {
        space: space.clone(),
        table,
    })
}

impl EndoAlgebra {
    pub fn field(&self) -> FieldSpec {
        self.space.field
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn one(&self) -> SparseVec {
        SparseVec::unit(0, self.field())
    }

    pub fn basis_vector(&self, a: usize) -> SparseVec {
        SparseVec::unit(a, self.field())
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out = out.add_scaled(&(ca * cb), &self.table[*a][*b]);
            }
        }
        out
    }

    pub fn pow(&self, x: &SparseVec, mut e: u64) -> SparseVec {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The module element `φ(z_λ)` of an algebra element.
    pub fn element(&self, x: &SparseVec) -> ModuleElement {
        let mut out = SparseVec::new();
        for (a, c) in x.iter() {
            out = out.add_scaled(c, &self.space.basis[*a]);
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.dim();
        (0..m).all(|a| (0..a).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn is_associative(&self) -> bool {
        let m = self.dim();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let ab = &self.table[a][b];
                    let bc = &self.table[b][c];
                    let left = self.mul(ab, &self.basis_vector(c));
                    let right = self.mul(&self.basis_vector(a), bc);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether basis element 0 acts as the identity on both sides.
    pub fn has_unit(&self) -> bool {
        (0..self.dim()).all(|a| self.table[0][a] == self.basis_vector(a) && self.table[a][0] == self.basis_vector(a))
    }

    /// Left multiplication by `x` restricted to the span of `indices` (assumed closed).
    pub fn left_matrix(&self, x: &SparseVec, indices: &[usize]) -> DMatrix {
        let k = indices.len();
        let field = self.field();
        let pos: std::collections::HashMap<usize, usize> = indices.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut mat = DMatrix::zeros(field, k);
        for (col, &b) in indices.iter().enumerate() {
            let img = self.mul(x, &self.basis_vector(b));
            for (a, c) in img.iter() {
                let row = *pos.get(a).expect("subalgebra closed under multiplication");
                mat.data[row][col] = c.clone();
            }
        }
        mat
    }

    pub fn scalar(&self, c: i64) -> Scalar {
        self.field().from_i64(c)
    }
}
