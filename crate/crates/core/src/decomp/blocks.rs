//! Matrices of an endomorphism on the whole of `S^λ`, split into weight blocks (and degree
//! blocks for homogeneous degree-0 maps), with characteristic polynomials per block.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::endo::EndoMap;
use crate::klr::ModuleElement;
use crate::linalg::{factor, DMatrix, UniPoly};
use crate::specht::SpechtModule;

/// Standard basis grouped into blocks preserved by every degree-0 endomorphism.
pub struct Blocks {
    pub blocks: Vec<Vec<u32>>,
}

impl Blocks {
    pub fn of(module: &mut SpechtModule, split_degrees: bool) -> Blocks {
        let basis = module.basis();
        let mut groups: BTreeMap<(Vec<u8>, i32), Vec<u32>> = BTreeMap::new();
        for t in basis {
            let deg = if split_degrees { module.engine.degree(t) } else { 0 };
            groups
                .entry((module.engine.residues(t).to_vec(), deg))
                .or_default()
                .push(t);
        }
        Blocks {
            blocks: groups.into_values().collect(),
        }
    }

    pub fn largest(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).max().unwrap_or(0)
    }
}

/// Dense matrix of `φ` on one block (columns are images of the block's basis vectors).
pub fn block_matrix(module: &mut SpechtModule, map: &mut EndoMap, block: &[u32]) -> DMatrix {
    let field = module.field;
    let k = block.len();
    let pos: HashMap<u32, usize> = block.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut mat = DMatrix::zeros(field, k);
    for (col, &t) in block.iter().enumerate() {
        let img = map.column(&mut module.engine, t);
        for (s, c) in img.iter() {
            let row = *pos
                .get(&(*s as u32))
                .expect("endomorphism preserves weight and degree blocks");
            mat.data[row][col] = c.clone();
        }
    }
    mat
}

/// Whether `u = φ(z_λ)` is homogeneous of degree 0.
pub fn is_degree_zero(module: &SpechtModule, u: &ModuleElement) -> bool {
    let dz = module.presentation.deg_z;
    u.iter().all(|(t, _)| module.engine.degree(*t as u32) == dz)
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenFactor {
    /// Monic irreducible factor of the characteristic polynomial.
    pub factor: String,
    pub degree: usize,
    pub multiplicity: u32,
    /// Dimension of the generalized eigenspace.
    pub generalized_dim: usize,
    /// The eigenvalue, when the factor is linear.
    pub eigenvalue: Option<String>,
}

/// Factorization of the characteristic polynomial of `φ` on `S^λ`, assembled blockwise.
pub fn eigenvalues_of(module: &mut SpechtModule, u: &ModuleElement) -> Vec<EigenFactor> {
    let field = module.field;
    let homogeneous = is_degree_zero(module, u);
    let blocks = Blocks::of(module, homogeneous);
    let mut map = EndoMap::new(field, u);
    let mut acc: Vec<(UniPoly, u32)> = Vec::new();
    for block in &blocks.blocks {
        let mat = block_matrix(module, &mut map, block);
        let cp = mat.char_poly();
        let f = factor(&cp).expect("characteristic polynomial is nonzero");
        for (g, m) in f.factors {
            match acc.iter_mut().find(|(h, _)| *h == g) {
                Some(slot) => slot.1 += m,
                None => acc.push((g, m)),
            }
        }
    }
    acc.sort_by_key(|a| (a.0.deg(), a.0.to_string()));
    acc.into_iter()
        .map(|(g, m)| EigenFactor {
            factor: g.to_string(),
            degree: g.deg(),
            multiplicity: m,
            generalized_dim: g.deg() * m as usize,
            eigenvalue: (g.deg() == 1).then(|| (-&g.coeff(0)).to_string()),
        })
        .collect()
}
