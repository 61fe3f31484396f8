//! Module elements in the standard basis and the word-level API: `apply_psi`, `apply_y`,
//! `project_e`, `act` and `normalize`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Scalar, SparseVec};

use super::engine::{Engine, Vector};
use super::relations::{psi_degree, swap_residues};

/// An element of `S^λ`: sparse coordinates indexed by interned tableau ids.
pub type ModuleElement = SparseVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} out of range for n = {n}")]
    Index { index: u8, n: usize },
    #[error("residue sequence has length {got}, expected {n}")]
    Path { got: usize, n: usize },
}

/// A single generator of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    Psi(u8),
    Y(u8),
    E(Vec<u8>),
}

/// `coefficient · y_{y_part} · ψ_{psi_part}` acting on `z_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub coefficient: Scalar,
    pub y_part: Vec<u8>,
    pub psi_part: Vec<u8>,
}

impl Word {
    pub fn psi(coefficient: Scalar, psi_part: &[u8]) -> Self {
        Word {
            coefficient,
            y_part: vec![],
            psi_part: psi_part.to_vec(),
        }
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.y_part
            .iter()
            .map(|&r| Letter::Y(r))
            .chain(self.psi_part.iter().map(|&r| Letter::Psi(r)))
            .collect()
    }
}

/// Degree of `w e(i)` where `i` is the residue sequence the word acts on.
pub fn word_degree(w: &Word, i: &[u8], e: u8) -> Result<i32, WordError> {
    let n = i.len();
    let mut deg = 2 * w.y_part.len() as i32;
    for &r in &w.y_part {
        if r == 0 || r as usize > n {
            return Err(WordError::Index { index: r, n });
        }
    }
    let mut j = i.to_vec();
    for &r in w.psi_part.iter().rev() {
        if r == 0 || r as usize >= n {
            return Err(WordError::Index { index: r, n });
        }
        deg += psi_degree(e, r, &j);
        j = swap_residues(&j, r);
    }
    Ok(deg)
}

impl Engine {
    fn lift(
        &mut self,
        v: &ModuleElement,
        mut f: impl FnMut(&mut Engine, u32) -> std::sync::Arc<Vector>,
    ) -> ModuleElement {
        let field = self.field;
        let mut pairs: Vec<(usize, Scalar)> = Vec::new();
        for (t, c) in v.iter() {
            let img = f(self, *t as u32);
            for &(s, x) in img.iter() {
                pairs.push((s as usize, c * &field.from_i64(x)));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn basis(&self, id: u32) -> ModuleElement {
        SparseVec::unit(id as usize, self.field)
    }

    pub fn z(&self) -> ModuleElement {
        self.basis(self.z_id())
    }

    pub fn apply_psi(&mut self, r: u8, v: &ModuleElement) -> ModuleElement {
        self.lift(v, |eng, t| eng.psi(r, t))
    }

    pub fn apply_y(&mut self, r: u8, v: &ModuleElement) -> ModuleElement {
        self.lift(v, |eng, t| eng.y(r, t))
    }

    /// `e(i) v`: keeps the terms whose tableau has residue sequence `i`.
    pub fn project_e(&self, i: &[u8], v: &ModuleElement) -> ModuleElement {
        SparseVec::from_pairs(
            v.iter()
                .filter(|(t, _)| self.residues(*t as u32) == i)
                .map(|(t, c)| (*t, c.clone())),
        )
    }

    /// Applies a product of generators, rightmost letter first.
    pub fn act(&mut self, letters: &[Letter], v: &ModuleElement) -> ModuleElement {
        let mut cur = v.clone();
        for l in letters.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = match l {
                Letter::Psi(r) => self.apply_psi(*r, &cur),
                Letter::Y(r) => self.apply_y(*r, &cur),
                Letter::E(i) => self.project_e(i, &cur),
            };
        }
        cur
    }

    /// Applies the ψ-word (rightmost first) to `v`.
    pub fn act_psi_word(&mut self, word: &[u8], v: &ModuleElement) -> ModuleElement {
        let mut cur = v.clone();
        for &a in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.apply_psi(a, &cur);
        }
        cur
    }

    /// `w · z_λ` in the standard basis.
    pub fn normalize(&mut self, w: &Word) -> Result<ModuleElement, WordError> {
        let n = self.n();
        for &r in &w.psi_part {
            if r == 0 || r as usize >= n {
                return Err(WordError::Index { index: r, n });
            }
        }
        for &r in &w.y_part {
            if r == 0 || r as usize > n {
                return Err(WordError::Index { index: r, n });
            }
        }
        let z = self.z();
        Ok(self.act(&w.letters(), &z).scale(&w.coefficient))
    }

    /// `v_t` for a standard tableau `w_t`.
    pub fn basis_vector(&mut self, w: &[u8]) -> ModuleElement {
        let id = self.id_of(w);
        self.basis(id)
    }

    /// Pretty form `c·v[tableau] + …`.
    pub fn describe(&self, v: &ModuleElement) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        v.iter()
            .map(|(t, c)| format!("{}·v[{}]", c, self.layout.tableau_string(self.perm(*t as u32))))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
