//! Evaluating an endomorphism on `S^λ` from its image of `z_λ`:
//! `φ(v_t) = ψ_{w_t} φ(z_λ)` along the normal word of `w_t`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::klr::{Engine, ModuleElement, Vector};
use crate::linalg::{FieldSpec, Scalar, SparseVec};

/// An endomorphism with integer-scaled image `D·φ(z_λ)` and memoized word images.
pub struct EndoMap {
    pub field: FieldSpec,
    inv_scale: Scalar,
    image: Arc<Vector>,
    memo: HashMap<Vec<u8>, Arc<Vector>>,
}

impl EndoMap {
    pub fn new(field: FieldSpec, u: &ModuleElement) -> EndoMap {
        let mut d = BigInt::one();
        for (_, c) in u.iter() {
            if let Some(q) = c.as_rational() {
                d = d.lcm(q.denom());
            }
        }
        let scale = field.from_bigint(&d);
        let image: Vector = u
            .iter()
            .map(|(t, c)| {
                let x = match c.as_rational() {
                    Some(q) => (q * num_rational::BigRational::from_integer(d.clone()))
                        .to_integer()
                        .to_i64()
                        .expect("endomorphism coefficients fit in i64"),
                    None => c.to_i64().expect("residue"),
                };
                (*t as u32, x)
            })
            .collect();
        EndoMap {
            field,
            inv_scale: scale.inv().expect("denominator invertible"),
            image: Arc::new(image),
            memo: HashMap::new(),
        }
    }

    /// `D · ψ_word φ(z_λ)` with the rightmost letter applied first.
    fn word_image(&mut self, eng: &mut Engine, word: &[u8]) -> Arc<Vector> {
        if word.is_empty() {
            return self.image.clone();
        }
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let rest = self.word_image(eng, &word[1..]);
        let v = Arc::new(eng.psi_vec(word[0], &rest));
        self.memo.insert(word.to_vec(), v.clone());
        v
    }

    /// `D · φ(v_t)` as an integer (or residue) vector.
    pub fn column_scaled(&mut self, eng: &mut Engine, t: u32) -> Arc<Vector> {
        let word = eng.normal_word(t);
        self.word_image(eng, &word)
    }

    fn unscale(&self, v: &[(u32, i64)]) -> ModuleElement {
        SparseVec::from_pairs(
            v.iter()
                .map(|&(s, c)| (s as usize, &self.field.from_i64(c) * &self.inv_scale)),
        )
    }

    pub fn column(&mut self, eng: &mut Engine, t: u32) -> ModuleElement {
        let v = self.column_scaled(eng, t);
        self.unscale(&v)
    }

    /// `φ(v)` for an arbitrary element.
    pub fn apply(&mut self, eng: &mut Engine, v: &ModuleElement) -> ModuleElement {
        let mut out = SparseVec::new();
        for (t, c) in v.iter() {
            let col = self.column(eng, *t as u32);
            out = out.add_scaled(c, &col);
        }
        out
    }

    pub fn clear_memo(&mut self) {
        self.memo.clear();
    }
}

/// `φ(v)` where `φ(z_λ) = u`.
pub fn apply_endo(eng: &mut Engine, u: &ModuleElement, v: &ModuleElement) -> ModuleElement {
    EndoMap::new(eng.field, u).apply(eng, v)
}
