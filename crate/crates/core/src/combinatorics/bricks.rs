//! Brick tableaux of the one-row bipartitions `((ke),(je))` and the brick transpositions `Ψ_r`.

use super::partition::Bipartition;
use super::perm::{down, Perm};
use super::tableau::binomial;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrickError {
    #[error("{shape} is not of the form ((ke),(je)) for e = {e}")]
    Shape { shape: String, e: u8 },
}

/// Brick data for `λ = ((ke),(je))`: `k` bricks in component 1, `j` in component 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BrickShape {
    pub e: u8,
    pub k: u32,
    pub j: u32,
}

impl BrickShape {
    pub fn of(shape: &Bipartition, e: u8) -> Result<BrickShape, BrickError> {
        let err = || BrickError::Shape {
            shape: shape.to_string(),
            e,
        };
        if shape.level() != 2 {
            return Err(err());
        }
        let (c1, c2) = (shape.comp(1), shape.comp(2));
        if c1.len() != 1 || c2.len() != 1 {
            return Err(err());
        }
        let (p1, p2) = (c1.part(1), c2.part(1));
        if p1 % e as u32 != 0 || p2 % e as u32 != 0 {
            return Err(err());
        }
        Ok(BrickShape {
            e,
            k: p1 / e as u32,
            j: p2 / e as u32,
        })
    }

    pub fn bricks(&self) -> u32 {
        self.j + self.k
    }

    pub fn count(&self) -> u64 {
        binomial(self.bricks() as u64, self.j as u64)
    }

    /// The tableau `v(B_{i_1},…,B_{i_j})` with the listed bricks (1-based, increasing) in
    /// component 2, as a permutation in `t_λ` reading order.
    pub fn tableau(&self, comp2_bricks: &[u32]) -> Perm {
        assert_eq!(comp2_bricks.len(), self.j as usize);
        let e = self.e as u32;
        let mut entries = Vec::new();
        for &b in comp2_bricks {
            entries.extend((1..=e).map(|x| ((b - 1) * e + x) as u8));
        }
        for b in 1..=self.bricks() {
            if !comp2_bricks.contains(&b) {
                entries.extend((1..=e).map(|x| ((b - 1) * e + x) as u8));
            }
        }
        entries
    }

    /// All brick tableaux, in lexicographic order of the component-2 brick lists.
    pub fn all(&self) -> Vec<(Vec<u32>, Perm)> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.choose(1, &mut cur, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    }

    fn choose(&self, start: u32, cur: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Perm)>) {
        if cur.len() == self.j as usize {
            out.push((cur.clone(), self.tableau(cur)));
            return;
        }
        for b in start..=self.bricks() {
            cur.push(b);
            self.choose(b + 1, cur, out);
            cur.pop();
        }
    }
}

/// The word of `Ψ_r = ψ↓^{re}_{(r−1)e+1} ψ↓^{re+1}_{(r−1)e+2} ⋯ ψ↓^{(r+1)e−1}_{re}`.
pub fn brick_word(r: u32, e: u8) -> Vec<u8> {
    let e = e as u32;
    let mut w = Vec::new();
    for x in 0..e {
        w.extend(down((r * e + x) as u8, ((r - 1) * e + 1 + x) as u8));
    }
    w
}

/// `Ψ↓^x_y = Ψ_x Ψ_{x−1} ⋯ Ψ_y`.
pub fn brick_down(x: u32, y: u32, e: u8) -> Vec<u8> {
    let mut w = Vec::new();
    if x >= y {
        for r in (y..=x).rev() {
            w.extend(brick_word(r, e));
        }
    }
    w
}

/// `Ψ↑_y^x = Ψ_y Ψ_{y+1} ⋯ Ψ_x`.
pub fn brick_up(y: u32, x: u32, e: u8) -> Vec<u8> {
    let mut w = Vec::new();
    if x >= y {
        for r in y..=x {
            w.extend(brick_word(r, e));
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::perm::{from_word, normal_word};

    #[test]
    fn psi_one_for_e3() {
        assert_eq!(brick_word(1, 3), vec![3, 2, 1, 4, 3, 2, 5, 4, 3]);
    }

    #[test]
    fn six_six_has_six_brick_tableaux() {
        let s: Bipartition = "6|6".parse().unwrap();
        let b = BrickShape::of(&s, 3).unwrap();
        assert_eq!(b.all().len(), 6);
        let s: Bipartition = "9|9".parse().unwrap();
        assert_eq!(BrickShape::of(&s, 3).unwrap().all().len(), 20);
        assert!(BrickShape::of(&"7|6".parse().unwrap(), 3).is_err());
    }

    #[test]
    fn brick_word_is_canonical_for_second_brick_pair() {
        let s: Bipartition = "6|6".parse().unwrap();
        let b = BrickShape::of(&s, 3).unwrap();
        let t = b.tableau(&[1, 3]);
        assert_eq!(t[..6], [1, 2, 3, 7, 8, 9]);
        assert_eq!(normal_word(&t), brick_word(2, 3));
        assert_eq!(from_word(12, &brick_word(2, 3)), t);
    }
}
