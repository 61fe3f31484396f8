//! The KLR relations used by the engine: quadratic and braid error terms, grading, and the
//! sign conventions for `e = 2`.

use serde::{Deserialize, Serialize};

use crate::combinatorics::CartanData;

/// A polynomial in `y_1, …, y_n`: `(coefficient, monomial)` with the monomial listed as
/// (unsorted) indices.
pub type YPoly = Vec<(i64, Vec<u8>)>;

/// Signs of the `e = 2` quadratic and braid relations:
/// `ψ_r² e(i) = σ_q (y_r − y_{r+1})² e(i)` when `i_r ≠ i_{r+1}`, and
/// `ψ_rψ_{r+1}ψ_r e(i) = (ψ_{r+1}ψ_rψ_{r+1} + σ_b (y_r + y_{r+2} − 2y_{r+1})) e(i)` when
/// `i_r = i_{r+2} ≠ i_{r+1}`. Ignored for `e ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Conventions {
    pub quad_sign: i8,
    pub braid_sign: i8,
}

impl Conventions {
    /// The convention pinned by the `e2-pin` suite.
    pub const PINNED: Conventions = Conventions {
        quad_sign: -1,
        braid_sign: 1,
    };

    pub fn candidates() -> [Conventions; 4] {
        let c = |q, b| Conventions {
            quad_sign: q,
            braid_sign: b,
        };
        [c(-1, 1), c(1, -1), c(1, 1), c(-1, -1)]
    }

    pub fn label(&self) -> String {
        let s = |x: i8| if x > 0 { "+" } else { "-" };
        format!("quad{}braid{}", s(self.quad_sign), s(self.braid_sign))
    }
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions::PINNED
    }
}

fn adjacent_up(e: u8, a: u8, b: u8) -> bool {
    (b + 1) % e == a
}

/// `ψ_r² e(j)` as a polynomial in the `y`'s (`r` is 1-based, `j` the residue sequence).
pub fn quadratic(e: u8, conv: Conventions, r: u8, j: &[u8]) -> YPoly {
    let (a, b) = (j[r as usize - 1], j[r as usize]);
    if a == b {
        return vec![];
    }
    if e == 2 {
        let s = conv.quad_sign as i64;
        return vec![(s, vec![r, r]), (-2 * s, vec![r, r + 1]), (s, vec![r + 1, r + 1])];
    }
    let up = adjacent_up(e, a, b);
    let down = adjacent_up(e, b, a);
    if up {
        vec![(1, vec![r + 1]), (-1, vec![r])]
    } else if down {
        vec![(1, vec![r]), (-1, vec![r + 1])]
    } else {
        vec![(1, vec![])]
    }
}

/// `ψ_rψ_{r+1}ψ_r e(j) − ψ_{r+1}ψ_rψ_{r+1} e(j)`.
pub fn braid_error(e: u8, conv: Conventions, r: u8, j: &[u8]) -> YPoly {
    let (a, b, c) = (j[r as usize - 1], j[r as usize], j[r as usize + 1]);
    if a != c || a == b {
        return vec![];
    }
    if e == 2 {
        let s = conv.braid_sign as i64;
        return vec![(s, vec![r]), (s, vec![r + 2]), (-2 * s, vec![r + 1])];
    }
    if adjacent_up(e, a, b) {
        vec![(1, vec![])]
    } else if adjacent_up(e, b, a) {
        vec![(-1, vec![])]
    } else {
        vec![]
    }
}

/// Degree of `ψ_r e(j)`.
pub fn psi_degree(e: u8, r: u8, j: &[u8]) -> i32 {
    CartanData { e }.psi_degree(j[r as usize - 1], j[r as usize])
}

/// `s_r · j`: swap positions `r` and `r + 1`.
pub fn swap_residues(j: &[u8], r: u8) -> Vec<u8> {
    let mut out = j.to_vec();
    out.swap(r as usize - 1, r as usize);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_cases_e3() {
        let c = Conventions::PINNED;
        assert!(quadratic(3, c, 1, &[0, 0]).is_empty());
        assert_eq!(quadratic(4, c, 1, &[0, 2]), vec![(1, vec![])]);
        assert_eq!(quadratic(3, c, 1, &[1, 0]), vec![(1, vec![2]), (-1, vec![1])]);
        assert_eq!(quadratic(3, c, 1, &[0, 1]), vec![(1, vec![1]), (-1, vec![2])]);
    }

    #[test]
    fn braid_cases() {
        let c = Conventions::PINNED;
        assert_eq!(braid_error(3, c, 1, &[1, 0, 1]), vec![(1, vec![])]);
        assert_eq!(braid_error(3, c, 1, &[0, 1, 0]), vec![(-1, vec![])]);
        assert!(braid_error(4, c, 1, &[0, 2, 0]).is_empty());
        assert_eq!(braid_error(2, c, 2, &[0, 0, 1, 0]).len(), 3);
    }

    #[test]
    fn degrees() {
        assert_eq!(psi_degree(3, 1, &[0, 0]), -2);
        assert_eq!(psi_degree(3, 1, &[0, 1]), 1);
        assert_eq!(psi_degree(4, 1, &[0, 2]), 0);
        assert_eq!(psi_degree(2, 1, &[0, 1]), 2);
    }
}
