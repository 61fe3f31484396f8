//! Bicharges, residues and the Cartan pairing.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChargeError {
    #[error("quantum characteristic e must be finite; e = ∞ is not supported")]
    InfiniteE,
    #[error("quantum characteristic must satisfy e ≥ 2, got {0}")]
    SmallE(i64),
    #[error("charge has {got} entries but the shape has level {level}")]
    Level { got: usize, level: usize },
    #[error("invalid charge string {0:?}")]
    Parse(String),
}

/// An `e`-bicharge `(κ_1, κ_2)` (a single entry at level 1). Entries are stored reduced mod `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bicharge {
    pub e: u8,
    pub kappa: Vec<u8>,
}

impl Bicharge {
    pub fn new(e: i64, kappa: &[i64]) -> Result<Self, ChargeError> {
        if e < 2 {
            return Err(ChargeError::SmallE(e));
        }
        if e > 255 {
            return Err(ChargeError::SmallE(e));
        }
        Ok(Bicharge {
            e: e as u8,
            kappa: kappa.iter().map(|&k| k.rem_euclid(e) as u8).collect(),
        })
    }

    /// Parses `e` given as text, rejecting `∞`/`inf`.
    pub fn parse_e(text: &str) -> Result<i64, ChargeError> {
        let t = text.trim();
        if matches!(t, "∞" | "inf" | "infinity" | "oo") {
            return Err(ChargeError::InfiniteE);
        }
        t.parse::<i64>().map_err(|_| ChargeError::Parse(text.to_string()))
    }

    /// Parses `"k1,k2"` (or a single residue at level 1).
    pub fn parse_kappa(text: &str) -> Result<Vec<i64>, ChargeError> {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| ChargeError::Parse(text.to_string()))
            })
            .collect()
    }

    pub fn zero(e: u8, level: usize) -> Self {
        Bicharge {
            e,
            kappa: vec![0; level],
        }
    }

    pub fn level(&self) -> usize {
        self.kappa.len()
    }

    /// Replaces a charge with equal entries by the zero charge; returns the shift applied.
    pub fn normalized(&self) -> (Bicharge, u8) {
        if !self.kappa.is_empty() && self.kappa.iter().all(|&k| k == self.kappa[0]) {
            (Bicharge::zero(self.e, self.kappa.len()), self.kappa[0])
        } else {
            (self.clone(), 0)
        }
    }

    pub fn check_level(&self, level: usize) -> Result<(), ChargeError> {
        if self.kappa.len() != level {
            return Err(ChargeError::Level {
                got: self.kappa.len(),
                level,
            });
        }
        Ok(())
    }

    /// Residue of the node `(row, col, comp)`.
    pub fn residue(&self, row: u32, col: u32, comp: usize) -> u8 {
        let e = self.e as i64;
        (self.kappa[comp - 1] as i64 + col as i64 - row as i64).rem_euclid(e) as u8
    }

    /// Multiplicity of `i` among the charge entries.
    pub fn multiplicity(&self, i: u8) -> usize {
        self.kappa.iter().filter(|&&k| k == i).count()
    }

    pub fn cartan(&self) -> CartanData {
        CartanData { e: self.e }
    }
}

/// The Cartan matrix of type `A^{(1)}_{e-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanData {
    pub e: u8,
}

impl CartanData {
    pub fn a(&self, i: u8, j: u8) -> i32 {
        let e = self.e;
        if i == j {
            return 2;
        }
        if e == 2 {
            return -2;
        }
        if (i + 1) % e == j || (j + 1) % e == i {
            -1
        } else {
            0
        }
    }

    /// Degree of `ψ_r e(i)` when `i_r = i`, `i_{r+1} = j`.
    pub fn psi_degree(&self, i: u8, j: u8) -> i32 {
        -self.a(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        let c = Bicharge::new(3, &[0, 0]).unwrap();
        assert_eq!(c.residue(1, 1, 1), 0);
        assert_eq!(c.residue(1, 1, 2), 0);
        assert_eq!(c.residue(2, 1, 1), 2);
        assert_eq!(c.residue(1, 3, 2), 2);
        let c = Bicharge::new(3, &[4, -1]).unwrap();
        assert_eq!(c.kappa, vec![1, 2]);
    }

    #[test]
    fn infinite_e_rejected() {
        assert_eq!(Bicharge::parse_e("∞"), Err(ChargeError::InfiniteE));
        assert_eq!(Bicharge::parse_e("3"), Ok(3));
        assert!(Bicharge::new(1, &[0]).is_err());
    }

    #[test]
    fn cartan_entries() {
        let c = CartanData { e: 3 };
        assert_eq!(c.a(0, 0), 2);
        assert_eq!(c.a(0, 1), -1);
        assert_eq!(c.a(2, 0), -1);
        let c = CartanData { e: 4 };
        assert_eq!(c.a(0, 2), 0);
        let c = CartanData { e: 2 };
        assert_eq!(c.a(0, 1), -2);
        assert_eq!(c.a(1, 0), -2);
    }

    #[test]
    fn normalization_records_shift() {
        let c = Bicharge::new(3, &[2, 2]).unwrap();
        let (n, s) = c.normalized();
        assert_eq!(n.kappa, vec![0, 0]);
        assert_eq!(s, 2);
        let c = Bicharge::new(3, &[0, 1]).unwrap();
        assert_eq!(c.normalized().1, 0);
    }
}
