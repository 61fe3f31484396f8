//! The defining presentation of the column Specht module of a (bi)hook shape.

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{Bicharge, Bipartition, ChargeError, Layout, ShapeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpechtError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Charge(#[from] ChargeError),
    #[error("shape {0} is empty")]
    Empty(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// `z_λ` with `e(i_λ) z = z`, `y_r z = 0`, `ψ_r z = 0` for `r ∈ killers`, and the Garnir
/// strings applied to `z` vanishing.
#[derive(Debug, Clone, Serialize)]
pub struct SpechtPresentation {
    pub shape: String,
    pub n: usize,
    pub e: u8,
    /// The charge used internally (equal entries are normalized to zero).
    pub kappa: Vec<u8>,
    /// Residue shift removed by the normalization.
    pub shift: u8,
    pub allowed: Vec<u8>,
    pub killers: Vec<u8>,
    pub garnir: Vec<Vec<u8>>,
    pub i_lambda: Vec<u8>,
    pub deg_z: i32,
    #[serde(skip)]
    pub layout: Layout,
}

impl SpechtPresentation {
    pub fn new(shape: &Bipartition, charge: &Bicharge) -> Result<SpechtPresentation, SpechtError> {
        shape.require_hooks()?;
        charge.check_level(shape.level())?;
        if shape.size() == 0 {
            return Err(SpechtError::Empty(shape.to_string()));
        }
        let (charge, shift) = charge.normalized();
        let layout = Layout::new(shape, &charge)?;
        let n = layout.n;
        let allowed: Vec<u8> = (1..n as u8).filter(|r| !layout.killers.contains(r)).collect();
        let ident: Vec<u8> = (1..=n as u8).collect();
        Ok(SpechtPresentation {
            shape: shape.to_string(),
            n,
            e: charge.e,
            kappa: charge.kappa.clone(),
            shift,
            allowed,
            killers: layout.killers.clone(),
            garnir: layout.garnir.clone(),
            i_lambda: layout.initial_residues(),
            deg_z: layout.degree(&ident),
            layout,
        })
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.layout.shape
    }

    pub fn charge(&self) -> &Bicharge {
        &self.layout.charge
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bihook_allowed_indices() {
        let shape: Bipartition = "3,1^2|2,1".parse().unwrap();
        let p = SpechtPresentation::new(&shape, &Bicharge::zero(3, 2)).unwrap();
        let (b, c, d) = (2u8, 2u8, 1u8);
        assert_eq!(p.allowed, vec![d + 1, c + d, b + c + d + 1]);
        assert_eq!(p.garnir, vec![vec![1, 2], vec![4, 5, 6]]);
    }

    #[test]
    fn normalization_records_shift() {
        let shape: Bipartition = "2|2".parse().unwrap();
        let p = SpechtPresentation::new(&shape, &Bicharge::new(3, &[2, 2]).unwrap()).unwrap();
        assert_eq!(p.kappa, vec![0, 0]);
        assert_eq!(p.shift, 2);
        let q = SpechtPresentation::new(&shape, &Bicharge::new(3, &[0, 1]).unwrap()).unwrap();
        assert_eq!(q.kappa, vec![0, 1]);
        assert!(SpechtPresentation::new(&"3,2|1".parse().unwrap(), &Bicharge::zero(3, 2)).is_err());
    }
}
