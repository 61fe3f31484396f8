//! Shapes whose modules are tied together: conjugates, and row/column components at `e = 2`.

use serde::Serialize;

use crate::combinatorics::{Bicharge, Bipartition, Partition};

use super::presentation::{SpechtError, SpechtPresentation};

/// `(λ, λ')`. Their verdicts must agree, which scans use as a cross-check.
pub fn conjugate_module_pair(shape: &Bipartition) -> (Bipartition, Bipartition) {
    (shape.clone(), shape.conjugate())
}

/// Comparison of the presentations of `((2k),(2j))` and `((2k),(1^{2j}))`.
#[derive(Debug, Clone, Serialize)]
pub struct RowColumnWitness {
    pub row_shape: String,
    pub column_shape: String,
    pub residues: Vec<u8>,
    pub residues_equal: bool,
    pub killers_equal: bool,
    pub garnir_equal: bool,
    /// `deg z` of the column shape minus that of the row shape.
    pub grading_shift: i32,
}

impl RowColumnWitness {
    pub fn identified(&self) -> bool {
        self.residues_equal && self.killers_equal && self.garnir_equal
    }
}

/// Checks that for `e = 2` and `κ_1 = κ_2` the presentations of `((2k),(2j))` and
/// `((2k),(1^{2j}))` share the residue sequence and every other defining relation.
pub fn e2_row_column_identify(shape: &Bipartition, charge: &Bicharge) -> Result<RowColumnWitness, SpechtError> {
    let bad = |why: &str| SpechtError::Precondition(format!("{shape}: {why}"));
    if charge.e != 2 {
        return Err(bad("requires e = 2"));
    }
    if charge.level() != 2 || charge.kappa[0] != charge.kappa[1] {
        return Err(bad("requires κ_1 = κ_2"));
    }
    if shape.level() != 2 {
        return Err(bad("requires a bipartition"));
    }
    let (first, second) = (shape.comp(1), shape.comp(2));
    let is_even_row = |p: &Partition| p.len() == 1 && p.size().is_multiple_of(2);
    if !is_even_row(first) || !is_even_row(second) {
        return Err(bad("requires λ = ((2k),(2j))"));
    }
    let column = Bipartition::new(first.clone(), Partition::new(vec![1; second.size()]).expect("column"));
    let row = SpechtPresentation::new(shape, charge)?;
    let col = SpechtPresentation::new(&column, charge)?;
    Ok(RowColumnWitness {
        row_shape: shape.to_string(),
        column_shape: column.to_string(),
        residues: row.i_lambda.clone(),
        residues_equal: row.i_lambda == col.i_lambda,
        killers_equal: row.killers == col.killers,
        garnir_equal: row.garnir == col.garnir,
        grading_shift: col.deg_z - row.deg_z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn row_column_identification() {
        for s in ["2|2", "4|2", "2|4", "6|4"] {
            let w = e2_row_column_identify(&bp(s), &Bicharge::zero(2, 2)).unwrap();
            assert!(w.identified(), "{s}: {w:?}");
        }
        assert!(e2_row_column_identify(&bp("3|3"), &Bicharge::zero(3, 2)).is_err());
        assert!(e2_row_column_identify(&bp("2|2"), &Bicharge::new(2, &[0, 1]).unwrap()).is_err());
        assert!(e2_row_column_identify(&bp("3|2"), &Bicharge::zero(2, 2)).is_err());
    }

    #[test]
    fn conjugate_pairs() {
        let (a, b) = conjugate_module_pair(&bp("6|3"));
        assert_eq!(a, bp("6|3"));
        assert_eq!(b, bp("1^3|1^6"));
        let (_, b) = conjugate_module_pair(&bp("2,1|2,1"));
        assert_eq!(b, bp("2,1|2,1"));
    }
}
