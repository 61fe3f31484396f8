//! The explicit endomorphism of `S^((ke),(je))` and the eigenvectors stated for it, written in
//! the brick basis of `e(i_λ)S^λ`.

use crate::combinatorics::{brick_down, brick_up, BrickShape};
use crate::klr::ModuleElement;
use crate::linalg::{Scalar, SparseVec};
use crate::specht::SpechtModule;

use super::space::EndoError;

fn brick_shape(module: &SpechtModule) -> Result<BrickShape, EndoError> {
    let shape = module.presentation.bipartition();
    if module.presentation.kappa.iter().any(|&k| k != 0) || module.presentation.shift != 0 {
        return Err(EndoError::Shape(format!("{shape} requires κ = (0,0)")));
    }
    Ok(BrickShape::of(shape, module.e())?)
}

/// `Σ_{i<c1, l<c2} (c2−l)(c1−i) Ψ↑_{c2−l}^{c2−1} Ψ↓_{c2+i}^{c2} z_λ` with `c1`, `c2` the brick
/// counts of the two components.
pub fn keje_endomorphism(module: &mut SpechtModule) -> Result<ModuleElement, EndoError> {
    let bs = brick_shape(module)?;
    let (c1, c2, e) = (bs.k, bs.j, bs.e);
    let field = module.field;
    let z = module.engine.z();
    let mut out = SparseVec::new();
    for i in 0..c1 {
        for l in 0..c2 {
            let coeff = field.from_i64(((c2 - l) * (c1 - i)) as i64);
            let mut word = brick_up(c2 - l, c2 - 1, e);
            word.extend(brick_down(c2 + i, c2, e));
            let v = module.engine.act_psi_word(&word, &z);
            out = out.add_scaled(&coeff, &v);
        }
    }
    Ok(out)
}

/// The basis vector with the given bricks (1-based) in component 2.
pub fn brick_vector(module: &mut SpechtModule, comp2_bricks: &[u32]) -> Result<u32, EndoError> {
    let bs = brick_shape(module)?;
    Ok(module.engine.id_of(&bs.tableau(comp2_bricks)))
}

/// A combination `Σ c·v(bricks)` where each brick list names the bricks of one component.
pub type BrickCombination = Vec<(Scalar, Vec<u32>)>;

/// A stated eigenpair.
#[derive(Debug, Clone)]
pub struct StatedEigen {
    pub label: String,
    pub eigenvalue: i64,
    pub vector: BrickCombination,
}

fn set(mut v: Vec<u32>) -> Option<Vec<u32>> {
    v.sort_unstable();
    let len = v.len();
    v.dedup();
    (v.len() == len).then_some(v)
}

/// How the index range of the double sum in the eigenvalue-0 vector is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumRange {
    /// Inner index `i` from 1, as printed.
    Literal,
    /// Inner index `i` from 0, which adds the terms `(k−l+1) v(B_{l+1}, B_{k+2})`.
    FromZero,
}

/// The stated eigenvectors for `k ≥ j > 1`, as brick sets of the component holding `j` bricks.
pub fn stated_eigenvectors(field: crate::linalg::FieldSpec, j: u32, k: u32, range: SumRange) -> Vec<StatedEigen> {
    let q = |a: i64, b: i64| field.from_ratio(a, b);
    let mut out = Vec::new();
    if !(k >= j && j > 1) {
        return out;
    }
    let (ji, ki) = (j as i64, k as i64);
    out.push(StatedEigen {
        label: "(i)".into(),
        eigenvalue: -ji * (ki + 1),
        vector: vec![(q(1, 1), (k + 1..=k + j).collect())],
    });
    let evens = |upto: u32| -> Vec<u32> { (1..).map(|x| 2 * x).take_while(|&x| x <= upto).collect() };
    let second = if k == j {
        let mut a = vec![2, 3];
        a.extend(k + 2..=2 * k - 1);
        let mut b = vec![1];
        b.extend(k + 2..=2 * k);
        vec![(q(1, 1), a), (q(-1, 1), b)]
    } else {
        (1..=k - j + 2)
            .map(|i| {
                let mut s = evens(2 * j - 2);
                s.push(k + j - i + 1);
                (q(i as i64, 1), s)
            })
            .collect()
    };
    out.push(StatedEigen {
        label: "(ii)".into(),
        eigenvalue: -(ji - 1) * (ki + 2),
        vector: second,
    });
    if k > j && j > 2 {
        let p = evens(2 * j - 4);
        let mut v = Vec::new();
        for i in 1..=k - j + 3 {
            let mut s = p.clone();
            s.extend([k + j - i, k + j - i + 1]);
            v.push((q((i * (i + 1)) as i64, 2), s));
        }
        for i in 1..=k - j + 2 {
            let mut s = p.clone();
            s.extend([k + j - i - 1, k + j - i + 1]);
            v.push((q((i * (i + 1)) as i64, 1), s));
        }
        for i in 1..=k - j + 1 {
            for l in 1..=i {
                let mut s = p.clone();
                s.extend([k + j - i - 2, k + j - l + 1]);
                v.push((q((l * (i + 2)) as i64, 1), s));
            }
        }
        out.push(StatedEigen {
            label: "(iii)".into(),
            eigenvalue: -(ji - 2) * (ki + 3),
            vector: v,
        });
    }
    if k > j && j == 2 {
        let mut v = Vec::new();
        for i in 0..=k {
            v.push((q(((i + 1) * (i + 2)) as i64, 2), vec![k - i + 1, k - i + 2]));
        }
        let lo = match range {
            SumRange::Literal => 1,
            SumRange::FromZero => 0,
        };
        for l in 0..k {
            for i in lo..k - l {
                v.push((q(((i + 1) * (k - l + 1)) as i64, 1), vec![l + 1, k - i + 2]));
            }
        }
        out.push(StatedEigen {
            label: "(iv)".into(),
            eigenvalue: 0,
            vector: v,
        });
    }
    out
}

/// Which bricks a brick list names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrickReading {
    /// Bricks of component 2, numbered in order of entries.
    Second,
    /// Bricks of component 1, numbered in order of entries.
    First,
    /// Bricks of component 1, numbered from the last brick (`B_r ↦ B_{j+k+1−r}`).
    FirstReversed,
}

/// Materializes a brick combination under the given reading.
pub fn brick_combination(
    module: &mut SpechtModule,
    combo: &BrickCombination,
    reading: BrickReading,
) -> Result<ModuleElement, EndoError> {
    let bs = brick_shape(module)?;
    let total = bs.bricks();
    let mut out = SparseVec::new();
    for (c, bricks) in combo {
        let listed = if reading == BrickReading::FirstReversed {
            bricks.iter().map(|&b| total + 1 - b.min(total)).collect()
        } else {
            bricks.clone()
        };
        let bricks = set(listed)
            .filter(|b| b.iter().all(|&x| (1..=total).contains(&x)))
            .ok_or_else(|| EndoError::Shape(format!("invalid brick set {bricks:?}")))?;
        let comp2: Vec<u32> = match reading {
            BrickReading::Second => bricks,
            _ => (1..=total).filter(|x| !bricks.contains(x)).collect(),
        };
        if comp2.len() != bs.j as usize {
            return Err(EndoError::Shape(format!("brick set {comp2:?} has the wrong size")));
        }
        let id = module.engine.id_of(&bs.tableau(&comp2));
        out = out.add_scaled(c, &SparseVec::unit(id as usize, module.field));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Bicharge, Bipartition};
    use crate::endo::{compute_endo_space, is_endomorphism};
    use crate::linalg::FieldSpec;

    fn module(shape: &str, e: u8) -> SpechtModule {
        let shape: Bipartition = shape.parse().unwrap();
        SpechtModule::build(&shape, &Bicharge::zero(e, 2), FieldSpec::Rational).unwrap()
    }

    #[test]
    fn kee_image_is_an_endomorphism() {
        let mut m = module("3|6", 3);
        let u = keje_endomorphism(&mut m).unwrap();
        assert!(is_endomorphism(&mut m, &u));
        let space = compute_endo_space(&mut m);
        assert_eq!(space.dim(), 2);
    }

    #[test]
    fn stated_sets_have_j_bricks() {
        for (j, k) in [(2, 2), (2, 3), (3, 3), (3, 5), (2, 5)] {
            for s in stated_eigenvectors(FieldSpec::Rational, j, k, SumRange::FromZero) {
                for (_, b) in &s.vector {
                    assert_eq!(set(b.clone()).map(|x| x.len()), Some(j as usize), "{j},{k} {}", s.label);
                }
            }
        }
    }
}
