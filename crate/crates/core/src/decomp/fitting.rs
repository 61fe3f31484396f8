//! Splitting idempotents from minimal polynomials in the degree-0 part of `End(S^λ)`.

use crate::endo::{EndoAlgebra, EndoMap};
use crate::klr::ModuleElement;
use crate::linalg::{factor, SparseVec, UniPoly};
use crate::specht::SpechtModule;

use super::blocks::{block_matrix, Blocks};

/// `f(x)` in the algebra by Horner's rule.
pub fn eval_in_algebra(alg: &EndoAlgebra, f: &UniPoly, x: &SparseVec) -> SparseVec {
    let mut acc = SparseVec::new();
    for c in f.coeffs().iter().rev() {
        acc = alg.mul(&acc, x).add_scaled(c, &alg.one());
    }
    acc
}

/// Minimal polynomial of `x`, read off its left regular action on the degree-0 subalgebra.
pub fn min_poly_in(alg: &EndoAlgebra, x: &SparseVec, degree_zero: &[usize]) -> UniPoly {
    alg.left_matrix(x, degree_zero).min_poly()
}

/// A nontrivial idempotent built from `x`, with the factorization of its minimal polynomial.
#[derive(Debug, Clone)]
pub struct Split {
    pub idempotent: SparseVec,
    pub min_poly: UniPoly,
    /// The primary part of the minimal polynomial that the idempotent projects onto.
    pub primary: UniPoly,
}

/// Fitting split of `x ∈ A_0`: when the minimal polynomial has two coprime primary parts
/// `f1·f2`, the element `(t·f2)(x)` with `s·f1 + t·f2 = 1` is a nontrivial idempotent.
pub fn fitting_split(alg: &EndoAlgebra, x: &SparseVec, degree_zero: &[usize]) -> Option<Split> {
    let mp = min_poly_in(alg, x, degree_zero);
    let fac = factor(&mp).ok()?;
    if fac.factors.len() < 2 {
        return None;
    }
    let (g, m) = &fac.factors[0];
    let f1 = g.pow(*m);
    let f2 = mp.exact_div(&f1);
    let (d, _s, t) = f1.ext_gcd(&f2);
    debug_assert!(d.is_one());
    let e_poly = t.mul(&f2).rem(&mp);
    let eps = eval_in_algebra(alg, &e_poly, x);
    let one = alg.one();
    if eps.is_zero() || eps == one || alg.mul(&eps, &eps) != eps {
        return None;
    }
    Some(Split {
        idempotent: eps,
        min_poly: mp,
        primary: f1,
    })
}

/// Dimensions `(rank ε, dim − rank ε)` of the two summands cut out by a degree-0 idempotent,
/// together with whether `ε² = ε` holds as a matrix on every block.
pub fn summand_dims(module: &mut SpechtModule, u: &ModuleElement) -> (u64, u64, bool) {
    let field = module.field;
    let blocks = Blocks::of(module, true);
    let mut map = EndoMap::new(field, u);
    let mut rank = 0u64;
    let mut idempotent = true;
    for block in &blocks.blocks {
        let m = block_matrix(module, &mut map, block);
        if m.mul(&m) != m {
            idempotent = false;
        }
        rank += m.rank() as u64;
    }
    (rank, module.dim() - rank, idempotent)
}

/// Checks `g·φ(v_t) = φ(g·v_t)` for every generator `g` and every standard basis vector.
pub fn commutes_with_generators(module: &mut SpechtModule, u: &ModuleElement) -> bool {
    let field = module.field;
    let n = module.n() as u8;
    let mut map = EndoMap::new(field, u);
    for t in module.basis() {
        let v = SparseVec::unit(t as usize, field);
        let image = map.column(&mut module.engine, t);
        for r in 1..=n {
            let lhs = module.engine.apply_y(r, &image);
            let yv = module.engine.apply_y(r, &v);
            if lhs != map.apply(&mut module.engine, &yv) {
                return false;
            }
            if r < n {
                let lhs = module.engine.apply_psi(r, &image);
                let pv = module.engine.apply_psi(r, &v);
                if lhs != map.apply(&mut module.engine, &pv) {
                    return false;
                }
            }
        }
    }
    true
}
