//! Checks every KLR relation instance as an operator identity on basis vectors of `S^λ`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::klr::{braid_error, quadratic, swap_residues, Engine, Vector};

use super::module::SpechtModule;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    /// At most this many basis vectors, drawn with the given seed.
    Sampled {
        count: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    pub tableau: String,
    pub residual: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RelationReport {
    pub instances: u64,
    pub vectors: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_FAILURES: usize = 20;

struct Checker<'a> {
    eng: &'a mut Engine,
    report: RelationReport,
    current: String,
}

impl Checker<'_> {
    fn check(&mut self, name: impl FnOnce() -> String, residual: Vector) {
        self.report.instances += 1;
        if !residual.is_empty() && self.report.failures.len() < MAX_FAILURES {
            self.report.failures.push(RelationFailure {
                relation: name(),
                tableau: self.current.clone(),
                residual: format!("{residual:?}"),
            });
        }
    }

    fn psi(&mut self, r: u8, v: &[(u32, i64)]) -> Vector {
        self.eng.psi_vec(r, v)
    }

    fn y(&mut self, r: u8, v: &[(u32, i64)]) -> Vector {
        self.eng.y_vec(r, v)
    }

    fn diff(&self, a: &[(u32, i64)], b: &[(u32, i64)]) -> Vector {
        self.eng.combine(&[(1, a), (-1, b)])
    }

    fn weight_ok(&self, v: &[(u32, i64)], i: &[u8]) -> bool {
        v.iter().all(|&(s, _)| self.eng.residues(s) == i)
    }

    fn at_vector(&mut self, t: u32) {
        let n = self.eng.n();
        let e = self.eng.e();
        let conv = self.eng.conventions;
        let i = self.eng.residues(t).to_vec();
        let v: Vector = vec![(t, 1)];
        let ys: Vec<Vector> = (1..=n as u8).map(|r| self.y(r, &v)).collect();
        let ps: Vec<Vector> = (1..n as u8).map(|r| self.psi(r, &v)).collect();

        for r in 1..=n {
            let ok = self.weight_ok(&ys[r - 1], &i);
            self.check(
                || format!("y_{r} e(i) = e(i) y_{r}"),
                if ok { vec![] } else { ys[r - 1].clone() },
            );
        }
        for r in 1..n {
            let j = swap_residues(&i, r as u8);
            let ok = self.weight_ok(&ps[r - 1], &j);
            self.check(
                || format!("ψ_{r} e(i) = e(s_{r} i) ψ_{r}"),
                if ok { vec![] } else { ps[r - 1].clone() },
            );
        }
        let m = self.eng.layout.charge.multiplicity(i[0]);
        let mut cyc = v.clone();
        for _ in 0..m {
            cyc = self.y(1, &cyc);
        }
        self.check(|| format!("y_1^{m} e(i) = 0"), cyc);

        for r in 1..=n {
            for s in r + 1..=n {
                let a = self.y(r as u8, &ys[s - 1]);
                let b = self.y(s as u8, &ys[r - 1]);
                let d = self.diff(&a, &b);
                self.check(|| format!("y_{r} y_{s} = y_{s} y_{r}"), d);
            }
        }
        for r in 1..n {
            for s in 1..=n {
                if s == r || s == r + 1 {
                    continue;
                }
                let a = self.psi(r as u8, &ys[s - 1]);
                let b = self.y(s as u8, &ps[r - 1]);
                let d = self.diff(&a, &b);
                self.check(|| format!("ψ_{r} y_{s} = y_{s} ψ_{r}"), d);
            }
            for s in r + 2..n {
                let a = self.psi(r as u8, &ps[s - 1]);
                let b = self.psi(s as u8, &ps[r - 1]);
                let d = self.diff(&a, &b);
                self.check(|| format!("ψ_{r} ψ_{s} = ψ_{s} ψ_{r}"), d);
            }
        }
        for r in 1..n {
            let delta = i64::from(i[r - 1] == i[r]);
            let a = self.y(r as u8, &ps[r - 1]);
            let b = self.psi(r as u8, &ys[r]);
            let d = self.eng.combine(&[(1, &a), (-1, &b), (delta, &v)]);
            self.check(|| format!("y_{r} ψ_{r} = ψ_{r} y_{} − δ", r + 1), d);
            let a = self.y(r as u8 + 1, &ps[r - 1]);
            let b = self.psi(r as u8, &ys[r - 1]);
            let d = self.eng.combine(&[(1, &a), (-1, &b), (-delta, &v)]);
            self.check(|| format!("y_{} ψ_{r} = ψ_{r} y_{r} + δ", r + 1), d);

            let sq = self.psi(r as u8, &ps[r - 1]);
            let q = self.eng.apply_ypoly(&quadratic(e, conv, r as u8, &i), &v);
            let d = self.diff(&sq, &q);
            self.check(|| format!("ψ_{r}² e(i) = Q(y) e(i)"), d);
        }
        for r in 1..n.saturating_sub(1) {
            let r8 = r as u8;
            let a = self.psi(r8 + 1, &ps[r - 1]);
            let a = self.psi(r8, &a);
            let b = self.psi(r8, &ps[r]);
            let b = self.psi(r8 + 1, &b);
            let err = self.eng.apply_ypoly(&braid_error(e, conv, r8, &i), &v);
            let d = self.eng.combine(&[(1, &a), (-1, &b), (-1, &err)]);
            self.check(|| format!("braid at r = {r}"), d);
        }
    }

    fn at_z(&mut self) {
        let z: Vector = vec![(self.eng.z_id(), 1)];
        let n = self.eng.n();
        for r in 1..=n as u8 {
            let d = self.y(r, &z);
            self.check(|| format!("y_{r} z = 0"), d);
        }
        for r in self.eng.layout.killers.clone() {
            let d = self.psi(r, &z);
            self.check(|| format!("ψ_{r} z = 0"), d);
        }
        for g in self.eng.layout.garnir.clone() {
            let d = self.eng.psi_word(&g, &z);
            self.check(|| format!("Garnir {g:?} z = 0"), d);
        }
    }
}

/// Verifies the defining relations of `S^λ` and every KLR relation on basis vectors.
pub fn verify_relations(module: &mut SpechtModule, mode: VerifyMode) -> RelationReport {
    let mut basis = module.basis();
    if let VerifyMode::Sampled { count, seed } = mode {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        basis.shuffle(&mut rng);
        basis.truncate(count);
    }
    let layout = module.presentation.layout.clone();
    let mut checker = Checker {
        eng: &mut module.engine,
        report: RelationReport::default(),
        current: layout.tableau_string(&crate::combinatorics::perm::identity(layout.n)),
    };
    checker.at_z();
    for &t in &basis {
        checker.current = layout.tableau_string(checker.eng.perm(t));
        checker.at_vector(t);
    }
    checker.report.vectors = basis.len();
    checker.report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Bicharge, Bipartition};
    use crate::linalg::FieldSpec;

    fn run(shape: &str, e: u8, field: FieldSpec) -> RelationReport {
        let shape: Bipartition = shape.parse().unwrap();
        let charge = Bicharge::zero(e, shape.level());
        let mut m = SpechtModule::build(&shape, &charge, field).unwrap();
        verify_relations(&mut m, VerifyMode::Exhaustive)
    }

    #[test]
    fn small_bihooks_satisfy_relations() {
        for shape in ["1|1", "2|1", "2,1|2", "3|1^2", "2,1|2,1"] {
            for e in [2, 3] {
                for field in [FieldSpec::Rational, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
                    let rep = run(shape, e, field);
                    assert!(rep.passed(), "{shape} e={e} {field:?}: {:?}", rep.failures);
                }
            }
        }
    }
}
