//! Vector enumeration for the presented module: formal vectors are generators applied to
//! earlier vectors, and every relation instance scanned at a live vector is added to a
//! relation subspace closed under the generators. When the enumeration closes, the live
//! vectors span a module satisfying the presentation and the quotient is `S^λ` itself.
//!
//! The oracle does not consult the rewriting engine. [`compare_with_engine`] maps each
//! formal vector to the engine's evaluation of its defining word and checks that every
//! relation found here vanishes there and that the live vectors map to a basis.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::Bipartition;
use crate::klr::{braid_error, quadratic, swap_residues, Conventions, Letter, YPoly};
use crate::linalg::{Echelon, FieldSpec, SparseMatrix, SparseVec};

use super::module::SpechtModule;
use super::presentation::SpechtPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("truncation insufficient: a live vector needs words longer than L = {bound}; increase L")]
    Truncation { bound: usize },
    #[error("vector enumeration exceeded {cap} formal vectors")]
    Capacity { cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Psi(u8),
    Y(u8),
}

const KEY_BASE: usize = 1 << 40;

fn key(k: usize) -> usize {
    KEY_BASE - k
}

fn idx(key: usize) -> usize {
    KEY_BASE - key
}

struct Formal {
    weight: u32,
    parent: Option<(Gen, usize)>,
    psi_len: usize,
    y_len: usize,
}

/// The closed enumeration.
pub struct OracleModule {
    pub field: FieldSpec,
    pub n: usize,
    pub bound: usize,
    vectors: Vec<Formal>,
    weights: Vec<Vec<u8>>,
    images: HashMap<(Gen, usize), SparseVec>,
    relations: HashMap<u32, Echelon>,
    live: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSummary {
    pub dim: usize,
    pub formal_vectors: usize,
    pub relation_rank: usize,
    pub bound: usize,
}

struct Enumerator {
    field: FieldSpec,
    e: u8,
    conv: Conventions,
    n: usize,
    mult: Vec<usize>,
    bound: usize,
    cap: usize,
    vectors: Vec<Formal>,
    weights: Vec<Vec<u8>>,
    weight_ids: HashMap<Vec<u8>, u32>,
    images: HashMap<(Gen, usize), SparseVec>,
    relations: HashMap<u32, Echelon>,
    overflow: Option<OracleError>,
}

impl Enumerator {
    fn weight_id(&mut self, w: Vec<u8>) -> u32 {
        if let Some(&id) = self.weight_ids.get(&w) {
            return id;
        }
        let id = self.weights.len() as u32;
        self.weights.push(w.clone());
        self.weight_ids.insert(w, id);
        id
    }

    fn gens(&self) -> Vec<Gen> {
        let mut g: Vec<Gen> = (1..self.n as u8).map(Gen::Psi).collect();
        g.extend((1..=self.n as u8).map(Gen::Y));
        g
    }

    fn is_live(&self, k: usize) -> bool {
        let w = self.vectors[k].weight;
        !self.relations.get(&w).is_some_and(|ech| ech.is_pivot(key(k)))
    }

    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let Some(&(k0, _)) = v.first() else {
            return v.clone();
        };
        match self.relations.get(&self.vectors[idx(k0)].weight) {
            Some(ech) => ech.reduce(v),
            None => v.clone(),
        }
    }

    fn image(&mut self, g: Gen, k: usize) -> Option<SparseVec> {
        if let Some(v) = self.images.get(&(g, k)) {
            return Some(v.clone());
        }
        let f = &self.vectors[k];
        let (psi_len, y_len) = match g {
            Gen::Psi(_) => (f.psi_len + 1, f.y_len),
            Gen::Y(_) => (f.psi_len, f.y_len + 1),
        };
        if psi_len + y_len > self.bound + 3 {
            self.overflow
                .get_or_insert(OracleError::Truncation { bound: self.bound });
            return None;
        }
        if self.vectors.len() >= self.cap {
            self.overflow.get_or_insert(OracleError::Capacity { cap: self.cap });
            return None;
        }
        let weight = match g {
            Gen::Psi(r) => {
                let w = swap_residues(&self.weights[f.weight as usize], r);
                self.weight_id(w)
            }
            Gen::Y(_) => f.weight,
        };
        let m = self.vectors.len();
        self.vectors.push(Formal {
            weight,
            parent: Some((g, k)),
            psi_len,
            y_len,
        });
        let v = SparseVec::unit(key(m), self.field);
        self.images.insert((g, k), v.clone());
        Some(v)
    }

    fn apply(&mut self, g: Gen, v: &SparseVec) -> Option<SparseVec> {
        let v = self.reduce(v);
        let mut out = SparseVec::new();
        for (kk, c) in v.iter() {
            let img = self.image(g, idx(*kk))?;
            out = out.add_scaled(c, &img);
        }
        Some(self.reduce(&out))
    }

    fn apply_word(&mut self, word: &[Gen], v: &SparseVec) -> Option<SparseVec> {
        let mut cur = v.clone();
        for &g in word.iter().rev() {
            cur = self.apply(g, &cur)?;
        }
        Some(cur)
    }

    fn apply_ypoly(&mut self, poly: &YPoly, v: &SparseVec) -> Option<SparseVec> {
        let mut out = SparseVec::new();
        for (c, mono) in poly {
            let word: Vec<Gen> = mono.iter().map(|&r| Gen::Y(r)).collect();
            let t = self.apply_word(&word, v)?;
            out = out.add_scaled(&self.field.from_i64(*c), &t);
        }
        Some(out)
    }

    /// Adds a relation and closes the relation space under the generators.
    fn push(&mut self, rho: SparseVec) {
        let mut queue = vec![rho];
        while let Some(r) = queue.pop() {
            let red = self.reduce(&r);
            let Some((k0, c)) = red.first().cloned() else {
                continue;
            };
            let m = idx(k0);
            let w = self.vectors[m].weight;
            debug_assert!(red.iter().all(|(kk, _)| self.vectors[idx(*kk)].weight == w));
            self.relations.entry(w).or_default().insert(&red);
            let row = red.scale(&c.inv().expect("nonzero pivot"));
            let expr = SparseVec::unit(k0, self.field).sub(&row);
            for g in self.gens() {
                let Some(lhs) = self.images.get(&(g, m)).cloned() else {
                    continue;
                };
                if let Some(rhs) = self.apply(g, &expr) {
                    queue.push(lhs.sub(&rhs));
                }
            }
        }
    }

    fn relation(&mut self, terms: &[(i64, Option<SparseVec>)]) {
        let mut out = SparseVec::new();
        for (c, t) in terms {
            match t {
                Some(t) => out = out.add_scaled(&self.field.from_i64(*c), t),
                None => return,
            }
        }
        self.push(out);
    }

    fn scan(&mut self, k: usize) {
        use Gen::{Psi, Y};
        let n = self.n;
        let i = self.weights[self.vectors[k].weight as usize].clone();
        let v = SparseVec::unit(key(k), self.field);
        let ones = Some(v.clone());

        let m = self.mult[i[0] as usize];
        let word = vec![Y(1); m];
        let t = self.apply_word(&word, &v);
        self.relation(&[(1, t)]);

        for r in 1..=n as u8 {
            for s in r + 1..=n as u8 {
                let a = self.apply_word(&[Y(r), Y(s)], &v);
                let b = self.apply_word(&[Y(s), Y(r)], &v);
                self.relation(&[(1, a), (-1, b)]);
            }
        }
        for r in 1..n as u8 {
            for s in 1..=n as u8 {
                if s == r || s == r + 1 {
                    continue;
                }
                let a = self.apply_word(&[Psi(r), Y(s)], &v);
                let b = self.apply_word(&[Y(s), Psi(r)], &v);
                self.relation(&[(1, a), (-1, b)]);
            }
            for s in r + 2..n as u8 {
                let a = self.apply_word(&[Psi(r), Psi(s)], &v);
                let b = self.apply_word(&[Psi(s), Psi(r)], &v);
                self.relation(&[(1, a), (-1, b)]);
            }
        }
        for r in 1..n as u8 {
            let delta = i64::from(i[r as usize - 1] == i[r as usize]);
            let a = self.apply_word(&[Y(r), Psi(r)], &v);
            let b = self.apply_word(&[Psi(r), Y(r + 1)], &v);
            self.relation(&[(1, a), (-1, b), (delta, ones.clone())]);
            let a = self.apply_word(&[Y(r + 1), Psi(r)], &v);
            let b = self.apply_word(&[Psi(r), Y(r)], &v);
            self.relation(&[(1, a), (-1, b), (-delta, ones.clone())]);
            let sq = self.apply_word(&[Psi(r), Psi(r)], &v);
            let q = self.apply_ypoly(&quadratic(self.e, self.conv, r, &i), &v);
            self.relation(&[(1, sq), (-1, q)]);
        }
        for r in 1..n.saturating_sub(1) as u8 {
            let a = self.apply_word(&[Psi(r), Psi(r + 1), Psi(r)], &v);
            let b = self.apply_word(&[Psi(r + 1), Psi(r), Psi(r + 1)], &v);
            let err = self.apply_ypoly(&braid_error(self.e, self.conv, r, &i), &v);
            self.relation(&[(1, a), (-1, b), (-1, err)]);
        }
    }

    fn scan_z(&mut self, p: &SpechtPresentation) {
        let z = SparseVec::unit(key(0), self.field);
        for r in 1..=self.n as u8 {
            let t = self.apply(Gen::Y(r), &z);
            self.relation(&[(1, t)]);
        }
        for &r in &p.killers {
            let t = self.apply(Gen::Psi(r), &z);
            self.relation(&[(1, t)]);
        }
        for g in &p.garnir {
            let word: Vec<Gen> = g.iter().map(|&r| Gen::Psi(r)).collect();
            let t = self.apply_word(&word, &z);
            self.relation(&[(1, t)]);
        }
    }
}

/// Default word-length bound: the length of the longest element of `S_n`.
pub fn default_bound(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Enumerates the module presented by the defining relations of `S^λ`.
pub fn oracle_module(
    presentation: &SpechtPresentation,
    field: FieldSpec,
    conventions: Conventions,
    bound: usize,
) -> Result<OracleModule, OracleError> {
    let n = presentation.n;
    let charge = presentation.charge();
    let dim_hint = crate::combinatorics::std_count(presentation.bipartition()) as usize;
    let mut en = Enumerator {
        field,
        e: presentation.e,
        conv: conventions,
        n,
        mult: (0..presentation.e).map(|i| charge.multiplicity(i)).collect(),
        bound,
        cap: 200 * (dim_hint + 10) * n.max(1),
        vectors: Vec::new(),
        weights: Vec::new(),
        weight_ids: HashMap::new(),
        images: HashMap::new(),
        relations: HashMap::new(),
        overflow: None,
    };
    let w0 = en.weight_id(presentation.i_lambda.clone());
    en.vectors.push(Formal {
        weight: w0,
        parent: None,
        psi_len: 0,
        y_len: 0,
    });
    en.scan_z(presentation);
    let mut k = 0;
    while k < en.vectors.len() {
        if en.is_live(k) {
            let f = &en.vectors[k];
            if f.psi_len + f.y_len > bound {
                return Err(OracleError::Truncation { bound });
            }
            for g in en.gens() {
                en.image(g, k);
            }
            en.scan(k);
        }
        if let Some(err) = en.overflow.take() {
            return Err(err);
        }
        k += 1;
    }
    let live: Vec<usize> = (0..en.vectors.len()).filter(|&k| en.is_live(k)).collect();
    Ok(OracleModule {
        field,
        n,
        bound,
        vectors: en.vectors,
        weights: en.weights,
        images: en.images,
        relations: en.relations,
        live,
    })
}

impl OracleModule {
    pub fn dim(&self) -> usize {
        self.live.len()
    }

    pub fn summary(&self) -> OracleSummary {
        OracleSummary {
            dim: self.dim(),
            formal_vectors: self.vectors.len(),
            relation_rank: self.relations.values().map(|e| e.rank()).sum(),
            bound: self.bound,
        }
    }

    /// Defining word of formal vector `k` applied to `z`, leftmost letter applied last.
    pub fn word(&self, mut k: usize) -> Vec<Letter> {
        let mut out = Vec::new();
        while let Some((g, p)) = self.vectors[k].parent {
            out.push(match g {
                Gen::Psi(r) => Letter::Psi(r),
                Gen::Y(r) => Letter::Y(r),
            });
            k = p;
        }
        out
    }

    pub fn weight(&self, k: usize) -> &[u8] {
        &self.weights[self.vectors[k].weight as usize]
    }

    fn to_live(&self, v: &SparseVec) -> SparseVec {
        let pos: HashMap<usize, usize> = self.live.iter().enumerate().map(|(a, &k)| (k, a)).collect();
        let Some(&(k0, _)) = v.first() else {
            return v.clone();
        };
        let red = match self.relations.get(&self.vectors[idx(k0)].weight) {
            Some(ech) => ech.reduce(v),
            None => v.clone(),
        };
        red.map_indices(|kk| pos[&idx(kk)])
    }

    /// Matrix of a generator in the basis of live vectors (columns are images).
    pub fn generator_matrix(&self, g: Gen) -> SparseMatrix {
        let cols: Vec<SparseVec> = self
            .live
            .iter()
            .map(|&k| self.images.get(&(g, k)).map(|v| self.to_live(v)).unwrap_or_default())
            .collect();
        SparseMatrix::from_columns(self.field, self.dim(), &cols)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleComparison {
    pub shape: String,
    pub oracle_dim: usize,
    pub std_count: u64,
    pub image_rank: usize,
    pub relations_checked: usize,
    pub relation_mismatches: usize,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.oracle_dim as u64 == self.std_count && self.image_rank == self.oracle_dim && self.relation_mismatches == 0
    }
}

/// Evaluates every formal vector with the engine and checks the oracle's relations there.
pub fn compare_with_engine(oracle: &OracleModule, module: &mut SpechtModule) -> OracleComparison {
    let eng = &mut module.engine;
    let mut images: Vec<SparseVec> = Vec::with_capacity(oracle.vectors.len());
    for f in &oracle.vectors {
        let v = match f.parent {
            None => eng.z(),
            Some((Gen::Psi(r), p)) => eng.apply_psi(r, &images[p]),
            Some((Gen::Y(r), p)) => eng.apply_y(r, &images[p]),
        };
        images.push(v);
    }
    let mut checked = 0;
    let mut mismatches = 0;
    for ech in oracle.relations.values() {
        for row in ech.rows() {
            let mut acc = SparseVec::new();
            for (kk, c) in row.iter() {
                acc = acc.add_scaled(c, &images[idx(*kk)]);
            }
            checked += 1;
            if !acc.is_zero() {
                mismatches += 1;
            }
        }
    }
    let mut span = Echelon::new();
    for &k in &oracle.live {
        span.insert(&images[k]);
    }
    OracleComparison {
        shape: module.presentation.shape.clone(),
        oracle_dim: oracle.dim(),
        std_count: module.dim(),
        image_rank: span.rank(),
        relations_checked: checked,
        relation_mismatches: mismatches,
    }
}

/// Runs the oracle with the default bound and compares it with the engine.
pub fn check_shape(
    shape: &Bipartition,
    charge: &crate::combinatorics::Bicharge,
    field: FieldSpec,
    conventions: Conventions,
) -> Result<OracleComparison, OracleError> {
    let mut module = SpechtModule::build_with(shape, charge, field, conventions).expect("valid shape");
    let oracle = oracle_module(&module.presentation, field, conventions, default_bound(module.n()))?;
    Ok(compare_with_engine(&oracle, &mut module))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Bicharge;

    #[test]
    fn oracle_matches_engine_on_small_shapes() {
        for s in ["1|1", "2|1", "2|2", "2,1|2", "3|1^2", "2,1|2,1"] {
            for e in [2u8, 3] {
                let shape: Bipartition = s.parse().unwrap();
                let cmp = check_shape(&shape, &Bicharge::zero(e, 2), FieldSpec::Rational, Conventions::PINNED).unwrap();
                assert!(cmp.agrees(), "{s} e={e}: {cmp:?}");
            }
        }
    }
}
