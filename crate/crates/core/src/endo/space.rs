//! The space of endomorphisms of `S^λ`, stored as the images `φ(z_λ) ∈ e(i_λ)S^λ`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::BrickError;
use crate::klr::{ModuleElement, Vector};
use crate::linalg::{Echelon, FieldSpec, SparseMatrix, SparseVec};
use crate::specht::{CacheEntry, CachedEndo, ModuleCache, SpechtModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("composition image does not lie in the endomorphism space (internal inconsistency)")]
    NotInSpan,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Brick(#[from] BrickError),
}

/// Offset separating module coordinates from tracking coordinates in augmented rows.
const TRACK: usize = 1 << 40;

/// Expresses module elements in a fixed independent family.
#[derive(Debug, Clone, Default)]
pub struct Coordinates {
    ech: Echelon,
    len: usize,
}

impl Coordinates {
    pub fn new(family: &[ModuleElement], field: FieldSpec) -> Coordinates {
        let mut ech = Echelon::new();
        for (a, u) in family.iter().enumerate() {
            let row = u.add(&SparseVec::unit(TRACK + a, field));
            ech.insert(&row);
        }
        Coordinates { ech, len: family.len() }
    }

    /// Coefficients `c` with `v = Σ c_a family[a]`, if `v` lies in the span.
    pub fn coords(&self, v: &ModuleElement) -> Option<SparseVec> {
        let r = self.ech.reduce(v);
        if r.iter().any(|(i, _)| *i < TRACK) {
            return None;
        }
        Some(SparseVec::from_pairs(r.iter().map(|(i, c)| (i - TRACK, -c.clone()))))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

/// `End(S^λ)` as a list of images `u_a = φ_a(z_λ)`, homogeneous, identity first.
#[derive(Debug, Clone)]
pub struct EndoSpace {
    pub field: FieldSpec,
    pub basis: Vec<ModuleElement>,
    /// Degree of each `φ_a` (degree of `u_a` minus the degree of `z_λ`).
    pub degrees: Vec<i32>,
    /// Ids of the standard tableaux spanning `e(i_λ)S^λ`.
    pub weight_basis: Vec<u32>,
    coordinates: Coordinates,
}

impl EndoSpace {
    /// Reassembles a space from a basis whose first element is `z_λ`.
    pub fn from_parts(
        field: FieldSpec,
        basis: Vec<ModuleElement>,
        degrees: Vec<i32>,
        weight_basis: Vec<u32>,
    ) -> EndoSpace {
        let coordinates = Coordinates::new(&basis, field);
        EndoSpace {
            field,
            basis,
            degrees,
            weight_basis,
            coordinates,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, v: &ModuleElement) -> Option<SparseVec> {
        self.coordinates.coords(v)
    }

    /// Indices of the degree-0 basis elements.
    pub fn degree_zero(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.degrees[a] == 0).collect()
    }

    pub fn degree_counts(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for d in &self.degrees {
            *out.entry(*d).or_insert(0) += 1;
        }
        out
    }
}

/// Images of `v` under every annihilator generator of `z_λ`, concatenated with labels.
fn constraint_images(module: &mut SpechtModule, v: &[(u32, i64)]) -> Vec<(usize, Vector)> {
    let n = module.n();
    let killers = module.presentation.killers.clone();
    let garnir = module.presentation.garnir.clone();
    let eng = &mut module.engine;
    let mut out = Vec::new();
    for r in 1..=n as u8 {
        out.push((out.len(), eng.y_vec(r, v)));
    }
    for &r in &killers {
        out.push((out.len(), eng.psi_vec(r, v)));
    }
    for g in &garnir {
        out.push((out.len(), eng.psi_word(g, v)));
    }
    out
}

/// Solves the annihilator constraints on `e(i_λ)S^λ`, one homogeneous degree at a time.
pub fn compute_endo_space(module: &mut SpechtModule) -> EndoSpace {
    let field = module.field;
    let i_lambda = module.i_lambda();
    let weight = module.weight_space(&i_lambda);
    let deg_z = module.presentation.deg_z;
    let mut by_degree: BTreeMap<i32, Vec<u32>> = BTreeMap::new();
    for &t in &weight {
        by_degree.entry(module.engine.degree(t)).or_default().push(t);
    }
    let z = module.engine.z_id();
    let mut blocks: Vec<(i32, Vec<ModuleElement>)> = Vec::new();
    for (deg, ts) in &by_degree {
        let mut rows: HashMap<(usize, u32), usize> = HashMap::new();
        let mut trips = Vec::new();
        for (col, &t) in ts.iter().enumerate() {
            for (label, img) in constraint_images(module, &[(t, 1)]) {
                for (s, c) in img {
                    let next = rows.len();
                    let row = *rows.entry((label, s)).or_insert(next);
                    trips.push((row, col, field.from_i64(c)));
                }
            }
        }
        let m = SparseMatrix::from_triplets(field, rows.len(), ts.len(), &trips).expect("indices in range");
        let kernel: Vec<ModuleElement> = m
            .nullspace()
            .into_iter()
            .map(|x| x.map_indices(|c| ts[c] as usize))
            .collect();
        if !kernel.is_empty() {
            blocks.push((deg - deg_z, kernel));
        }
    }
    blocks.sort_by_key(|(d, _)| (d.abs(), *d));
    let mut basis = vec![SparseVec::unit(z as usize, field)];
    let mut degrees = vec![0];
    let mut ech = Echelon::new();
    ech.insert(&basis[0]);
    for (d, kernel) in blocks {
        for u in kernel {
            if ech.insert(&u) {
                basis.push(u);
                degrees.push(d);
            }
        }
    }
    let coordinates = Coordinates::new(&basis, field);
    EndoSpace {
        field,
        basis,
        degrees,
        weight_basis: weight,
        coordinates,
    }
}

/// Whether `u` is the image of `z_λ` under some endomorphism.
pub fn is_endomorphism(module: &mut SpechtModule, u: &ModuleElement) -> bool {
    let i_lambda = module.i_lambda();
    if u.iter()
        .any(|(t, _)| module.engine.residues(*t as u32) != i_lambda.as_slice())
    {
        return false;
    }
    let field = module.field;
    let mut acc: HashMap<usize, ModuleElement> = HashMap::new();
    for (t, c) in u.iter() {
        for (label, img) in constraint_images(module, &[(*t as u32, 1)]) {
            let img = SparseVec::from_pairs(img.into_iter().map(|(s, x)| (s as usize, field.from_i64(x))));
            let slot = acc.entry(label).or_default();
            *slot = slot.add_scaled(c, &img);
        }
    }
    acc.values().all(|v| v.is_zero())
}

/// [`compute_endo_space`], reading and filling the module cache.
pub fn compute_endo_space_cached(module: &mut SpechtModule, cache: Option<&ModuleCache>) -> EndoSpace {
    let Some(cache) = cache else {
        return compute_endo_space(module);
    };
    let field = module.field;
    if let Some(CacheEntry { endo: Some(endo), .. }) = cache.load(module) {
        let mut basis = Vec::new();
        let mut intact = true;
        for image in &endo.basis {
            let mut pairs = Vec::new();
            for (w, c) in image {
                let standard = w.len() == module.n() && module.presentation.layout.is_standard(w);
                match (standard, field.parse(c)) {
                    (true, Ok(c)) => pairs.push((module.engine.id_of(w) as usize, c)),
                    _ => intact = false,
                }
            }
            basis.push(SparseVec::from_pairs(pairs));
        }
        if intact && !basis.is_empty() && basis.len() == endo.degrees.len() {
            let weight = module.weight_space(&module.i_lambda());
            return EndoSpace::from_parts(field, basis, endo.degrees, weight);
        }
    }
    let space = compute_endo_space(module);
    let record = CachedEndo {
        basis: space
            .basis
            .iter()
            .map(|u| {
                u.iter()
                    .map(|(t, c)| (module.engine.perm(*t as u32).clone(), c.to_string()))
                    .collect()
            })
            .collect(),
        degrees: space.degrees.clone(),
    };
    // A cache that cannot be written only costs recomputation.
    let _ = cache.store(&CacheEntry::new(module, Some(record)), module);
    space
}

/// Endomorphism dump: each basis image keyed by tableau.
#[derive(Debug, Clone, Serialize)]
pub struct EndoDump {
    pub lambda: String,
    pub e: u8,
    pub char: u32,
    pub dim_end: usize,
    pub basis: Vec<BTreeMap<String, String>>,
}

impl EndoDump {
    pub fn new(module: &SpechtModule, space: &EndoSpace) -> EndoDump {
        EndoDump {
            lambda: module.presentation.shape.clone(),
            e: module.e(),
            char: module.field.characteristic(),
            dim_end: space.dim(),
            basis: space
                .basis
                .iter()
                .map(|u| {
                    u.iter()
                        .map(|(t, c)| (module.tableau_string(*t as u32), c.to_string()))
                        .collect()
                })
                .collect(),
        }
    }
}
