//! The tiered decomposability decision and its JSON form.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::is_regular;
use crate::endo::{compute_endo_space_cached, structure_constants, EndoAlgebra, EndoError};
use crate::klr::ModuleElement;
use crate::linalg::{factor, DMatrix, SparseVec, UniPoly};
use crate::specht::{ModuleCache, SpechtModule};

use super::blocks::{eigenvalues_of, EigenFactor};
use super::fitting::{commutes_with_generators, fitting_split, min_poly_in, summand_dims, Split};

#[derive(Debug, Error)]
pub enum DecompError {
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Endo(#[from] EndoError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompPolicy {
    pub pool_size: usize,
    pub seed: u64,
    /// Largest module dimension for which summand dimensions and eigen data are computed.
    pub dims_cap: u64,
    /// Largest module dimension for which the idempotent is rechecked against every generator.
    pub recheck_cap: u64,
}

impl Default for DecompPolicy {
    fn default() -> Self {
        DecompPolicy {
            pool_size: 64,
            seed: 3141592653,
            dims_cap: 100_000,
            recheck_cap: 5_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    DimEnd1,
    RegularShape,
    LocalAlgebra,
}

impl Certificate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certificate::DimEnd1 => "dim-end-1",
            Certificate::RegularShape => "regular-shape",
            Certificate::LocalAlgebra => "local-algebra",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Decomposable {
        /// `ε(z_λ)` for the verified idempotent `ε`.
        idempotent: ModuleElement,
        summand_dims: Option<(u64, u64)>,
    },
    Indecomposable {
        certificate: Certificate,
    },
    IndecomposableHeuristic {
        pool_size: usize,
        seed: u64,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Decomposable { .. } => "Decomposable",
            Verdict::Indecomposable { .. } => "Indecomposable",
            Verdict::IndecomposableHeuristic { .. } => "IndecomposableHeuristic",
        }
    }

    /// Certificate tier as reported in every row.
    pub fn tier(&self) -> &'static str {
        match self {
            Verdict::Decomposable { .. } => "idempotent",
            Verdict::Indecomposable { certificate } => certificate.as_str(),
            Verdict::IndecomposableHeuristic { .. } => "heuristic",
        }
    }

    pub fn is_decomposable(&self) -> bool {
        matches!(self, Verdict::Decomposable { .. })
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self, Verdict::IndecomposableHeuristic { .. })
    }
}

/// Evidence carried along with a verdict.
#[derive(Debug, Clone, Default, Serialize)]
pub struct EigenData {
    pub degree_counts: BTreeMap<i32, usize>,
    pub commutative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primary_part: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summand_dims: Option<[u64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly_factors: Option<Vec<EigenFactor>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locality: Option<Locality>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pool_tried: Option<usize>,
}

/// How locality of the degree-0 subalgebra `A_0` was settled.
#[derive(Debug, Clone, Serialize)]
pub struct Locality {
    pub method: String,
    pub algebra_dim: usize,
    /// Dimension of `A_0` modulo its radical, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semisimple_dim: Option<usize>,
    pub local: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub verdict: Verdict,
    pub dim: u64,
    pub dim_end: usize,
    pub eigen_data: EigenData,
}

/// Elements of `A_0` to try as Fitting candidates, labelled, in a seed-determined order.
fn pool(alg: &EndoAlgebra, deg0: &[usize], policy: &DecompPolicy) -> Vec<(String, SparseVec)> {
    let field = alg.field();
    let mut out: Vec<(String, SparseVec)> = Vec::new();
    for &a in deg0.iter().skip(1) {
        out.push((format!("basis {a}"), alg.basis_vector(a)));
    }
    for (i, &a) in deg0.iter().enumerate().skip(1) {
        for &b in &deg0[i + 1..] {
            out.push((format!("sum {a}+{b}"), alg.basis_vector(a).add(&alg.basis_vector(b))));
        }
    }
    let degrees = &alg.space.degrees;
    let mut products = Vec::new();
    for a in 1..alg.dim() {
        for b in 1..alg.dim() {
            if degrees[a] + degrees[b] == 0 {
                let p = alg.table[a][b].clone();
                if !p.is_zero() {
                    products.push((format!("product {a}*{b}"), p));
                }
            }
        }
    }
    let generators: Vec<SparseVec> = deg0
        .iter()
        .skip(1)
        .map(|&a| alg.basis_vector(a))
        .chain(products.iter().map(|(_, p)| p.clone()))
        .collect();
    out.extend(products);
    if !generators.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
        for r in 0..policy.pool_size {
            let mut x = SparseVec::new();
            for g in &generators {
                let c: i64 = rng.gen_range(-3..=3);
                x = x.add_scaled(&field.from_i64(c), g);
            }
            out.push((format!("random {r}"), x));
        }
    }
    out
}

fn squarefree_part(f: &UniPoly) -> Option<(UniPoly, usize)> {
    let fac = factor(f).ok()?;
    let count = fac.factors.len();
    let mut out = UniPoly::one(f.field);
    for (g, _) in fac.factors {
        out = out.mul(&g);
    }
    Some((out, count))
}

/// Decides whether `A_0` is local; `local` stays `None` when no certificate applies.
pub fn certify_local(alg: &EndoAlgebra, deg0: &[usize], candidates: &[SparseVec]) -> Locality {
    let field = alg.field();
    let p = field.characteristic();
    let d = deg0.len();
    let commutative = deg0
        .iter()
        .all(|&a| deg0.iter().all(|&b| alg.table[a][b] == alg.table[b][a]));
    if p > 0 {
        if !commutative {
            return Locality {
                method: "none (noncommutative degree-0 part in positive characteristic)".into(),
                algebra_dim: d,
                semisimple_dim: None,
                local: None,
            };
        }
        // x ↦ x^p is F_p-linear on a commutative algebra; its fixed points form F_p^r
        // where r is the number of local factors.
        let pos: BTreeMap<usize, usize> = deg0.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut m = DMatrix::zeros(field, d);
        for (col, &a) in deg0.iter().enumerate() {
            let fx = alg.pow(&alg.basis_vector(a), p as u64);
            for (b, c) in fx.iter() {
                m.data[pos[b]][col] = c.clone();
            }
            m.data[col][col] -= &field.one();
        }
        let fixed = d - m.rank();
        return Locality {
            method: "frobenius fixed points".into(),
            algebra_dim: d,
            semisimple_dim: None,
            local: Some(fixed == 1),
        };
    }
    // Characteristic 0: the radical is the kernel of the trace form of the regular representation.
    let lefts: Vec<DMatrix> = deg0
        .iter()
        .map(|&a| alg.left_matrix(&alg.basis_vector(a), deg0))
        .collect();
    let mut gram = DMatrix::zeros(field, d);
    for i in 0..d {
        for j in 0..d {
            gram.data[i][j] = lefts[i].mul(&lefts[j]).trace();
        }
    }
    let q = gram.rank();
    if q == 1 {
        return Locality {
            method: "trace form".into(),
            algebra_dim: d,
            semisimple_dim: Some(q),
            local: Some(true),
        };
    }
    // An element whose minimal polynomial modulo the radical is irreducible of degree q
    // generates a field filling the semisimple quotient.
    for x in candidates {
        let mp = min_poly_in(alg, x, deg0);
        if let Some((sf, count)) = squarefree_part(&mp) {
            if count == 1 && sf.deg() == q {
                return Locality {
                    method: "trace form and generating element".into(),
                    algebra_dim: d,
                    semisimple_dim: Some(q),
                    local: Some(true),
                };
            }
        }
    }
    Locality {
        method: "trace form".into(),
        algebra_dim: d,
        semisimple_dim: Some(q),
        local: None,
    }
}

fn dump(module: &SpechtModule, v: &ModuleElement) -> BTreeMap<String, String> {
    v.iter()
        .map(|(t, c)| (module.tableau_string(*t as u32), c.to_string()))
        .collect()
}

/// Tiered decision: `dim End = 1`, then a Fitting search over a seeded pool in degree 0, then
/// locality of the degree-0 subalgebra, then the regular-shape certificate, else heuristic.
pub fn decomposability_verdict(module: &mut SpechtModule, policy: &DecompPolicy) -> Result<Outcome, DecompError> {
    decomposability_verdict_with(module, policy, None)
}

/// [`decomposability_verdict`] with the endomorphism space read through a module cache.
pub fn decomposability_verdict_with(
    module: &mut SpechtModule,
    policy: &DecompPolicy,
    cache: Option<&ModuleCache>,
) -> Result<Outcome, DecompError> {
    let dim = module.dim();
    let space = compute_endo_space_cached(module, cache);
    let dim_end = space.dim();
    let mut data = EigenData {
        degree_counts: space.degree_counts(),
        ..EigenData::default()
    };
    let regular = is_regular(module.presentation.bipartition(), module.presentation.charge());
    if dim_end == 1 {
        data.commutative = true;
        return Ok(Outcome {
            verdict: Verdict::Indecomposable {
                certificate: Certificate::DimEnd1,
            },
            dim,
            dim_end,
            eigen_data: data,
        });
    }
    let alg = structure_constants(module, &space)?;
    if !alg.has_unit() || !alg.is_associative() {
        return Err(DecompError::Internal(
            "endomorphism structure constants are not a unital associative algebra".into(),
        ));
    }
    data.commutative = alg.is_commutative();
    let deg0 = space.degree_zero();
    let candidates = pool(&alg, &deg0, policy);
    data.pool_tried = Some(candidates.len());
    let mut found: Option<(String, SparseVec, Split)> = None;
    for (label, x) in &candidates {
        if let Some(split) = fitting_split(&alg, x, &deg0) {
            found = Some((label.clone(), x.clone(), split));
            break;
        }
    }
    if let Some((label, x, split)) = found {
        if regular {
            return Err(DecompError::Internal(format!(
                "{} is regular but a splitting idempotent was found",
                module.presentation.shape
            )));
        }
        let u = alg.element(&split.idempotent);
        let mut dims = None;
        if dim <= policy.dims_cap {
            let (a, b, ok) = summand_dims(module, &u);
            if !ok {
                return Err(DecompError::Internal("idempotent fails ε² = ε on the module".into()));
            }
            dims = Some((a, b));
            data.summand_dims = Some([a, b]);
            data.char_poly_factors = Some(eigenvalues_of(module, &alg.element(&x)));
        }
        if dim <= policy.recheck_cap && !commutes_with_generators(module, &u) {
            return Err(DecompError::Internal(
                "idempotent does not commute with the generators".into(),
            ));
        }
        data.split_source = Some(label);
        data.min_poly = Some(split.min_poly.to_string());
        data.primary_part = Some(split.primary.to_string());
        data.idempotent = Some(dump(module, &u));
        return Ok(Outcome {
            verdict: Verdict::Decomposable {
                idempotent: u,
                summand_dims: dims,
            },
            dim,
            dim_end,
            eigen_data: data,
        });
    }
    let xs: Vec<SparseVec> = candidates.iter().map(|(_, x)| x.clone()).collect();
    let locality = certify_local(&alg, &deg0, &xs);
    let local = locality.local;
    data.locality = Some(locality);
    let verdict = if local == Some(true) {
        Verdict::Indecomposable {
            certificate: Certificate::LocalAlgebra,
        }
    } else if local == Some(false) {
        return Err(DecompError::Internal(format!(
            "degree-0 endomorphism algebra of {} is not local but no idempotent was found",
            module.presentation.shape
        )));
    } else if regular {
        Verdict::Indecomposable {
            certificate: Certificate::RegularShape,
        }
    } else {
        Verdict::IndecomposableHeuristic {
            pool_size: policy.pool_size,
            seed: policy.seed,
        }
    };
    Ok(Outcome {
        verdict,
        dim,
        dim_end,
        eigen_data: data,
    })
}

/// Verdict JSON row.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub lambda: String,
    pub e: u8,
    pub char: u32,
    pub kappa: Vec<u8>,
    pub dim: u64,
    pub dim_end: usize,
    pub verdict: String,
    pub certificate: String,
    pub eigen_data: EigenData,
    pub seed: u64,
}

impl VerdictReport {
    pub fn new(module: &SpechtModule, outcome: &Outcome, policy: &DecompPolicy) -> VerdictReport {
        VerdictReport {
            lambda: module.presentation.shape.clone(),
            e: module.e(),
            char: module.field.characteristic(),
            kappa: module.presentation.kappa.clone(),
            dim: outcome.dim,
            dim_end: outcome.dim_end,
            verdict: outcome.verdict.name().into(),
            certificate: outcome.verdict.tier().into(),
            eigen_data: outcome.eigen_data.clone(),
            seed: policy.seed,
        }
    }
}
