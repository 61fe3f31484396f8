//! Verification suites: each checks a family of exact statements about Specht modules of
//! bihooks against the engine and emits a [`Report`].

pub mod appendix;
pub mod bricks;
pub mod classification;
pub mod engine_checks;
pub mod predicates;
pub mod report;
pub mod words;

use std::panic::{catch_unwind, AssertUnwindSafe};

use rayon::prelude::*;
use thiserror::Error;

use crate::combinatorics::{Bicharge, Bipartition, ChargeError, ShapeError};
use crate::decomp::{decomposability_verdict_with, DecompPolicy, Outcome};
use crate::linalg::{FieldSpec, LinalgError};
use crate::specht::{ModuleCache, SpechtError, SpechtModule};

pub use report::{Instance, Report, Status, SuiteParams, Summary};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Charge(#[from] ChargeError),
    #[error(transparent)]
    Field(#[from] LinalgError),
    #[error(transparent)]
    Specht(#[from] SpechtError),
}

/// Everything a suite needs besides its own defaults.
#[derive(Debug, Clone, Default)]
pub struct SuiteContext {
    pub params: SuiteParams,
    pub policy: DecompPolicy,
    pub cache: Option<ModuleCache>,
}

impl SuiteContext {
    pub fn new(params: SuiteParams) -> SuiteContext {
        let mut policy = DecompPolicy::default();
        if let Some(seed) = params.seed {
            policy.seed = seed;
        }
        if let Some(r) = params.pool_size {
            policy.pool_size = r;
        }
        SuiteContext {
            params,
            policy,
            cache: None,
        }
    }

    pub fn with_cache(mut self, cache: Option<ModuleCache>) -> SuiteContext {
        self.cache = cache;
        self
    }

    pub fn chars(&self, default: &[u32]) -> Vec<u32> {
        self.params.char.map(|c| vec![c]).unwrap_or_else(|| default.to_vec())
    }

    pub fn es(&self, default: &[u8]) -> Vec<u8> {
        self.params.e.map(|e| vec![e]).unwrap_or_else(|| default.to_vec())
    }

    pub fn max_n(&self, default: usize) -> usize {
        self.params.max_n.unwrap_or(default)
    }

    /// The requested charge for level 2, defaulting to `(0,0)`.
    pub fn charge(&self, e: u8) -> Result<Bicharge, SuiteError> {
        let kappa = self.params.kappa.clone().unwrap_or_else(|| vec![0, 0]);
        Ok(Bicharge::new(e as i64, &kappa)?)
    }

    /// Shape given with `--lambda`, if any.
    pub fn lambda(&self) -> Result<Option<Bipartition>, SuiteError> {
        self.params
            .lambda
            .as_deref()
            .map(Bipartition::parse)
            .transpose()
            .map_err(SuiteError::from)
    }

    /// Builds `S^λ` and decides decomposability.
    pub fn classify(&self, shape: &Bipartition, charge: &Bicharge, p: u32) -> Result<Classified, String> {
        let field = FieldSpec::new(p as u64).map_err(|e| e.to_string())?;
        let mut module = SpechtModule::build(shape, charge, field).map_err(|e| e.to_string())?;
        let outcome =
            decomposability_verdict_with(&mut module, &self.policy, self.cache.as_ref()).map_err(|e| e.to_string())?;
        Ok(Classified { outcome })
    }
}

pub struct Classified {
    pub outcome: Outcome,
}

impl Classified {
    pub fn decomposable(&self) -> bool {
        self.outcome.verdict.is_decomposable()
    }

    pub fn certified(&self) -> bool {
        self.outcome.verdict.is_certified()
    }

    pub fn computed(&self) -> String {
        self.outcome.verdict.name().to_string()
    }

    pub fn tier(&self) -> String {
        self.outcome.verdict.tier().to_string()
    }
}

pub fn verdict_word(decomposable: bool) -> &'static str {
    if decomposable {
        "Decomposable"
    } else {
        "Indecomposable"
    }
}

/// Compares a classification with a predicted verdict: `Pass`, `Fail`, or `HeuristicUnresolved`
/// when an uncertified "indecomposable" is all there is.
pub fn verdict_instance(shape: &str, expected: bool, got: &Result<Classified, String>) -> Instance {
    match got {
        Err(why) => Instance::failed(shape, "error", why.clone()),
        Ok(c) => {
            let status = if c.decomposable() == expected {
                if c.certified() {
                    Status::Pass
                } else {
                    Status::HeuristicUnresolved
                }
            } else if c.certified() {
                Status::Fail
            } else {
                Status::HeuristicUnresolved
            };
            Instance::new(shape, verdict_word(expected), c.computed(), status, c.tier())
        }
    }
}

/// Runs `f` on every item in parallel, keeping input order, and turns panics into failed rows.
pub fn par_rows<T, F>(items: Vec<T>, f: F) -> Vec<Instance>
where
    T: Send + Sync + std::fmt::Display,
    F: Fn(&T) -> Vec<Instance> + Send + Sync,
{
    items
        .par_iter()
        .map(|item| match catch_unwind(AssertUnwindSafe(|| f(item))) {
            Ok(rows) => rows,
            Err(payload) => {
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                vec![Instance::failed(item.to_string(), "internal", msg)]
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub type SuiteFn = fn(&SuiteContext) -> Result<Report, SuiteError>;

/// A registered suite.
pub struct SuiteEntry {
    pub name: &'static str,
    pub run: SuiteFn,
    pub about: &'static str,
    /// Scans classify rows instead of asserting them.
    pub scan: bool,
}

pub const REGISTRY: &[SuiteEntry] = &[
    SuiteEntry {
        name: "relations",
        run: engine_checks::relations,
        about: "KLR relations as operator identities on S^λ",
        scan: false,
    },
    SuiteEntry {
        name: "oracle",
        run: engine_checks::oracle,
        about: "engine actions against the presentation-closure oracle",
        scan: false,
    },
    SuiteEntry {
        name: "basis",
        run: engine_checks::basis,
        about: "dimensions, graded dimensions and brick weight spaces",
        scan: false,
    },
    SuiteEntry {
        name: "e2-pin",
        run: engine_checks::e2_pin,
        about: "which e = 2 sign conventions reproduce the n ≤ 4 classification",
        scan: false,
    },
    SuiteEntry {
        name: "small-bihooks",
        run: classification::small_bihooks,
        about: "classification of bihooks with n ≤ 2e",
        scan: false,
    },
    SuiteEntry {
        name: "smallphivt",
        run: bricks::smallphivt,
        about: "φ(v_t) = ±2 v_t for ((a,1^b),(a,1^b)), a+b = e",
        scan: false,
    },
    SuiteEntry {
        name: "cancellation",
        run: bricks::cancellation,
        about: "brick cancellation identities on e(i_λ)S^λ",
        scan: false,
    },
    SuiteEntry {
        name: "keje",
        run: bricks::keje,
        about: "the explicit endomorphism of ((ke),(je)) and its coefficients",
        scan: false,
    },
    SuiteEntry {
        name: "keje-eigen",
        run: bricks::keje_eigen,
        about: "eigenvalues and eigenvectors of the explicit endomorphism",
        scan: false,
    },
    SuiteEntry {
        name: "kee",
        run: classification::kee,
        about: "((e),(ke)): decomposable iff char ∤ k+1",
        scan: false,
    },
    SuiteEntry {
        name: "mainresult",
        run: classification::mainresult,
        about: "predicted verdicts for the ((ke+a,1^b),(je+a,1^b)) families",
        scan: false,
    },
    SuiteEntry {
        name: "conjecture-scan",
        run: classification::conjecture_scan,
        about: "all bihooks against the conjectured list of decomposables",
        scan: true,
    },
    SuiteEntry {
        name: "e2",
        run: classification::e2,
        about: "e = 2: level-one lifts and the two-row families",
        scan: false,
    },
    SuiteEntry {
        name: "level1-criteria",
        run: classification::level1_criteria_suite,
        about: "level-one hook criteria at e = 2 against the engine",
        scan: false,
    },
    SuiteEntry {
        name: "consistency",
        run: classification::consistency,
        about: "conjugation, regularity and κ1 ≠ κ2 cross-checks",
        scan: false,
    },
    SuiteEntry {
        name: "induction-consistency",
        run: classification::induction_consistency,
        about: "matching verdicts across induced pairs",
        scan: false,
    },
    SuiteEntry {
        name: "appendix-identities",
        run: appendix::appendix_identities,
        about: "ψ-word identities as module-element equalities",
        scan: false,
    },
];

pub fn find_suite(name: &str) -> Option<&'static SuiteEntry> {
    REGISTRY.iter().find(|s| s.name == name)
}

/// Runs a registered suite.
pub fn run_suite(name: &str, ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let entry = find_suite(name).ok_or_else(|| SuiteError::UnknownSuite(name.to_string()))?;
    (entry.run)(ctx)
}

/// A worker pool whose threads have stacks deep enough for the straightening recursion.
pub fn thread_pool(threads: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new().stack_size(512 << 20);
    if let Some(t) = threads {
        b = b.num_threads(t);
    }
    b.build().expect("thread pool")
}
