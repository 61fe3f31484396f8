//! Column Specht modules of (bi)hook shapes: presentation, basis, relation checks and the
//! presentation-closure oracle.

pub mod cache;
pub mod module;
pub mod oracle;
pub mod pairs;
pub mod presentation;
pub mod verify;

pub use cache::{CacheEntry, CachedEndo, ModuleCache, SCHEMA_VERSION};
pub use module::SpechtModule;
pub use oracle::{
    check_shape, compare_with_engine, default_bound, oracle_module, Gen, OracleComparison, OracleError, OracleModule,
};
pub use pairs::{conjugate_module_pair, e2_row_column_identify, RowColumnWitness};
pub use presentation::{SpechtError, SpechtPresentation};
pub use verify::{verify_relations, RelationFailure, RelationReport, VerifyMode};
