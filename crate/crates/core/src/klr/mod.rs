//! KLR words, relations and the rewriting engine that expresses any word applied to `z_λ`
//! in the standard basis `{v_t}`.

pub mod element;
pub mod engine;
pub mod relations;

pub use element::{word_degree, Letter, ModuleElement, Word, WordError};
pub use engine::{with_big_stack, word_string, Engine, EngineStats, Vector};
pub use relations::{braid_error, psi_degree, quadratic, swap_residues, Conventions, YPoly};
