//! Graded Specht modules of cyclotomic KLR algebras at levels one and two with hook
//! components: exact construction, endomorphism algebras and decomposability verdicts.

pub mod combinatorics;
pub mod decomp;
pub mod endo;
pub mod klr;
pub mod linalg;
pub mod specht;
pub mod suites;
