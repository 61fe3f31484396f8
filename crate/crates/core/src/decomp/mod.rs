//! Decomposability of `S^λ` from its endomorphism algebra via Fitting's lemma.

pub mod blocks;
pub mod fitting;
pub mod verdict;

pub use blocks::{block_matrix, eigenvalues_of, is_degree_zero, Blocks, EigenFactor};
pub use fitting::{commutes_with_generators, eval_in_algebra, fitting_split, min_poly_in, summand_dims, Split};
pub use verdict::{
    certify_local, decomposability_verdict, decomposability_verdict_with, Certificate, DecompError, DecompPolicy,
    EigenData, Locality, Outcome, Verdict, VerdictReport,
};
