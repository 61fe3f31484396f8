//! Endomorphisms of `S^λ`: the solution space, evaluation, structure constants and the
//! explicit brick endomorphisms.

pub mod algebra;
pub mod keje;
pub mod map;
pub mod space;

pub use algebra::{structure_constants, EndoAlgebra};
pub use keje::{
    brick_combination, brick_vector, keje_endomorphism, stated_eigenvectors, BrickCombination, BrickReading,
    StatedEigen, SumRange,
};
pub use map::{apply_endo, EndoMap};
pub use space::{
    compute_endo_space, compute_endo_space_cached, is_endomorphism, Coordinates, EndoDump, EndoError, EndoSpace,
};
