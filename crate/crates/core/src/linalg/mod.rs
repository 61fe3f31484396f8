//! Exact linear algebra over `ℚ` and `F_p`: scalars, sparse elimination, dense matrix
//! polynomials and univariate factorization.

pub mod dense;
pub mod factor;
pub mod poly;
pub mod scalar;
pub mod sparse;

pub use dense::DMatrix;
pub use factor::{factor, Factorization};
pub use poly::UniPoly;
pub use scalar::{FieldSpec, LinalgError, Scalar};
pub use sparse::{Echelon, SparseMatrix, SparseVec, Triplet};
