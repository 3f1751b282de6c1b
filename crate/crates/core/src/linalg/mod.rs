//! Dense complex matrices and the eigen/SVD primitives the rest of the crate
//! builds on.

mod eigen;
mod matrix;
mod text;

pub use eigen::{
    apply_spectral_function, determinant, eig_general, eig_hermitian, hermitian_eigenvalues_unchecked,
    largest_singular_value, max_eigenpair, svd, HermitianEig, SvdParts, HERMITIAN_TOL, PSD_CLAMP_TOL,
};
pub use matrix::{inner, vector_norm, ComplexMatrix, ComplexVector, C64, I};
pub use text::{format_matrix, parse_matrix};
