//! Dense complex linear algebra: Hermitian eigendecomposition, spectral
//! functions of positive semi-definite matrices, singular values and
//! spectra of matrix words.

mod det;
mod eigen;
mod matrix;
mod psd;
mod spectrum;
mod svd;
mod word;

pub use det::{det, Determinant};
pub use eigen::{eig_hermitian, EigenDecomposition, MAX_SWEEPS};

/// `V diag(d) V*`, exactly Hermitian by construction.
pub fn spectral_matrix(v: &ComplexMatrix, d: &[f64]) -> ComplexMatrix {
    eigen::spectral_product(v, d)
}
pub use matrix::{adjoint, matmul, ComplexMatrix, C64};
pub use psd::{eigenvalues_of_product, matrix_power, product_singular_values, HermitianMatrix, PsdMatrix};
pub use spectrum::{hadamard, SignedSpectrum, Spectrum};
pub use svd::singular_values;
pub use word::{eigenvalue_moduli, real_eigenvalues_general, Factor};

use thiserror::Error;

/// Unit roundoff of IEEE double precision.
pub const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// Relative threshold below which eigenvalues and singular values of an
/// `n x n` matrix are treated as exact zeros: `64 n u`.
pub fn zero_clamp(n: usize) -> f64 {
    64.0 * n as f64 * UNIT_ROUNDOFF
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    NonConvergence { sweeps: usize, off: f64 },
    #[error("matrix is singular: negative power of a clamped-zero eigenvalue")]
    SingularMatrix,
    #[error("matrix is not positive semi-definite (lambda_min = {min:e}, lambda_max = {max:e})")]
    NotPsd { min: f64, max: f64 },
    #[error("spectrum is not sorted in decreasing order or has non-finite values")]
    BadSpectrum,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("matrix word cannot be cyclically symmetrized: {0}")]
    UnsupportedShape(String),
}
