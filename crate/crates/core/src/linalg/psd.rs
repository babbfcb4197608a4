//! Hermitian and positive semi-definite wrappers with cached spectra.

use super::eigen::{jacobi, spectral_product, EigenDecomposition};
use super::matrix::ComplexMatrix;
use super::spectrum::Spectrum;
use super::svd::{singular_values, singular_values_unclamped};
use super::{zero_clamp, LinalgError};

/// Hermitian matrix; construction replaces `M` by `(M + M*)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(ComplexMatrix);

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self, LinalgError> {
        m.ensure_finite()?;
        let adj = m.adjoint();
        Ok(Self((&m + &adj).scale(0.5)))
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn eig(&self) -> Result<EigenDecomposition, LinalgError> {
        jacobi(&self.0)
    }

    pub fn eigenvalues(&self) -> Result<Spectrum, LinalgError> {
        Ok(self.eig()?.eigenvalues)
    }
}

/// Positive semi-definite matrix with its (clamped) eigendecomposition.
///
/// Eigenvalues below `64 n u λ_max` in magnitude are clamped to exact zero;
/// anything more negative is rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct PsdMatrix {
    matrix: HermitianMatrix,
    eig: EigenDecomposition,
    definite: bool,
}

impl PsdMatrix {
    pub fn new(h: HermitianMatrix) -> Result<Self, LinalgError> {
        let eig = h.eig()?;
        Self::with_eig(h, eig)
    }

    pub fn from_matrix(m: ComplexMatrix) -> Result<Self, LinalgError> {
        Self::new(HermitianMatrix::new(m)?)
    }

    fn with_eig(matrix: HermitianMatrix, mut eig: EigenDecomposition) -> Result<Self, LinalgError> {
        let n = matrix.dim();
        let max = eig.eigenvalues.max();
        let min = eig.eigenvalues.min();
        let cut = zero_clamp(n) * max.max(0.0);
        if min < -cut || (max <= 0.0 && min < 0.0) {
            return Err(LinalgError::NotPsd { min, max });
        }
        let clamped: Vec<f64> = eig
            .eigenvalues
            .values()
            .iter()
            .map(|&l| if l <= cut { 0.0 } else { l })
            .collect();
        eig.eigenvalues = Spectrum::new(clamped)?;
        let definite = eig.eigenvalues.min() > 0.0;
        Ok(Self { matrix, eig, definite })
    }

    /// `V diag(λ) V*` for unitary `V` and `λ ≥ 0`, keeping the given spectrum.
    pub(crate) fn from_spectral(vectors: ComplexMatrix, values: Vec<f64>) -> Result<Self, LinalgError> {
        let n = vectors.dim();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
        let sorted: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        let v = ComplexMatrix::from_fn(n, |i, j| vectors[(i, order[j])]);
        let m = spectral_product(&v, &sorted);
        if sorted.iter().any(|&l| !(l >= 0.0)) {
            return Err(LinalgError::NotPsd {
                min: sorted.last().copied().unwrap_or(0.0),
                max: sorted.first().copied().unwrap_or(0.0),
            });
        }
        // The spectrum is exact here, so it is kept as given (no zero clamp):
        // e.g. a large negative power of a definite matrix stays definite.
        let definite = sorted.last().is_none_or(|&l| l > 0.0);
        let eig = EigenDecomposition {
            eigenvalues: Spectrum::new(sorted)?,
            eigenvectors: v,
        };
        Ok(Self {
            matrix: HermitianMatrix(m),
            eig,
            definite,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_spectral(ComplexMatrix::identity(n), vec![1.0; n]).expect("identity is PSD")
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        self.matrix.as_matrix()
    }

    pub fn as_hermitian(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn is_definite(&self) -> bool {
        self.definite
    }

    pub fn eigen(&self) -> &EigenDecomposition {
        &self.eig
    }

    pub fn eigenvalues(&self) -> &Spectrum {
        &self.eig.eigenvalues
    }

    /// Number of clamped-zero eigenvalues.
    pub fn nullity(&self) -> usize {
        self.eig.eigenvalues.values().iter().filter(|&&l| l == 0.0).count()
    }

    pub fn condition_number(&self) -> f64 {
        let max = self.eig.eigenvalues.max();
        let min = self.eig.eigenvalues.min();
        if min > 0.0 {
            max / min
        } else {
            f64::INFINITY
        }
    }

    /// `A^t` through the spectral decomposition; `A^0 = I`.
    pub fn power(&self, t: f64) -> Result<PsdMatrix, LinalgError> {
        if t < 0.0 && !self.definite {
            return Err(LinalgError::SingularMatrix);
        }
        let values = self
            .eig
            .eigenvalues
            .values()
            .iter()
            .map(|&l| {
                if t == 0.0 {
                    1.0
                } else if l == 0.0 {
                    0.0
                } else {
                    l.powf(t)
                }
            })
            .collect();
        Self::from_spectral(self.eig.eigenvectors.clone(), values)
    }

    pub fn sqrt(&self) -> Result<PsdMatrix, LinalgError> {
        self.power(0.5)
    }

    pub fn scale(&self, c: f64) -> Result<PsdMatrix, LinalgError> {
        assert!(c >= 0.0, "PSD scale must be nonnegative");
        let values = self.eig.eigenvalues.values().iter().map(|&l| l * c).collect();
        Self::from_spectral(self.eig.eigenvectors.clone(), values)
    }

    /// `A + εI`.
    pub fn shift(&self, eps: f64) -> Result<PsdMatrix, LinalgError> {
        assert!(eps >= 0.0, "shift must be nonnegative");
        let values = self.eig.eigenvalues.values().iter().map(|&l| l + eps).collect();
        Self::from_spectral(self.eig.eigenvectors.clone(), values)
    }
}

/// `A^t` for PSD `A`; negative powers of singular matrices are rejected.
pub fn matrix_power(a: &PsdMatrix, t: f64) -> Result<PsdMatrix, LinalgError> {
    a.power(t)
}

/// `λ(AB) = λ(A^{1/2} B A^{1/2}) = s(B^{1/2} A^{1/2})^2`.
pub fn eigenvalues_of_product(a: &PsdMatrix, b: &PsdMatrix) -> Result<Spectrum, LinalgError> {
    if a.dim() != b.dim() {
        return Err(LinalgError::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(product_singular_values(&[&b.sqrt()?, &a.sqrt()?])?.powf(2.0))
}

/// Singular values of `F_1 F_2 ⋯ F_m` for PSD factors.
///
/// Forming the product costs an absolute error of about `u·Π‖F_j‖`, which
/// swamps the small singular values of badly conditioned words. When every
/// factor is definite, `s_i` is also available as `1/s_{n+1−i}` of the
/// reversed inverse word, whose absolute error is about `u·Π‖F_j^{-1}‖`.
/// Each index takes the estimate with the smaller first-order relative
/// error: the direct one when `s_i² ≥ Π λ_max(F_j)·λ_min(F_j)`.
pub fn product_singular_values(factors: &[&PsdMatrix]) -> Result<Spectrum, LinalgError> {
    let n = factors.first().map(|f| f.dim()).unwrap_or(0);
    if let Some(f) = factors.iter().find(|f| f.dim() != n) {
        return Err(LinalgError::DimMismatch {
            left: n,
            right: f.dim(),
        });
    }
    let word = |fs: Vec<&ComplexMatrix>| ComplexMatrix::product(fs);
    let direct = word(factors.iter().map(|f| f.as_matrix()).collect());
    if factors.is_empty() || !factors.iter().all(|f| f.is_definite()) {
        return singular_values(&direct);
    }
    let forward = singular_values_unclamped(&direct)?;
    let inverses = factors
        .iter()
        .rev()
        .map(|f| f.power(-1.0))
        .collect::<Result<Vec<_>, _>>()?;
    let backward = singular_values_unclamped(&word(inverses.iter().map(|f| f.as_matrix()).collect()))?;
    let pivot: f64 = factors
        .iter()
        .map(|f| (f.eigenvalues().max().ln() + f.eigenvalues().min().ln()) / 2.0)
        .sum();
    let values = forward
        .values()
        .iter()
        .zip(backward.values().iter().rev())
        .map(|(&s, &r)| {
            if (s > 0.0 && s.ln() >= pivot) || r <= 0.0 {
                s
            } else {
                1.0 / r
            }
        })
        .collect();
    Spectrum::from_unsorted(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;
    use approx::assert_relative_eq;

    fn psd(rows: &[Vec<f64>]) -> PsdMatrix {
        PsdMatrix::from_matrix(ComplexMatrix::from_real_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn symmetrizes_on_construction() {
        let m = ComplexMatrix::from_rows(&[
            vec![C64::new(1.0, 0.1), C64::new(2.0, 0.0)],
            vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::new(m).unwrap();
        assert_eq!(h.as_matrix().hermitian_defect(), 0.0);
        assert_eq!(h.as_matrix()[(0, 1)], C64::new(1.0, 0.0));
        assert_eq!(h.as_matrix()[(0, 0)], C64::new(1.0, 0.0));
    }

    #[test]
    fn square_root_of_diagonal() {
        let a = PsdMatrix::from_matrix(ComplexMatrix::from_real_diag(&[4.0, 9.0])).unwrap();
        let r = matrix_power(&a, 0.5).unwrap();
        assert!(r.as_matrix().distance(&ComplexMatrix::from_real_diag(&[2.0, 3.0])) < 1e-15);
    }

    #[test]
    fn zeroth_power_is_identity() {
        let a = psd(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let r = matrix_power(&a, 0.0).unwrap();
        assert!(r.as_matrix().distance(&ComplexMatrix::identity(2)) < 1e-15);
    }

    // Closed-form PSD square root of a 2x2: (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).
    fn sqrt_oracle(m: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let sd = det.sqrt();
        let den = (m[0][0] + m[1][1] + 2.0 * sd).sqrt();
        [
            [(m[0][0] + sd) / den, m[0][1] / den],
            [m[1][0] / den, (m[1][1] + sd) / den],
        ]
    }

    #[test]
    fn square_root_matches_closed_form() {
        let o = sqrt_oracle(&[[2.0, 1.0], [1.0, 2.0]]);
        let s3 = 3f64.sqrt();
        assert_relative_eq!(o[0][0], (s3 + 1.0) / 2.0, epsilon = 1e-15);
        assert_relative_eq!(o[0][1], (s3 - 1.0) / 2.0, epsilon = 1e-15);
        let r = matrix_power(&psd(&[vec![2.0, 1.0], vec![1.0, 2.0]]), 0.5).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[o[0].to_vec(), o[1].to_vec()]).unwrap();
        assert!(r.as_matrix().distance(&expected) < 1e-14);
    }

    #[test]
    fn negative_power_of_singular_rejected() {
        let a = psd(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert!(!a.is_definite());
        assert_eq!(a.nullity(), 1);
        assert_eq!(matrix_power(&a, -0.5), Err(LinalgError::SingularMatrix));
        assert!(matrix_power(&a, 0.5).is_ok());
    }

    #[test]
    fn rejects_indefinite() {
        let r = PsdMatrix::from_matrix(ComplexMatrix::from_real_diag(&[1.0, -1e-3]));
        assert!(matches!(r, Err(LinalgError::NotPsd { .. })));
        let r = PsdMatrix::from_matrix(ComplexMatrix::from_real_diag(&[-1.0, -2.0]));
        assert!(matches!(r, Err(LinalgError::NotPsd { .. })));
    }

    #[test]
    fn tiny_negative_eigenvalue_clamped() {
        let a = PsdMatrix::from_matrix(ComplexMatrix::from_real_diag(&[1.0, -1e-17])).unwrap();
        assert_eq!(a.eigenvalues().values(), &[1.0, 0.0]);
        assert!(!a.is_definite());
    }

    #[test]
    fn product_eigenvalues_commuting() {
        let a = PsdMatrix::from_matrix(ComplexMatrix::from_real_diag(&[1.0, 2.0])).unwrap();
        let b = PsdMatrix::from_matrix(ComplexMatrix::from_real_diag(&[3.0, 4.0])).unwrap();
        let l = eigenvalues_of_product(&a, &b).unwrap();
        assert_relative_eq!(l[0], 8.0, epsilon = 1e-14);
        assert_relative_eq!(l[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn product_eigenvalues_with_identity() {
        let b = psd(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let l = eigenvalues_of_product(&PsdMatrix::identity(2), &b).unwrap();
        assert_relative_eq!(l[0], 3.0, epsilon = 1e-14);
        assert_relative_eq!(l[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn product_eigenvalues_match_characteristic_polynomial() {
        // AB = [[2,2],[1,2]]: λ² - 4λ + 2 = 0.
        let tr: f64 = 4.0;
        let det: f64 = 2.0;
        let disc = (tr * tr - 4.0 * det).sqrt();
        let (l1, l2) = ((tr + disc) / 2.0, (tr - disc) / 2.0);
        assert_relative_eq!(l1, 2.0 + 2f64.sqrt(), epsilon = 1e-15);
        let a = psd(&[vec![2.0, 1.0], vec![1.0, 1.0]]);
        let b = psd(&[vec![1.0, 0.0], vec![0.0, 2.0]]);
        let l = eigenvalues_of_product(&a, &b).unwrap();
        assert_relative_eq!(l[0], l1, epsilon = 1e-14);
        assert_relative_eq!(l[1], l2, epsilon = 1e-14);
    }
}
