//! Spectra of products ("words") of Hermitian and PSD factors.
//!
//! A product of Hermitian factors whose cyclic rotation reads `P · R` with
//! `P ≥ 0` and `R` a palindrome is similar to the Hermitian matrix
//! `P^{1/2} R P^{1/2}`, so its spectrum is real and is computed without a
//! nonsymmetric eigensolver. When `R = L L*` (even length, or odd length
//! with a PSD middle factor) the eigenvalues are `s(P^{1/2} L ...)^2`.

use nalgebra::{DMatrix, Schur};

use super::matrix::{ComplexMatrix, C64};
use super::psd::{HermitianMatrix, PsdMatrix};
use super::spectrum::{SignedSpectrum, Spectrum};
use super::svd::singular_values;
use super::{zero_clamp, LinalgError, UNIT_ROUNDOFF};

/// One factor of a matrix word.
#[derive(Debug, Clone, Copy)]
pub enum Factor<'a> {
    Psd(&'a PsdMatrix),
    Hermitian(&'a HermitianMatrix),
}

impl Factor<'_> {
    fn matrix(&self) -> &ComplexMatrix {
        match self {
            Factor::Psd(p) => p.as_matrix(),
            Factor::Hermitian(h) => h.as_matrix(),
        }
    }

    fn same_as(&self, other: &Factor<'_>) -> bool {
        let (a, b) = (self.matrix(), other.matrix());
        if std::ptr::eq(a, b) {
            return true;
        }
        a.dim() == b.dim() && a.distance(b) <= 64.0 * UNIT_ROUNDOFF * (a.frobenius_norm() + b.frobenius_norm())
    }
}

fn is_palindrome(word: &[Factor<'_>]) -> bool {
    let k = word.len();
    (0..k / 2).all(|i| word[i].same_as(&word[k - 1 - i]))
}

/// Real spectrum of `F_1 F_2 ... F_m`, ordered by decreasing modulus.
pub fn real_eigenvalues_general(word: &[Factor<'_>]) -> Result<SignedSpectrum, LinalgError> {
    let m = word.len();
    if m == 0 {
        return Err(LinalgError::UnsupportedShape("empty word".into()));
    }
    let n = word[0].matrix().dim();
    if let Some(bad) = word.iter().find(|f| f.matrix().dim() != n) {
        return Err(LinalgError::DimMismatch {
            left: n,
            right: bad.matrix().dim(),
        });
    }

    for shift in 0..m {
        let rotated: Vec<Factor<'_>> = word[shift..].iter().chain(&word[..shift]).copied().collect();
        if is_palindrome(&rotated) {
            return palindromic(&rotated, None);
        }
        if let Factor::Psd(p) = rotated[0] {
            if is_palindrome(&rotated[1..]) {
                return palindromic(&rotated[1..], Some(p));
            }
        }
    }
    Err(LinalgError::UnsupportedShape(format!(
        "no cyclic rotation of the {m}-factor word is congruent to a Hermitian form"
    )))
}

/// Spectrum of `P^{1/2} R P^{1/2}` for a palindromic `R` (`P = I` when absent).
fn palindromic(r: &[Factor<'_>], outer: Option<&PsdMatrix>) -> Result<SignedSpectrum, LinalgError> {
    let n = r.first().map(|f| f.matrix().dim()).or(outer.map(|p| p.dim())).unwrap();
    let k = r.len();
    let mut left = match outer {
        Some(p) => p.sqrt()?.as_matrix().clone(),
        None => ComplexMatrix::identity(n),
    };
    for f in &r[..k / 2] {
        left = &left * f.matrix();
    }
    let middle = if k % 2 == 1 { Some(r[k / 2]) } else { None };
    match middle {
        None => Ok(squares(&left)?),
        Some(Factor::Psd(q)) => Ok(squares(&(&left * q.sqrt()?.as_matrix()))?),
        Some(Factor::Hermitian(h)) => {
            let hm = &(&left * h.as_matrix()) * &left.adjoint();
            let values = HermitianMatrix::new(hm)?.eigenvalues()?;
            Ok(SignedSpectrum::from_values(
                values.clamp_small(zero_clamp(n)).into_vec(),
            ))
        }
    }
}

fn squares(f: &ComplexMatrix) -> Result<SignedSpectrum, LinalgError> {
    let s = singular_values(f)?;
    Ok(SignedSpectrum::from_values(s.values().iter().map(|v| v * v).collect()))
}

/// `|λ(X)|` for a general square matrix, decreasing, via a complex Schur form.
///
/// Needed where the spectrum of a word is genuinely complex, e.g. for
/// `A^t (A #_t B) B^{1-t}` or an off-diagonal block of a PSD block matrix.
pub fn eigenvalue_moduli(x: &ComplexMatrix) -> Result<Spectrum, LinalgError> {
    x.ensure_finite()?;
    let n = x.dim();
    let m = DMatrix::<C64>::from_fn(n, n, |i, j| x[(i, j)]);
    let schur = Schur::try_new(m, UNIT_ROUNDOFF, 10_000).ok_or(LinalgError::NonConvergence {
        sweeps: 10_000,
        off: f64::NAN,
    })?;
    let (_, t) = schur.unpack();
    let moduli: Vec<f64> = (0..n).map(|i| t[(i, i)].norm()).collect();
    Ok(Spectrum::from_unsorted(moduli)?.clamp_small(zero_clamp(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn psd(d: &[f64]) -> PsdMatrix {
        PsdMatrix::from_matrix(ComplexMatrix::from_real_diag(d)).unwrap()
    }

    fn psd_rows(rows: &[Vec<f64>]) -> PsdMatrix {
        PsdMatrix::from_matrix(ComplexMatrix::from_real_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn product_of_two_psd_is_cyclic() {
        let a = psd_rows(&[vec![2.0, 1.0], vec![1.0, 1.0]]);
        let b = psd_rows(&[vec![1.0, 0.0], vec![0.0, 2.0]]);
        let l = real_eigenvalues_general(&[Factor::Psd(&a), Factor::Psd(&b)]).unwrap();
        assert_relative_eq!(l.values()[0], 2.0 + 2f64.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(l.values()[1], 2.0 - 2f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn commuting_diagonal_word() {
        let a = psd(&[2.0, 3.0, 0.5]);
        let b = psd(&[1.0, 4.0, 2.0]);
        let c = psd(&[3.0, 1.0, 1.0]);
        let l =
            real_eigenvalues_general(&[Factor::Psd(&a), Factor::Psd(&b), Factor::Psd(&a), Factor::Psd(&c)]).unwrap();
        // cyclic rotation c·a·b·a is PSD-congruent: elementwise a²bc = (12, 36, 0.5)
        let expect = [36.0, 12.0, 0.5];
        for (x, y) in l.values().iter().zip(expect) {
            assert_relative_eq!(*x, y, max_relative = 1e-13);
        }
    }

    #[test]
    fn hermitian_middle_keeps_sign() {
        let a = psd(&[4.0, 1.0]);
        let h = HermitianMatrix::new(ComplexMatrix::from_real_diag(&[-1.0, 2.0])).unwrap();
        let l = real_eigenvalues_general(&[Factor::Psd(&a), Factor::Hermitian(&h)]).unwrap();
        assert_eq!(l.values().len(), 2);
        assert_relative_eq!(l.values()[0], -4.0, epsilon = 1e-14);
        assert_relative_eq!(l.values()[1], 2.0, epsilon = 1e-14);
    }

    #[test]
    fn unsupported_word() {
        let a = psd_rows(&[vec![2.0, 1.0], vec![1.0, 1.0]]);
        let b = psd_rows(&[vec![1.0, 0.0], vec![0.0, 2.0]]);
        let c = psd_rows(&[vec![3.0, -1.0], vec![-1.0, 1.0]]);
        let r = real_eigenvalues_general(&[Factor::Psd(&a), Factor::Psd(&b), Factor::Psd(&c)]);
        assert!(matches!(r, Err(LinalgError::UnsupportedShape(_))));
    }

    #[test]
    fn moduli_of_rotation_matrix() {
        // [[0,-1],[1,0]] has eigenvalues ±i.
        let x = ComplexMatrix::from_real_rows(&[vec![0.0, -2.0], vec![2.0, 0.0]]).unwrap();
        let m = eigenvalue_moduli(&x).unwrap();
        assert_relative_eq!(m[0], 2.0, epsilon = 1e-14);
        assert_relative_eq!(m[1], 2.0, epsilon = 1e-14);
    }

    #[test]
    fn moduli_of_triangular() {
        let x = ComplexMatrix::from_rows(&[
            vec![C64::new(3.0, 4.0), C64::new(1.0, 0.0)],
            vec![C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
        ])
        .unwrap();
        let m = eigenvalue_moduli(&x).unwrap();
        assert_relative_eq!(m[0], 5.0, epsilon = 1e-13);
        assert_relative_eq!(m[1], 1.0, epsilon = 1e-13);
    }
}
