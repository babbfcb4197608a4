//! Cyclic complex Jacobi eigensolver for Hermitian matrices.

use super::matrix::{ComplexMatrix, C64};
use super::psd::HermitianMatrix;
use super::spectrum::Spectrum;
use super::{LinalgError, UNIT_ROUNDOFF};

/// Hard cap on Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal magnitude, relative to `‖A‖_F`, accepted as converged.
const OFF_DIAGONAL_TOL: f64 = 1e-14;

/// `A = V diag(λ) V*` with `λ` sorted decreasingly and `V` unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Spectrum,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `V diag(f(λ_i)) V*`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let d: Vec<f64> = self.eigenvalues.values().iter().map(|&l| f(l)).collect();
        spectral_product(&self.eigenvectors, &d)
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|l| l)
    }
}

/// `V diag(d) V*`, assembled so the result is exactly Hermitian.
pub(crate) fn spectral_product(v: &ComplexMatrix, d: &[f64]) -> ComplexMatrix {
    let n = v.dim();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let mut acc = C64::new(0.0, 0.0);
            for (k, &dk) in d.iter().enumerate() {
                if dk != 0.0 {
                    acc += v[(i, k)] * v[(j, k)].conj() * dk;
                }
            }
            if i == j {
                out[(i, i)] = C64::new(acc.re, 0.0);
            } else {
                out[(i, j)] = acc;
                out[(j, i)] = acc.conj();
            }
        }
    }
    out
}

/// Unitary `J = [[c, σ], [-σ̄, c]]` diagonalizing the Hermitian 2x2 block
/// `[[a, b], [b̄, d]]` via `J* H J`.
pub(crate) fn rotation(a: f64, d: f64, b: C64) -> (f64, C64) {
    let mag = b.norm();
    let phase = b / mag;
    let zeta = (d - a) / (2.0 * mag);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, phase * (t * c))
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues decreasing.
pub fn eig_hermitian(a: &HermitianMatrix) -> Result<EigenDecomposition, LinalgError> {
    jacobi(a.as_matrix())
}

pub(crate) fn jacobi(m: &ComplexMatrix) -> Result<EigenDecomposition, LinalgError> {
    m.ensure_finite()?;
    let n = m.dim();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n);
    let norm = a.frobenius_norm();
    let converged_off = OFF_DIAGONAL_TOL * norm;

    let mut sweeps = 0;
    // The zero matrix is already diagonal.
    while norm > 0.0 && sweeps <= MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let b = a[(p, q)];
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let mag = b.norm();
                if mag <= (UNIT_ROUNDOFF * (app * aqq).abs().sqrt()).max(f64::MIN_POSITIVE) {
                    continue;
                }
                rotated = true;
                let (c, s) = rotation(app, aqq, b);
                rotate(&mut a, &mut v, p, q, c, s);
            }
        }
        sweeps += 1;
        if !rotated {
            break;
        }
        if sweeps >= MAX_SWEEPS {
            let off = max_off_diagonal(&a);
            if off > converged_off {
                return Err(LinalgError::NonConvergence { sweeps, off });
            }
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(EigenDecomposition {
        eigenvalues: Spectrum::new(values)?,
        eigenvectors: vectors,
    })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, c: f64, s: C64) {
    let n = a.dim();
    let sc = s.conj();
    // A <- A J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * sc;
        a[(k, q)] = akp * s + akq * c;
    }
    // A <- J* A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * s;
        a[(q, k)] = apk * sc + aqk * c;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * sc;
        v[(k, q)] = vkp * s + vkq * c;
    }
}

fn max_off_diagonal(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut m = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m = m.max(a[(i, j)].norm());
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn herm(rows: &[Vec<C64>]) -> HermitianMatrix {
        HermitianMatrix::new(ComplexMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn diagonal_input_is_sorted() {
        let a = HermitianMatrix::new(ComplexMatrix::from_real_diag(&[3.0, 1.0, 2.0])).unwrap();
        let e = eig_hermitian(&a).unwrap();
        assert_eq!(e.eigenvalues.values(), &[3.0, 2.0, 1.0]);
    }

    #[test]
    fn real_symmetric_two_by_two() {
        let e = eig_hermitian(&herm(&[vec![re(2.0), re(1.0)], vec![re(1.0), re(2.0)]])).unwrap();
        assert_relative_eq!(e.eigenvalues[0], 3.0, epsilon = 1e-14);
        assert_relative_eq!(e.eigenvalues[1], 1.0, epsilon = 1e-14);
    }

    // Roots of the characteristic polynomial of a Hermitian 2x2, from the
    // quadratic formula, used as an independent oracle.
    fn quadratic_oracle(a: f64, c: f64, b: C64) -> (f64, f64) {
        let tr = a + c;
        let det = a * c - b.norm_sqr();
        let disc = (tr * tr - 4.0 * det).sqrt();
        ((tr + disc) / 2.0, (tr - disc) / 2.0)
    }

    #[test]
    fn complex_two_by_two_matches_quadratic_oracle() {
        let b = C64::new(0.0, 1.0);
        let (l1, l2) = quadratic_oracle(2.0, 2.0, b);
        assert_relative_eq!(l1, 3.0, epsilon = 1e-15);
        assert_relative_eq!(l2, 1.0, epsilon = 1e-15);
        let e = eig_hermitian(&herm(&[vec![re(2.0), b], vec![b.conj(), re(2.0)]])).unwrap();
        assert_relative_eq!(e.eigenvalues[0], l1, epsilon = 1e-14);
        assert_relative_eq!(e.eigenvalues[1], l2, epsilon = 1e-14);

        let b = C64::new(0.3, -1.7);
        let (l1, l2) = quadratic_oracle(-1.25, 4.5, b);
        let e = eig_hermitian(&herm(&[vec![re(-1.25), b], vec![b.conj(), re(4.5)]])).unwrap();
        assert_relative_eq!(e.eigenvalues[0], l1, epsilon = 1e-13);
        assert_relative_eq!(e.eigenvalues[1], l2, epsilon = 1e-13);
    }

    #[test]
    fn zero_matrix() {
        let a = HermitianMatrix::new(ComplexMatrix::zeros(3)).unwrap();
        let e = eig_hermitian(&a).unwrap();
        assert_eq!(e.eigenvalues.values(), &[0.0, 0.0, 0.0]);
        assert_eq!(e.eigenvectors, ComplexMatrix::identity(3));
    }

    #[test]
    fn reconstruction_and_unitarity() {
        let b = C64::new(0.5, 0.25);
        let a = herm(&[
            vec![re(4.0), b, C64::new(0.0, -1.0)],
            vec![b.conj(), re(-2.0), re(0.75)],
            vec![C64::new(0.0, 1.0), re(0.75), re(1.0)],
        ]);
        let e = eig_hermitian(&a).unwrap();
        let v = &e.eigenvectors;
        let vv = &v.adjoint() * v;
        assert!(vv.distance(&ComplexMatrix::identity(3)) < 3e-12);
        assert!(e.reconstruct().distance(a.as_matrix()) < 3e-12 * a.as_matrix().frobenius_norm());
        assert_relative_eq!(e.eigenvalues.sum(), 3.0, epsilon = 1e-12);
    }
}
