//! Singular values by one-sided (Hestenes) Jacobi.
//!
//! Rotating column pairs of `X` is Jacobi on `X*X` without forming it, so
//! small singular values keep their relative accuracy.

use super::eigen::{rotation, MAX_SWEEPS};
use super::matrix::{ComplexMatrix, C64};
use super::spectrum::Spectrum;
use super::{zero_clamp, LinalgError, UNIT_ROUNDOFF};

/// `s(X)`: square roots of the eigenvalues of `X*X`, decreasing.
pub fn singular_values(x: &ComplexMatrix) -> Result<Spectrum, LinalgError> {
    Ok(singular_values_unclamped(x)?.clamp_small(zero_clamp(x.dim())))
}

/// Singular values without the relative zero clamp.
pub(crate) fn singular_values_unclamped(x: &ComplexMatrix) -> Result<Spectrum, LinalgError> {
    x.ensure_finite()?;
    let n = x.dim();
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| x.column(j)).collect();
    let tol = n as f64 * UNIT_ROUNDOFF;

    let mut sweeps = 0;
    loop {
        let mut rotated = false;
        let mut worst = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: C64 = cols[p].iter().zip(&cols[q]).map(|(a, b)| a.conj() * b).sum();
                let scale = (alpha * beta).sqrt();
                if scale == 0.0 {
                    continue;
                }
                let rel = gamma.norm() / scale;
                worst = worst.max(rel);
                if rel <= tol {
                    continue;
                }
                rotated = true;
                let (c, s) = rotation(alpha, beta, gamma);
                let sc = s.conj();
                let (left, right) = cols.split_at_mut(q);
                for (up, uq) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let a = *up;
                    let b = *uq;
                    *up = a * c - b * sc;
                    *uq = a * s + b * c;
                }
            }
        }
        sweeps += 1;
        if !rotated {
            break;
        }
        if sweeps >= MAX_SWEEPS {
            return Err(LinalgError::NonConvergence { sweeps, off: worst });
        }
    }

    let values = cols
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    Spectrum::from_unsorted(values)
}
