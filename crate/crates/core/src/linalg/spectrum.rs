use std::ops::Index;

use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Real vector sorted in decreasing order: eigenvalues or singular values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts `values` decreasingly. Fails on NaN or infinities.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self, LinalgError> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(LinalgError::BadSpectrum);
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Self(values))
    }

    /// Accepts `values` only if they are already sorted decreasingly.
    pub fn new(values: Vec<f64>) -> Result<Self, LinalgError> {
        if values.iter().any(|v| !v.is_finite()) || values.windows(2).any(|w| w[0] < w[1]) {
            return Err(LinalgError::BadSpectrum);
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.0.first().copied().unwrap_or(0.0)
    }

    pub fn min(&self) -> f64 {
        self.0.last().copied().unwrap_or(0.0)
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Elementwise `x^p` for a nonnegative spectrum and `p > 0`; order is preserved.
    pub fn powf(&self, p: f64) -> Self {
        debug_assert!(p > 0.0);
        Self(self.0.iter().map(|&x| x.max(0.0).powf(p)).collect())
    }

    pub fn sqrt(&self) -> Self {
        self.powf(0.5)
    }

    pub fn scale(&self, c: f64) -> Self {
        debug_assert!(c >= 0.0);
        Self(self.0.iter().map(|&x| x * c).collect())
    }

    /// Sets values below `rel * max|x|` to exact zero.
    pub(crate) fn clamp_small(mut self, rel: f64) -> Self {
        let cut = rel * self.0.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for v in &mut self.0 {
            if v.abs() < cut {
                *v = 0.0;
            }
        }
        self
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl Index<usize> for Spectrum {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<f64>> for Spectrum {
    type Error = LinalgError;

    fn try_from(v: Vec<f64>) -> Result<Self, LinalgError> {
        Spectrum::new(v)
    }
}

impl From<Spectrum> for Vec<f64> {
    fn from(s: Spectrum) -> Vec<f64> {
        s.0
    }
}

/// Real eigenvalues ordered by decreasing modulus, signs kept.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignedSpectrum(Vec<f64>);

impl SignedSpectrum {
    pub(crate) fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.abs().total_cmp(&a.abs()).then(b.total_cmp(a)));
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    /// `|λ|` sorted decreasingly.
    pub fn moduli(&self) -> Spectrum {
        Spectrum(self.0.iter().map(|v| v.abs()).collect())
    }

    /// The ordinary decreasing spectrum (signed).
    pub fn decreasing(&self) -> Spectrum {
        let mut v = self.0.clone();
        v.sort_by(|a, b| b.total_cmp(a));
        Spectrum(v)
    }
}

/// Elementwise product of two spectra, re-sorted decreasingly.
pub fn hadamard(x: &Spectrum, y: &Spectrum) -> Result<Spectrum, LinalgError> {
    if x.len() != y.len() {
        return Err(LinalgError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Spectrum::from_unsorted(x.0.iter().zip(&y.0).map(|(a, b)| a * b).collect())
}
