//! Schatten p-norms, Ky Fan k-norms and Fan dominance.
//!
//! `|||X||| ≤ |||Y|||` for every unitarily invariant norm exactly when every
//! Ky Fan norm of `X` is at most that of `Y`, so the quantifier over all
//! such norms is decided by `n` comparisons.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{singular_values, ComplexMatrix, LinalgError, Spectrum};
use crate::serde_ext::{ext_f64_vec, ExtF64};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NormError {
    #[error("Schatten exponent must be >= 1 or infinite, got {0}")]
    InvalidP(f64),
    #[error("Ky Fan index must be in 1..={n}, got {k}")]
    BadK { k: usize, n: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Schatten exponent; `Infinity` is the operator norm. JSON: a number or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchattenP {
    Finite(f64),
    Infinity,
}

impl SchattenP {
    /// The spot-check family used for "every Schatten norm" claims.
    pub const SPOT_CHECK: [SchattenP; 5] = [
        SchattenP::Finite(1.0),
        SchattenP::Finite(1.5),
        SchattenP::Finite(2.0),
        SchattenP::Finite(3.0),
        SchattenP::Infinity,
    ];

    pub fn new(p: f64) -> Result<Self, NormError> {
        if p == f64::INFINITY {
            Ok(SchattenP::Infinity)
        } else if p >= 1.0 && p.is_finite() {
            Ok(SchattenP::Finite(p))
        } else {
            Err(NormError::InvalidP(p))
        }
    }

    pub fn value(&self) -> f64 {
        match self {
            SchattenP::Finite(p) => *p,
            SchattenP::Infinity => f64::INFINITY,
        }
    }
}

impl std::fmt::Display for SchattenP {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchattenP::Finite(p) => write!(f, "{p}"),
            SchattenP::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for SchattenP {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ExtF64(self.value()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchattenP {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let p = ExtF64::deserialize(d)?.0;
        SchattenP::new(p).map_err(serde::de::Error::custom)
    }
}

/// `(Σ s_i^p)^{1/p}` of a singular-value vector, scaled by `s_1` to avoid overflow.
pub fn schatten_of(s: &Spectrum, p: SchattenP) -> f64 {
    let top = s.max();
    if top == 0.0 {
        return 0.0;
    }
    match p {
        SchattenP::Infinity => top,
        SchattenP::Finite(p) => {
            let sum: f64 = s.values().iter().map(|v| (v / top).powf(p)).sum();
            top * sum.powf(1.0 / p)
        }
    }
}

pub fn schatten(x: &ComplexMatrix, p: f64) -> Result<f64, NormError> {
    let p = SchattenP::new(p)?;
    Ok(schatten_of(&singular_values(x)?, p))
}

/// Sum of the `k` largest singular values.
pub fn ky_fan(x: &ComplexMatrix, k: usize) -> Result<f64, NormError> {
    let n = x.dim();
    if k == 0 || k > n {
        return Err(NormError::BadK { k, n });
    }
    Ok(singular_values(x)?.values()[..k].iter().sum())
}

/// Outcome of a Fan-dominance test `X ≤ Y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FanVerdict {
    pub holds: bool,
    /// `gaps[k-1] = ‖Y‖_(k) − ‖X‖_(k)`.
    #[serde(with = "ext_f64_vec")]
    pub gaps: Vec<f64>,
}

/// Ky Fan partial sums of a singular-value vector.
pub fn ky_fan_sums(s: &Spectrum) -> Vec<f64> {
    s.values()
        .iter()
        .scan(0.0, |acc, v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

/// `‖X‖_(k) ≤ ‖Y‖_(k) + tol` for every `k`.
pub fn fan_dominates(x: &ComplexMatrix, y: &ComplexMatrix, tol: f64) -> Result<FanVerdict, NormError> {
    if x.dim() != y.dim() {
        return Err(NormError::DimMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let kx = ky_fan_sums(&singular_values(x)?);
    let ky = ky_fan_sums(&singular_values(y)?);
    let gaps: Vec<f64> = kx.iter().zip(&ky).map(|(a, b)| b - a).collect();
    Ok(FanVerdict {
        holds: gaps.iter().all(|&g| g >= -tol),
        gaps,
    })
}
