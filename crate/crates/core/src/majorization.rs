//! Weak log-majorization, log-majorization and the reverse relation, with
//! per-prefix margins on the log scale.
//!
//! For decreasing `x, y ≥ 0` the margin at prefix `k` is
//! `Σ_{i≤k} log y_i − Σ_{i≤k} log x_i`; `x ≺_wlog y` means every margin is
//! nonnegative. Zeros enter as `−∞` log-prefix sentinels: a prefix that is
//! `−∞` on both sides counts as satisfied (`0 ≤ 0`), `−∞` only on the
//! right is a failure, `−∞` only on the left is satisfied.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Spectrum;
use crate::serde_ext::{ext_f64, ext_f64_opt, ext_f64_vec};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_TOL_DET: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MajorizationError {
    #[error("spectra have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("log-majorization needs nonnegative entries, found {0:e}")]
    NegativeEntry(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MajorizationKind {
    WeakLog,
    Log,
    ReverseLog,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MajorizationVerdict {
    pub kind: MajorizationKind,
    #[serde(with = "ext_f64_vec")]
    pub k_margins: Vec<f64>,
    /// `|Σ log x − Σ log y|`, only for the (reverse) log relation.
    #[serde(with = "ext_f64_opt", default, skip_serializing_if = "Option::is_none")]
    pub det_gap: Option<f64>,
    pub holds: bool,
    #[serde(with = "ext_f64")]
    pub min_margin: f64,
}

fn log_prefix(x: &Spectrum) -> Result<Vec<f64>, MajorizationError> {
    let mut acc = 0.0;
    x.values()
        .iter()
        .map(|&v| {
            if v < 0.0 {
                return Err(MajorizationError::NegativeEntry(v));
            }
            acc += v.ln();
            Ok(acc)
        })
        .collect()
}

fn prefix_margin(lx: f64, ly: f64) -> f64 {
    match (lx == f64::NEG_INFINITY, ly == f64::NEG_INFINITY) {
        (true, true) => 0.0,
        (false, true) => f64::NEG_INFINITY,
        (true, false) => f64::INFINITY,
        (false, false) => ly - lx,
    }
}

fn margins(x: &Spectrum, y: &Spectrum) -> Result<Vec<f64>, MajorizationError> {
    if x.len() != y.len() {
        return Err(MajorizationError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let (lx, ly) = (log_prefix(x)?, log_prefix(y)?);
    Ok(lx.iter().zip(&ly).map(|(&a, &b)| prefix_margin(a, b)).collect())
}

fn min_of(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::INFINITY, f64::min)
}

/// `x ≺_wlog y` with absolute log tolerance `tol`.
pub fn weak_log_majorizes(x: &Spectrum, y: &Spectrum, tol: f64) -> Result<MajorizationVerdict, MajorizationError> {
    let k_margins = margins(x, y)?;
    let min_margin = min_of(&k_margins);
    Ok(MajorizationVerdict {
        kind: MajorizationKind::WeakLog,
        holds: min_margin >= -tol,
        k_margins,
        det_gap: None,
        min_margin,
    })
}

/// `x ≺_log y`: weak log-majorization plus equal full products (`det_gap ≤ tol_det`).
pub fn log_majorizes(
    x: &Spectrum,
    y: &Spectrum,
    tol: f64,
    tol_det: f64,
) -> Result<MajorizationVerdict, MajorizationError> {
    let k_margins = margins(x, y)?;
    let min_margin = min_of(&k_margins);
    let det_gap = k_margins.last().map(|m| m.abs()).unwrap_or(0.0);
    Ok(MajorizationVerdict {
        kind: MajorizationKind::Log,
        holds: min_margin >= -tol && det_gap <= tol_det,
        k_margins,
        det_gap: Some(det_gap),
        min_margin,
    })
}

/// `x ≻_log y`, i.e. `y ≺_log x`.
pub fn reverse_log_majorizes(
    x: &Spectrum,
    y: &Spectrum,
    tol: f64,
    tol_det: f64,
) -> Result<MajorizationVerdict, MajorizationError> {
    let mut v = log_majorizes(y, x, tol, tol_det)?;
    v.kind = MajorizationKind::ReverseLog;
    Ok(v)
}
