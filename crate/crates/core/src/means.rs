//! Weighted geometric mean `A #_t B`, the two-exponent mean `A #_{r,t} B`
//! and the mean `A ♮♮ B`, on positive definite inputs and — through an
//! `εI` regularization ladder — on positive semi-definite ones.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{LinalgError, PsdMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeanError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("regularization ladder did not settle (last relative change {last_change:e})")]
    NonConvergedLimit { last_change: f64 },
    #[error("regularization must be nonnegative, got {0}")]
    NegativeEpsilon(f64),
}

pub type Result<T> = std::result::Result<T, MeanError>;

/// Parameters shared by the means: weight `t`, exponents `r`, `s`, and the
/// regularization magnitude `epsilon` (0 selects the strict definite path).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanParams {
    pub t: f64,
    pub r: f64,
    pub s: f64,
    pub epsilon: f64,
}

impl Default for MeanParams {
    fn default() -> Self {
        Self {
            t: 0.5,
            r: 1.0,
            s: 1.0,
            epsilon: 0.0,
        }
    }
}

/// Rungs of the regularization ladder, relative to `λ_max(A + B)`.
pub const LADDER: [f64; 3] = [1e-6, 1e-8, 1e-10];
/// Two consecutive rungs must agree to this relative Frobenius distance.
pub const LADDER_AGREEMENT: f64 = 1e-7;

fn same_dim(a: &PsdMatrix, b: &PsdMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(LinalgError::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        }
        .into());
    }
    Ok(())
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps >= 0.0) {
        return Err(MeanError::NegativeEpsilon(eps));
    }
    Ok(())
}

/// `(A + εI, B + εI)` when regularization is requested and needed.
fn regularize(a: &PsdMatrix, b: &PsdMatrix, eps: f64, needed: bool) -> Result<(PsdMatrix, PsdMatrix)> {
    if eps > 0.0 && needed {
        Ok((a.shift(eps)?, b.shift(eps)?))
    } else {
        Ok((a.clone(), b.clone()))
    }
}

/// `A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}` for definite `A`.
fn sharp_definite(a: &PsdMatrix, b: &PsdMatrix, t: f64) -> Result<PsdMatrix> {
    let half = a.sqrt()?;
    let inv_half = a.power(-0.5)?;
    let x = PsdMatrix::from_matrix(&(inv_half.as_matrix() * b.as_matrix()) * inv_half.as_matrix())?;
    let xt = x.power(t)?;
    Ok(PsdMatrix::from_matrix(
        &(half.as_matrix() * xt.as_matrix()) * half.as_matrix(),
    )?)
}

/// `A #_t B`. With `eps > 0` and singular `A`, both inputs are shifted by `εI`.
pub fn geometric_mean_t(a: &PsdMatrix, b: &PsdMatrix, t: f64, eps: f64) -> Result<PsdMatrix> {
    same_dim(a, b)?;
    check_eps(eps)?;
    let (a, b) = regularize(a, b, eps, !a.is_definite())?;
    if !a.is_definite() {
        return Err(LinalgError::SingularMatrix.into());
    }
    sharp_definite(&a, &b, t)
}

/// `A #_{r,t} B = A^{r/2} (A^{-1/2} B A^{-1/2})^t A^{r/2}`.
pub fn generalized_mean_rt(a: &PsdMatrix, b: &PsdMatrix, r: f64, t: f64, eps: f64) -> Result<PsdMatrix> {
    same_dim(a, b)?;
    check_eps(eps)?;
    if t == 0.0 && (r >= 0.0 || a.is_definite()) {
        // The middle factor is I whatever A is.
        return Ok(a.power(r)?);
    }
    let (a, b) = regularize(a, b, eps, !a.is_definite())?;
    if !a.is_definite() {
        return Err(LinalgError::SingularMatrix.into());
    }
    let outer = a.power(r / 2.0)?;
    let inv_half = a.power(-0.5)?;
    let x = PsdMatrix::from_matrix(&(inv_half.as_matrix() * b.as_matrix()) * inv_half.as_matrix())?;
    let xt = x.power(t)?;
    Ok(PsdMatrix::from_matrix(
        &(outer.as_matrix() * xt.as_matrix()) * outer.as_matrix(),
    )?)
}

/// `A ♮♮ B = A^{1/2} (B^{1/2} A^{-1} B^{1/2})^{1/2} A^{1/2}`.
pub fn natural_natural(a: &PsdMatrix, b: &PsdMatrix, eps: f64) -> Result<PsdMatrix> {
    same_dim(a, b)?;
    check_eps(eps)?;
    let (a, b) = regularize(a, b, eps, !(a.is_definite() && b.is_definite()))?;
    if !(a.is_definite() && b.is_definite()) {
        return Err(LinalgError::SingularMatrix.into());
    }
    let half = a.sqrt()?;
    let inv = a.power(-1.0)?;
    let bh = b.sqrt()?;
    let inner = PsdMatrix::from_matrix(&(bh.as_matrix() * inv.as_matrix()) * bh.as_matrix())?;
    let root = inner.sqrt()?;
    Ok(PsdMatrix::from_matrix(
        &(half.as_matrix() * root.as_matrix()) * half.as_matrix(),
    )?)
}

/// Which mean a limit evaluation refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mean {
    Sharp { t: f64 },
    Generalized { r: f64, t: f64 },
    NaturalNatural,
}

impl Mean {
    fn eval(&self, a: &PsdMatrix, b: &PsdMatrix, eps: f64) -> Result<PsdMatrix> {
        match *self {
            Mean::Sharp { t } => geometric_mean_t(a, b, t, eps),
            Mean::Generalized { r, t } => generalized_mean_rt(a, b, r, t, eps),
            Mean::NaturalNatural => natural_natural(a, b, eps),
        }
    }

    fn needs_limit(&self, a: &PsdMatrix, b: &PsdMatrix) -> bool {
        match self {
            Mean::Sharp { .. } => !a.is_definite(),
            Mean::Generalized { t, r } => !a.is_definite() && !(*t == 0.0 && *r >= 0.0),
            Mean::NaturalNatural => !(a.is_definite() && b.is_definite()),
        }
    }
}

/// The mean, extended to semi-definite inputs as the limit `ε → 0⁺` of the
/// mean of `A + εI` and `B + εI`.
///
/// Definite inputs take the exact path. For `A #_t B` with singular `A` and
/// definite `B` the exact identity `A #_t B = B #_{1-t} A` is used (for
/// `0 ≤ t ≤ 1`): the ladder converges only like `ε^{min(t, 1-t)}` there.
/// Otherwise the ladder `ε ∈ {1e-6, 1e-8, 1e-10}·λ_max(A+B)` runs until two
/// consecutive rungs agree within [`LADDER_AGREEMENT`].
pub fn mean_limit(mean: Mean, a: &PsdMatrix, b: &PsdMatrix) -> Result<PsdMatrix> {
    same_dim(a, b)?;
    if !mean.needs_limit(a, b) {
        return mean.eval(a, b, 0.0);
    }
    if let Mean::Sharp { t } = mean {
        if b.is_definite() && (0.0..=1.0).contains(&t) {
            return sharp_definite(b, a, 1.0 - t);
        }
    }
    let top = crate::linalg::HermitianMatrix::new(a.as_matrix() + b.as_matrix())?
        .eigenvalues()?
        .max()
        .max(f64::MIN_POSITIVE);
    let mut previous: Option<PsdMatrix> = None;
    let mut last_change = f64::INFINITY;
    for rung in LADDER {
        let current = mean.eval(a, b, rung * top)?;
        if let Some(prev) = &previous {
            let scale = current.as_matrix().frobenius_norm().max(f64::MIN_POSITIVE);
            last_change = current.as_matrix().distance(prev.as_matrix()) / scale;
            if last_change <= LADDER_AGREEMENT {
                return Ok(current);
            }
        }
        previous = Some(current);
    }
    Err(MeanError::NonConvergedLimit { last_change })
}
