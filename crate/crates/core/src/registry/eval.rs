//! Evaluation of one registry instance into a [`CheckOutcome`].

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::{InputClass, Params, RegistryError, Relation, Selector};
use crate::linalg::{
    eigenvalue_moduli, eigenvalues_of_product, product_singular_values, singular_values, ComplexMatrix,
    HermitianMatrix, LinalgError, PsdMatrix, Spectrum,
};
use crate::majorization::{
    log_majorizes, reverse_log_majorizes, weak_log_majorizes, MajorizationError, DEFAULT_TOL, DEFAULT_TOL_DET,
};
use crate::means::{mean_limit, Mean, MeanError};
use crate::norms::{ky_fan_sums, schatten_of, NormError, SchattenP};
use crate::serde_ext::{ext_f64, ext_f64_opt, ext_f64_vec};

pub const DEFAULT_STRICTNESS: f64 = 1e-6;

/// Decision thresholds: `tol` on margins, `tol_det` on determinant legs,
/// `strictness` for counting a violation as real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub tol: f64,
    pub tol_det: f64,
    pub strictness: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            tol_det: DEFAULT_TOL_DET,
            strictness: DEFAULT_STRICTNESS,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<(), RegistryError> {
        for (name, v) in [
            ("tol", self.tol),
            ("tol_det", self.tol_det),
            ("strictness", self.strictness),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(RegistryError::DomainViolation(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Mean(#[from] MeanError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Majorization(#[from] MajorizationError),
    #[error(transparent)]
    Norm(#[from] NormError),
}

type R<T> = Result<T, EvalError>;

pub(super) enum Prepared {
    Psd(PsdMatrix),
    Hermitian(HermitianMatrix),
}

/// Prepared inputs, parameters and tolerances handed to an evaluator.
pub struct EvalCtx<'a> {
    pub(super) inputs: Vec<Prepared>,
    pub(super) params: &'a Params,
    pub(super) tol: Tolerances,
}

impl EvalCtx<'_> {
    pub(super) fn psd(&self, i: usize) -> &PsdMatrix {
        match &self.inputs[i] {
            Prepared::Psd(p) => p,
            Prepared::Hermitian(_) => panic!("input {i} is not PSD"),
        }
    }

    pub(super) fn herm(&self, i: usize) -> &HermitianMatrix {
        match &self.inputs[i] {
            Prepared::Psd(p) => p.as_hermitian(),
            Prepared::Hermitian(h) => h,
        }
    }

    pub(super) fn p(&self, name: &str) -> f64 {
        self.params[name]
    }

    pub(super) fn tol(&self) -> f64 {
        self.tol.tol
    }
}

// ---- spectral helpers used by the catalog ----

pub(super) fn pw(a: &PsdMatrix, t: f64) -> R<PsdMatrix> {
    Ok(a.power(t)?)
}

pub(super) fn psd(m: ComplexMatrix) -> R<PsdMatrix> {
    Ok(PsdMatrix::from_matrix(m)?)
}

pub(super) fn sharp(a: &PsdMatrix, b: &PsdMatrix, t: f64) -> R<PsdMatrix> {
    Ok(mean_limit(Mean::Sharp { t }, a, b)?)
}

pub(super) fn gen(a: &PsdMatrix, b: &PsdMatrix, r: f64, t: f64) -> R<PsdMatrix> {
    Ok(mean_limit(Mean::Generalized { r, t }, a, b)?)
}

pub(super) fn nn(a: &PsdMatrix, b: &PsdMatrix) -> R<PsdMatrix> {
    Ok(mean_limit(Mean::NaturalNatural, a, b)?)
}

pub(super) fn mul(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    ComplexMatrix::product(factors.iter().copied())
}

/// Singular values of a word in PSD factors, accurate at both ends.
pub(super) fn svw(factors: &[&PsdMatrix]) -> R<Spectrum> {
    Ok(product_singular_values(factors)?)
}

pub(super) fn sv(x: &ComplexMatrix) -> R<Spectrum> {
    Ok(singular_values(x)?)
}

/// `s(X)^2`, the spectrum of `X* X`.
pub(super) fn sv2(x: &ComplexMatrix) -> R<Spectrum> {
    Ok(singular_values(x)?.powf(2.0))
}

/// `λ(AB)` for PSD `A`, `B`.
pub(super) fn lam(a: &PsdMatrix, b: &PsdMatrix) -> R<Spectrum> {
    Ok(eigenvalues_of_product(a, b)?)
}

pub(super) fn moduli(x: &ComplexMatrix) -> R<Spectrum> {
    Ok(eigenvalue_moduli(x)?)
}

pub(super) fn herm_eigs(m: ComplexMatrix) -> R<Spectrum> {
    Ok(HermitianMatrix::new(m)?.eigenvalues()?)
}

// ---- legs ----

/// One evaluated relation between a left and a right side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LegOutcome {
    pub name: String,
    pub relation: Relation,
    pub asserted: bool,
    #[serde(with = "ext_f64_vec")]
    pub margins: Vec<f64>,
    #[serde(with = "ext_f64_opt", default, skip_serializing_if = "Option::is_none")]
    pub det_gap: Option<f64>,
    pub holds: bool,
    #[serde(with = "ext_f64")]
    pub min_margin: f64,
    /// Left-side spectrum / norms, for diagnostics.
    #[serde(with = "ext_f64_vec")]
    pub lhs: Vec<f64>,
    #[serde(with = "ext_f64_vec")]
    pub rhs: Vec<f64>,
}

impl LegOutcome {
    /// Marks the leg as exploratory: reported, never counted.
    pub(super) fn unasserted(mut self) -> Self {
        self.asserted = false;
        self
    }
}

fn min_of(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::INFINITY, f64::min)
}

fn plain_leg(name: &str, relation: Relation, margins: Vec<f64>, tol: f64, lhs: Vec<f64>, rhs: Vec<f64>) -> LegOutcome {
    let min_margin = min_of(&margins);
    LegOutcome {
        name: name.to_string(),
        relation,
        asserted: true,
        holds: min_margin >= -tol,
        margins,
        det_gap: None,
        min_margin,
        lhs,
        rhs,
    }
}

/// `x ≺_log y`.
pub(super) fn log_leg(name: &str, x: Spectrum, y: Spectrum, tol: &Tolerances) -> R<LegOutcome> {
    let v = log_majorizes(&x, &y, tol.tol, tol.tol_det)?;
    Ok(LegOutcome {
        name: name.to_string(),
        relation: Relation::Log,
        asserted: true,
        margins: v.k_margins,
        det_gap: v.det_gap,
        holds: v.holds,
        min_margin: v.min_margin,
        lhs: x.into_vec(),
        rhs: y.into_vec(),
    })
}

/// `x ≺_wlog y`.
pub(super) fn wlog_leg(name: &str, x: Spectrum, y: Spectrum, tol: &Tolerances) -> R<LegOutcome> {
    let v = weak_log_majorizes(&x, &y, tol.tol)?;
    Ok(LegOutcome {
        name: name.to_string(),
        relation: Relation::WeakLog,
        asserted: true,
        margins: v.k_margins,
        det_gap: None,
        holds: v.holds,
        min_margin: v.min_margin,
        lhs: x.into_vec(),
        rhs: y.into_vec(),
    })
}

/// `x ≻_log y`.
pub(super) fn reverse_log_leg(name: &str, x: Spectrum, y: Spectrum, tol: &Tolerances) -> R<LegOutcome> {
    let v = reverse_log_majorizes(&x, &y, tol.tol, tol.tol_det)?;
    Ok(LegOutcome {
        name: name.to_string(),
        relation: Relation::ReverseLog,
        asserted: true,
        margins: v.k_margins,
        det_gap: v.det_gap,
        holds: v.holds,
        min_margin: v.min_margin,
        lhs: x.into_vec(),
        rhs: y.into_vec(),
    })
}

/// `L ≤ R` in the Loewner order: margins are `λ(R − L) / λ_max(R)`.
pub(super) fn loewner_leg(name: &str, l: &ComplexMatrix, r: &ComplexMatrix, tol: f64) -> R<LegOutcome> {
    let lhs = herm_eigs(l.clone())?;
    let rhs = herm_eigs(r.clone())?;
    let scale = rhs.max().abs().max(lhs.max().abs()).max(f64::MIN_POSITIVE);
    let gap = herm_eigs(r - l)?;
    let margins = gap.values().iter().map(|g| g / scale).collect();
    Ok(plain_leg(
        name,
        Relation::LoewnerLeq,
        margins,
        tol,
        lhs.into_vec(),
        rhs.into_vec(),
    ))
}

/// `l_j ≤ r_j` for every `j`: margins are `(r_j − l_j) / r_1`.
pub(super) fn wise_leg(name: &str, relation: Relation, l: Spectrum, r: Spectrum, tol: f64) -> R<LegOutcome> {
    if l.len() != r.len() {
        return Err(MajorizationError::LengthMismatch {
            left: l.len(),
            right: r.len(),
        }
        .into());
    }
    let scale = r.max().abs().max(l.max().abs()).max(f64::MIN_POSITIVE);
    let margins = l
        .values()
        .iter()
        .zip(r.values())
        .map(|(a, b)| (b - a) / scale)
        .collect();
    Ok(plain_leg(name, relation, margins, tol, l.into_vec(), r.into_vec()))
}

/// `‖L‖_p ≤ ‖R‖_p` for each `p`: margins are `ln(‖R‖_p / ‖L‖_p)`.
pub(super) fn norm_leg(name: &str, l: &ComplexMatrix, r: &ComplexMatrix, ps: &[SchattenP], tol: f64) -> R<LegOutcome> {
    let (sl, sr) = (sv(l)?, sv(r)?);
    let nl: Vec<f64> = ps.iter().map(|&p| schatten_of(&sl, p)).collect();
    let nr: Vec<f64> = ps.iter().map(|&p| schatten_of(&sr, p)).collect();
    let margins = nl.iter().zip(&nr).map(|(a, b)| (b / a).ln()).collect();
    Ok(plain_leg(name, Relation::NormLeq(ps.to_vec()), margins, tol, nl, nr))
}

/// Fan dominance `L ≤ R`: margins are `(‖R‖_(k) − ‖L‖_(k)) / ‖R‖_(n)`.
pub(super) fn fan_leg(name: &str, l: &ComplexMatrix, r: &ComplexMatrix, tol: f64) -> R<LegOutcome> {
    let kl = ky_fan_sums(&sv(l)?);
    let kr = ky_fan_sums(&sv(r)?);
    let scale = kr.last().copied().unwrap_or(1.0).max(f64::MIN_POSITIVE);
    let margins = kl.iter().zip(&kr).map(|(a, b)| (b - a) / scale).collect();
    Ok(plain_leg(name, Relation::FanDominance, margins, tol, kl, kr))
}

/// Equality of two real multisets: margins are `−|a_j − b_j| / max(1, max|λ|)`.
pub(super) fn union_leg(name: &str, mut joint: Vec<f64>, mut parts: Vec<f64>, tol: f64) -> R<LegOutcome> {
    if joint.len() != parts.len() {
        return Err(MajorizationError::LengthMismatch {
            left: joint.len(),
            right: parts.len(),
        }
        .into());
    }
    joint.sort_by(|a, b| b.total_cmp(a));
    parts.sort_by(|a, b| b.total_cmp(a));
    let scale = joint.iter().chain(&parts).fold(1.0f64, |m, v| m.max(v.abs()));
    let margins = joint.iter().zip(&parts).map(|(a, b)| -(a - b).abs() / scale).collect();
    Ok(plain_leg(
        name,
        Relation::SpectrumUnionEquality,
        margins,
        tol,
        joint,
        parts,
    ))
}

/// Determinant equality asserted on its own, from the gaps of log legs.
pub(super) fn det_leg(name: &str, legs: &[&LegOutcome], tol_det: f64) -> LegOutcome {
    let gap = legs.iter().filter_map(|l| l.det_gap).fold(0.0, f64::max);
    LegOutcome {
        name: name.to_string(),
        relation: Relation::DetEquality,
        asserted: true,
        margins: vec![-gap],
        det_gap: Some(gap),
        holds: gap <= tol_det,
        min_margin: -gap,
        lhs: vec![],
        rhs: vec![],
    }
}

// ---- instances and outcomes ----

/// Everything needed to re-evaluate a check: selector, inputs and parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub id: String,
    pub trial: u64,
    pub dim: usize,
    pub inputs: Vec<ComplexMatrix>,
    pub params: Params,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputRecord {
    pub name: String,
    pub class: InputClass,
    pub dim: usize,
    /// SHA-256 over the little-endian bytes of the entries (re, im, row-major).
    pub sha256: String,
    pub matrix: ComplexMatrix,
}

pub fn matrix_digest(m: &ComplexMatrix) -> String {
    let mut h = Sha256::new();
    h.update((m.dim() as u64).to_le_bytes());
    for z in m.as_slice() {
        h.update(z.re.to_le_bytes());
        h.update(z.im.to_le_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: String,
    pub domain: String,
    pub trial: u64,
    pub dim: usize,
    pub inputs: Vec<InputRecord>,
    pub params: Params,
    pub legs: Vec<LegOutcome>,
    /// Every asserted leg holds at the configured tolerances.
    pub holds: bool,
    /// The minimal asserted margin is below `−strictness`.
    pub violation: bool,
    #[serde(with = "ext_f64")]
    pub min_margin: f64,
    /// Why the instance could not be decided (e.g. a non-settling limit).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// Wall time in seconds; omitted unless requested, to keep reports byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl CheckOutcome {
    pub fn instance(&self) -> Instance {
        Instance {
            id: self.id.clone(),
            trial: self.trial,
            dim: self.dim,
            inputs: self.inputs.iter().map(|r| r.matrix.clone()).collect(),
            params: self.params.clone(),
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }
}

fn prepare(class: InputClass, m: &ComplexMatrix, name: &str) -> Result<Prepared, RegistryError> {
    let bad = |why: String| RegistryError::DomainViolation(format!("input {name}: {why}"));
    match class {
        InputClass::Hermitian => Ok(Prepared::Hermitian(HermitianMatrix::new(m.clone())?)),
        InputClass::Psd | InputClass::Pd => {
            let p = PsdMatrix::from_matrix(m.clone()).map_err(|e| bad(e.to_string()))?;
            if class == InputClass::Pd && !p.is_definite() {
                return Err(bad("must be positive definite".into()));
            }
            Ok(Prepared::Psd(p))
        }
    }
}

/// Evaluates an instance through the registry.
pub fn evaluate(instance: &Instance, tol: &Tolerances) -> Result<CheckOutcome, RegistryError> {
    let sel = Selector::parse(&instance.id)?;
    let def = sel.def;
    if instance.inputs.len() != def.arity() {
        return Err(RegistryError::DomainViolation(format!(
            "{} takes {} inputs, got {}",
            def.id,
            def.arity(),
            instance.inputs.len()
        )));
    }
    sel.domain.validate(&instance.params)?;
    let mut prepared = Vec::with_capacity(def.arity());
    let mut records = Vec::with_capacity(def.arity());
    for (spec, m) in def.inputs.iter().zip(&instance.inputs) {
        let want = spec.dim_factor * instance.dim;
        if m.dim() != want {
            return Err(RegistryError::DomainViolation(format!(
                "input {} must be {want}x{want}, got {}x{}",
                spec.name,
                m.dim(),
                m.dim()
            )));
        }
        prepared.push(prepare(spec.class, m, spec.name)?);
        records.push(InputRecord {
            name: spec.name.to_string(),
            class: spec.class,
            dim: m.dim(),
            sha256: matrix_digest(m),
            matrix: m.clone(),
        });
    }
    let ctx = EvalCtx {
        inputs: prepared,
        params: &instance.params,
        tol: *tol,
    };
    let mut outcome = CheckOutcome {
        id: sel.label(),
        domain: sel.domain.name.to_string(),
        trial: instance.trial,
        dim: instance.dim,
        inputs: records,
        params: instance.params.clone(),
        legs: vec![],
        holds: false,
        violation: false,
        min_margin: f64::INFINITY,
        skipped: None,
        wall_time: None,
    };
    match (def.evaluator)(&ctx) {
        Ok(legs) => {
            let asserted: Vec<&LegOutcome> = legs.iter().filter(|l| l.asserted).collect();
            outcome.holds = asserted.iter().all(|l| l.holds);
            outcome.min_margin = asserted.iter().map(|l| l.min_margin).fold(f64::INFINITY, f64::min);
            outcome.violation = outcome.min_margin < -tol.strictness;
            outcome.legs = legs;
        }
        Err(EvalError::Mean(MeanError::NonConvergedLimit { last_change })) => {
            outcome.skipped = Some(format!(
                "semi-definite limit did not settle (last relative change {last_change:e})"
            ));
        }
        Err(e) => return Err(RegistryError::Numerical(format!("{}: {e}", def.id))),
    }
    Ok(outcome)
}
