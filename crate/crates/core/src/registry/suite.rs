//! Randomized suites: sample inputs and parameters for every selected entry,
//! evaluate in parallel, and summarize per selector.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{catalog, evaluate, CheckOutcome, Grade, InputClass, Instance, RegistryError, Selector, Tolerances};
use crate::randgen::{random_matrix, GenError, GenSpec, StreamKey};
use crate::serde_ext::ext_f64;

/// Condition-number target for suite and search samples.
pub const SUITE_COND: f64 = 1e2;

/// Every tenth trial of a semi-definite entry makes one input singular.
const PROBE_PERIOD: u64 = 10;

/// Tolerated share of skipped (undecided) instances per selector.
pub const MAX_SKIP_FRACTION: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub trials: u64,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub tol: Tolerances,
    pub cond_target: f64,
    /// Record per-instance wall time (makes reports run-dependent).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub record_wall_time: bool,
}

impl SuiteConfig {
    pub fn new(trials: u64, dims: Vec<usize>, seed: u64) -> Self {
        Self {
            trials,
            dims,
            seed,
            tol: Tolerances::default(),
            cond_target: SUITE_COND,
            record_wall_time: false,
        }
    }

    pub fn validate(&self) -> Result<(), RegistryError> {
        self.tol.validate()?;
        if self.trials == 0 {
            return Err(RegistryError::DomainViolation("trials must be at least 1".into()));
        }
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(RegistryError::DomainViolation(
                "dims must be a non-empty list of positive sizes".into(),
            ));
        }
        if !(self.cond_target >= 1.0 && self.cond_target.is_finite()) {
            return Err(RegistryError::DomainViolation(format!(
                "cond_target must be finite and >= 1, got {}",
                self.cond_target
            )));
        }
        Ok(())
    }
}

/// What a selector's domain grade promises about the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Every decided instance holds.
    Hold,
    /// No strict violation is expected; one would be news.
    Consistent,
    /// At least one strict violation must be found.
    Refute,
    /// Report only.
    Explore,
}

impl From<Grade> for Expectation {
    fn from(g: Grade) -> Self {
        match g {
            Grade::Proven => Expectation::Hold,
            Grade::Conjectural => Expectation::Consistent,
            Grade::Refutation => Expectation::Refute,
            Grade::Exploratory => Expectation::Explore,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub id: String,
    pub expectation: Expectation,
    pub trials: u64,
    /// Decided instances whose asserted legs do not hold at `tol`.
    pub failures: u64,
    pub skipped: u64,
    /// Instances with a margin below `−strictness`.
    pub violations: u64,
    #[serde(with = "ext_f64")]
    pub worst_margin: f64,
    /// `ok`, `refuted`, `explored`, `violated`, `conjecture-violated`,
    /// `refutation-missing` or `skips-exceeded`.
    pub status: String,
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub catalog_version: String,
    pub outcomes: Vec<CheckOutcome>,
    pub summary: Vec<SummaryRow>,
}

impl SuiteReport {
    pub fn all_expected(&self) -> bool {
        self.summary.iter().all(|r| r.expected)
    }
}

/// Expands `all-theorems`, `all-refutations` and `all-conjectures` and parses
/// every other item as a selector. Duplicates keep their first position.
pub fn expand_ids<S: AsRef<str>>(items: &[S]) -> Result<Vec<Selector>, RegistryError> {
    let mut out: Vec<Selector> = Vec::new();
    let mut push = |s: Selector| {
        if !out.iter().any(|o| o.label() == s.label()) {
            out.push(s);
        }
    };
    for item in items {
        let item = item.as_ref().trim();
        let group: Option<fn(&super::Status) -> bool> = match item {
            "all-theorems" => Some(|s| s.is_theorem_like()),
            "all-refutations" => Some(|s| *s == super::Status::ExampleRefutation),
            "all-conjectures" => Some(|s| *s == super::Status::Conjecture),
            _ => None,
        };
        match group {
            Some(pred) => catalog()
                .iter()
                .filter(|d| pred(&d.status))
                .for_each(|d| push(Selector::parse(d.id).expect("catalog ids parse"))),
            None => push(Selector::parse(item)?),
        }
    }
    Ok(out)
}

fn gen_err(e: GenError) -> RegistryError {
    RegistryError::Numerical(e.to_string())
}

/// Samples the inputs and parameters of one trial from `rng`.
///
/// `Psd` inputs of probing entries become rank-deficient on every tenth
/// trial, cycling through the semi-definite inputs.
pub fn sample_instance<R: Rng + ?Sized>(
    sel: &Selector,
    dim: usize,
    trial: u64,
    rng: &mut R,
    cond_target: f64,
    boundary: bool,
) -> Result<Instance, RegistryError> {
    let def = sel.def;
    let psd_slots: Vec<usize> = (0..def.arity())
        .filter(|&i| def.inputs[i].class == InputClass::Psd)
        .collect();
    let probe = (def.psd_probe && !psd_slots.is_empty() && trial % PROBE_PERIOD == PROBE_PERIOD - 1)
        .then(|| psd_slots[((trial / PROBE_PERIOD) as usize) % psd_slots.len()]);
    let mut inputs = Vec::with_capacity(def.arity());
    for (i, spec) in def.inputs.iter().enumerate() {
        let n = dim * spec.dim_factor;
        let g = match spec.class {
            InputClass::Hermitian => GenSpec::hermitian(n),
            _ if probe == Some(i) && n > 1 => GenSpec::psd(n, n - 1),
            _ => GenSpec::pd(n),
        };
        inputs.push(random_matrix(&g.with_cond(cond_target), rng).map_err(gen_err)?);
    }
    let params = sel.domain.sample(rng, boundary)?;
    Ok(Instance {
        id: sel.label(),
        trial,
        dim,
        inputs,
        params,
    })
}

fn trial_stream(seed: u64, sel: &Selector, dim: usize, trial: u64) -> StreamKey {
    StreamKey::root(seed).child(&sel.label()).index(dim as u64).index(trial)
}

/// Summary row of one selector's outcomes.
pub fn summarize(sel: &Selector, outcomes: &[CheckOutcome], tol: &Tolerances) -> SummaryRow {
    let expectation = Expectation::from(sel.domain.grade);
    let trials = outcomes.len() as u64;
    let skipped = outcomes.iter().filter(|o| o.is_skipped()).count() as u64;
    let decided = || outcomes.iter().filter(|o| !o.is_skipped());
    let failures = decided().filter(|o| !o.holds).count() as u64;
    let violations = decided().filter(|o| o.min_margin < -tol.strictness).count() as u64;
    let worst_margin = decided().map(|o| o.min_margin).fold(f64::INFINITY, f64::min);
    let skips_ok = (skipped as f64) <= MAX_SKIP_FRACTION * trials as f64;
    let status = match expectation {
        Expectation::Hold if failures > 0 => "violated",
        Expectation::Hold if !skips_ok => "skips-exceeded",
        Expectation::Hold => "ok",
        Expectation::Consistent if violations > 0 => "conjecture-violated",
        Expectation::Consistent => "ok",
        Expectation::Refute if violations > 0 => "refuted",
        Expectation::Refute => "refutation-missing",
        Expectation::Explore => "explored",
    };
    SummaryRow {
        id: sel.label(),
        expectation,
        trials,
        failures,
        skipped,
        violations,
        worst_margin,
        status: status.to_string(),
        expected: matches!(status, "ok" | "refuted" | "explored"),
    }
}

/// Runs `config.trials` trials per dimension for every selector. Outcomes are
/// ordered by (selector, dimension, trial) regardless of scheduling.
pub fn run_suite(selectors: &[Selector], config: &SuiteConfig) -> Result<SuiteReport, RegistryError> {
    config.validate()?;
    let jobs: Vec<(usize, usize, u64)> = selectors
        .iter()
        .enumerate()
        .flat_map(|(s, _)| {
            config
                .dims
                .iter()
                .flat_map(move |&d| (0..config.trials).map(move |t| (s, d, t)))
        })
        .collect();
    let results: Vec<Result<CheckOutcome, RegistryError>> = jobs
        .par_iter()
        .map(|&(s, dim, trial)| {
            let sel = &selectors[s];
            let mut rng = trial_stream(config.seed, sel, dim, trial).rng();
            let inst = sample_instance(sel, dim, trial, &mut rng, config.cond_target, false)?;
            let start = std::time::Instant::now();
            let mut outcome = evaluate(&inst, &config.tol)?;
            if config.record_wall_time {
                outcome.wall_time = Some(start.elapsed().as_secs_f64());
            }
            Ok(outcome)
        })
        .collect();
    let outcomes = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let per = config.dims.len() * config.trials as usize;
    let summary = selectors
        .iter()
        .zip(outcomes.chunks(per.max(1)))
        .map(|(sel, chunk)| summarize(sel, chunk, &config.tol))
        .collect();
    Ok(SuiteReport {
        config: config.clone(),
        catalog_version: super::CATALOG_VERSION.to_string(),
        outcomes,
        summary,
    })
}
