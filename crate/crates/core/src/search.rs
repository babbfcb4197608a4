//! Counterexample hunting for conjectures and known refutations: random
//! restarts, each followed by an annealed hill climb that minimizes the
//! worst asserted margin.
//!
//! Restart `i` draws from its own stream, so restarts run in parallel and
//! the reduction (lowest margin, ties to the lower restart index) does not
//! depend on scheduling.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::randgen::{perturb, GenSpec, StreamKey};
use crate::registry::{
    evaluate, sample_instance, CheckOutcome, InputClass, Instance, RegistryError, Selector, Status, Tolerances,
    SUITE_COND,
};
use crate::serde_ext::ext_f64;

/// Largest allowed gap between a report's margin and its re-evaluation.
pub const REPRODUCTION_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error("'{id}' has status {status:?}; only conjectures and refutations are searched")]
    WrongStatus { id: String, status: Status },
    #[error("bad search configuration: {0}")]
    BadConfig(String),
    #[error("re-evaluation gives margin {got:e}, report claims {expected:e}")]
    ReproductionMismatch { expected: f64, got: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Number of random restarts.
    pub budget: u64,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub hill_steps: u32,
    /// First perturbation size, relative to `‖M‖_F` and to parameter widths.
    pub initial_step: f64,
    /// Step multiplier after a non-improving move.
    pub anneal: f64,
    pub cond_target: f64,
    pub tol: Tolerances,
}

impl SearchConfig {
    pub fn new(budget: u64, dims: Vec<usize>, seed: u64) -> Self {
        Self {
            budget,
            dims,
            seed,
            hill_steps: 20,
            initial_step: 0.3,
            anneal: 0.7,
            cond_target: SUITE_COND,
            tol: Tolerances::default(),
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        self.tol.validate()?;
        let bad = |m: &str| Err(SearchError::BadConfig(m.to_string()));
        if self.budget == 0 {
            return bad("budget must be at least 1");
        }
        if self.dims.is_empty() || self.dims.contains(&0) {
            return bad("dims must be a non-empty list of positive sizes");
        }
        if !(self.initial_step > 0.0 && self.initial_step.is_finite()) {
            return bad("initial_step must be positive");
        }
        if !(self.anneal > 0.0 && self.anneal < 1.0) {
            return bad("anneal must lie in (0, 1)");
        }
        if !(self.cond_target >= 1.0 && self.cond_target.is_finite()) {
            return bad("cond_target must be finite and >= 1");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub restart: u64,
    #[serde(with = "ext_f64")]
    pub best_margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub target_id: String,
    pub config: SearchConfig,
    pub trials_used: u64,
    #[serde(with = "ext_f64")]
    pub best_margin: f64,
    pub best_restart: u64,
    pub best_instance: Instance,
    pub violation_found: bool,
    pub strictness: f64,
    /// Best margin so far, recorded whenever it improves and at the last restart.
    pub margin_trace: Vec<TracePoint>,
}

/// Minimal asserted margin of an instance; undecidable or failing
/// evaluations count as `+∞` so they are never preferred.
fn objective(inst: &Instance, tol: &Tolerances) -> f64 {
    match evaluate(inst, tol) {
        Ok(o) if !o.is_skipped() => o.min_margin,
        _ => f64::INFINITY,
    }
}

fn gen_spec(class: InputClass, n: usize, cond: f64) -> GenSpec {
    match class {
        InputClass::Hermitian => GenSpec::hermitian(n),
        InputClass::Pd | InputClass::Psd => GenSpec::pd(n).with_cond(cond),
    }
}

fn neighbour<R: Rng + ?Sized>(
    sel: &Selector,
    cur: &Instance,
    step: f64,
    cond: f64,
    rng: &mut R,
) -> Result<Option<Instance>, SearchError> {
    let mut next = cur.clone();
    for (m, spec) in next.inputs.iter_mut().zip(&sel.def.inputs) {
        let g = gen_spec(spec.class, m.dim(), cond);
        let magnitude = step * m.frobenius_norm();
        *m = perturb(m, &g, magnitude, rng).map_err(|e| RegistryError::Numerical(e.to_string()))?;
    }
    if !cur.params.is_empty() {
        let widths = sel.domain.widths(&cur.params);
        for (name, v) in next.params.iter_mut() {
            let z: f64 = rng.sample(StandardNormal);
            *v += step * widths.get(name).copied().unwrap_or(0.0) * z;
        }
        // A move that cannot be projected back (e.g. onto an excluded
        // corner) is rejected like a non-improving one.
        match sel.domain.project(&next.params) {
            Ok(p) => next.params = p,
            Err(RegistryError::EmptyDomain(_)) => return Ok(None),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Some(next))
}

/// One restart: sample (sweeping parameter boundaries half the time), then
/// hill-climb accepting strictly smaller margins.
fn restart(sel: &Selector, i: u64, config: &SearchConfig) -> Result<(f64, Instance), SearchError> {
    let mut rng = StreamKey::root(config.seed)
        .child("search")
        .child(&sel.label())
        .index(i)
        .rng();
    let dim = config.dims[rng.random_range(0..config.dims.len())];
    let boundary = rng.random_bool(0.5);
    let mut cur = sample_instance(sel, dim, i, &mut rng, config.cond_target, boundary)?;
    let mut best = objective(&cur, &config.tol);
    let mut step = config.initial_step;
    for _ in 0..config.hill_steps {
        let cand = neighbour(sel, &cur, step, config.cond_target, &mut rng)?;
        let m = cand.as_ref().map_or(f64::INFINITY, |c| objective(c, &config.tol));
        if let (true, Some(c)) = (m < best, cand) {
            best = m;
            cur = c;
            step = config.initial_step;
        } else {
            step *= config.anneal;
        }
    }
    Ok((best, cur))
}

pub fn search(target: &str, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    config.validate()?;
    let sel = Selector::parse(target)?;
    let status = sel.def.status;
    if !matches!(status, Status::Conjecture | Status::ExampleRefutation) {
        return Err(SearchError::WrongStatus {
            id: sel.def.id.to_string(),
            status,
        });
    }
    let results = (0..config.budget)
        .into_par_iter()
        .map(|i| restart(&sel, i, config))
        .collect::<Result<Vec<_>, _>>()?;

    let mut trace = Vec::new();
    let mut best_idx = 0usize;
    for (i, (m, _)) in results.iter().enumerate() {
        if i == 0 || *m < results[best_idx].0 {
            best_idx = i;
            trace.push(TracePoint {
                restart: i as u64,
                best_margin: *m,
            });
        }
    }
    let last = config.budget - 1;
    if trace.last().is_some_and(|t| t.restart != last) {
        trace.push(TracePoint {
            restart: last,
            best_margin: results[best_idx].0,
        });
    }
    let (best_margin, best_instance) = results.into_iter().nth(best_idx).expect("budget >= 1");
    Ok(SearchReport {
        target_id: sel.label(),
        config: config.clone(),
        trials_used: config.budget,
        best_margin,
        best_restart: best_idx as u64,
        best_instance,
        violation_found: best_margin < -config.tol.strictness,
        strictness: config.tol.strictness,
        margin_trace: trace,
    })
}

/// Re-evaluates the report's best instance through the registry and checks
/// that it reproduces the reported margin.
pub fn verify_instance(report: &SearchReport, tol: &Tolerances) -> Result<CheckOutcome, SearchError> {
    let outcome = evaluate(&report.best_instance, tol)?;
    let (expected, got) = (report.best_margin, outcome.min_margin);
    let same = expected == got || (expected - got).abs() <= REPRODUCTION_TOL;
    if !same {
        return Err(SearchError::ReproductionMismatch { expected, got });
    }
    Ok(outcome)
}
