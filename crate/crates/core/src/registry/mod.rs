//! Every inequality of the lab as a parameterized, checkable predicate.
//!
//! An entry names its inputs and their positivity class, one or more
//! parameter domains (each graded proven / conjectural / refutation), and an
//! evaluator producing one or more *legs*: a relation between a left and a
//! right spectrum (or norm vector, or matrix) with per-index margins.
//! Entries are addressed by selectors `ID` or `ID:domain`.

mod catalog;
mod domain;
mod eval;
mod suite;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::LinalgError;
use crate::norms::SchattenP;

pub use catalog::catalog;
pub use domain::{Branch, Domain, Grade, ParamRule, Params};
pub use eval::{evaluate, CheckOutcome, EvalError, InputRecord, Instance, LegOutcome, Tolerances};
pub use suite::{
    expand_ids, run_suite, sample_instance, summarize, Expectation, SuiteConfig, SuiteReport, SummaryRow,
    MAX_SKIP_FRACTION, SUITE_COND,
};

/// Version of the compiled-in catalog; bumped whenever an entry changes.
pub const CATALOG_VERSION: &str = "1.0.0";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RegistryError {
    #[error("unknown registry id '{0}'")]
    UnknownId(String),
    #[error("entry '{id}' has no domain named '{domain}'")]
    UnknownDomain { id: String, domain: String },
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("domain '{0}' admits no parameters")]
    EmptyDomain(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl From<LinalgError> for RegistryError {
    fn from(e: LinalgError) -> Self {
        RegistryError::Numerical(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Theorem,
    Lemma,
    Corollary,
    Proposition,
    ExampleRefutation,
    Conjecture,
    /// Holds on its asserted leg; a further leg depends on an open conjecture.
    Conditional,
}

impl Status {
    pub fn is_theorem_like(&self) -> bool {
        matches!(
            self,
            Status::Theorem | Status::Lemma | Status::Corollary | Status::Proposition | Status::Conditional
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputClass {
    /// Positive definite.
    Pd,
    /// Positive semi-definite (suite probes include rank-deficient samples).
    Psd,
    Hermitian,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSpec {
    pub name: &'static str,
    pub class: InputClass,
    /// The input is `dim_factor·n × dim_factor·n` for trial dimension `n`.
    pub dim_factor: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    WeakLog,
    Log,
    ReverseLog,
    LoewnerLeq,
    EigenvalueWiseLeq,
    SingularValueWiseLeq,
    NormLeq(Vec<SchattenP>),
    FanDominance,
    SpectrumUnionEquality,
    /// Equality of full log-products (`|Σ log x − Σ log y| ≤ tol_det`).
    DetEquality,
}

#[derive(Debug, Clone, Serialize)]
pub struct LegInfo {
    pub name: &'static str,
    pub relation: Relation,
    pub lhs: &'static str,
    pub rhs: &'static str,
    /// Unasserted legs are reported but never count as failures.
    pub asserted: bool,
}

pub type Evaluator = fn(&eval::EvalCtx) -> Result<Vec<LegOutcome>, EvalError>;

#[derive(Serialize)]
pub struct InequalityDefinition {
    pub id: &'static str,
    pub anchor: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub inputs: Vec<InputSpec>,
    pub relation: Relation,
    pub legs: Vec<LegInfo>,
    pub domains: Vec<Domain>,
    /// Whether the suite mixes in rank-deficient samples for `Psd` inputs.
    pub psd_probe: bool,
    #[serde(skip)]
    pub evaluator: Evaluator,
}

impl std::fmt::Debug for InequalityDefinition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InequalityDefinition")
            .field("id", &self.id)
            .field("status", &self.status)
            .finish_non_exhaustive()
    }
}

impl InequalityDefinition {
    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn domain(&self, name: &str) -> Result<&Domain, RegistryError> {
        self.domains
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| RegistryError::UnknownDomain {
                id: self.id.to_string(),
                domain: name.to_string(),
            })
    }

    pub fn default_domain(&self) -> &Domain {
        &self.domains[0]
    }
}

pub fn lookup(id: &str) -> Result<&'static InequalityDefinition, RegistryError> {
    catalog()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| RegistryError::UnknownId(id.to_string()))
}

/// A parsed `ID[:domain]` selector.
#[derive(Debug, Clone, Copy)]
pub struct Selector {
    pub def: &'static InequalityDefinition,
    pub domain: &'static Domain,
}

impl Selector {
    pub fn parse(text: &str) -> Result<Self, RegistryError> {
        let (id, dom) = match text.split_once(':') {
            Some((id, dom)) => (id, Some(dom)),
            None => (text, None),
        };
        let def = lookup(id)?;
        let domain = match dom {
            Some(name) => def.domain(name)?,
            None => def.default_domain(),
        };
        Ok(Self { def, domain })
    }

    /// Canonical text: the bare id for the default domain, `ID:domain` otherwise.
    pub fn label(&self) -> String {
        if std::ptr::eq(self.domain, self.def.default_domain()) {
            self.def.id.to_string()
        } else {
            format!("{}:{}", self.def.id, self.domain.name)
        }
    }
}

/// The catalog as JSON.
pub fn dump() -> serde_json::Value {
    serde_json::json!({
        "catalog_version": CATALOG_VERSION,
        "entries": catalog(),
    })
}
