//! Parameter domains: ordered rules whose intervals may depend on earlier
//! parameters, grouped into alternative branches, plus an optional global
//! constraint.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use super::RegistryError;

pub type Params = BTreeMap<String, f64>;

type IntervalFn = Box<dyn Fn(&Params) -> (f64, f64) + Send + Sync>;
type ConstraintFn = Box<dyn Fn(&Params) -> bool + Send + Sync>;

/// How much a claim is backed on a given domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    /// Proven: every instance must hold.
    Proven,
    /// Open: violations are newsworthy, none are expected.
    Conjectural,
    /// Known false: the suite must find a strict violation.
    Refutation,
    /// Outside every stated hypothesis: outcomes are reported, never judged.
    Exploratory,
}

pub enum Range {
    Fixed(f64),
    Interval(IntervalFn),
}

#[derive(Serialize)]
pub struct ParamRule {
    pub name: &'static str,
    pub range: &'static str,
    #[serde(skip)]
    pub rule: Range,
}

#[derive(Serialize)]
pub struct Branch {
    pub label: &'static str,
    pub params: Vec<ParamRule>,
}

#[derive(Serialize)]
pub struct Domain {
    pub name: &'static str,
    pub grade: Grade,
    pub note: &'static str,
    pub branches: Vec<Branch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraint: Option<&'static str>,
    #[serde(skip)]
    pub check: Option<ConstraintFn>,
}

const MAX_SAMPLE_ATTEMPTS: usize = 1000;

pub fn fixed(name: &'static str, value: f64, range: &'static str) -> ParamRule {
    ParamRule {
        name,
        range,
        rule: Range::Fixed(value),
    }
}

pub fn between(name: &'static str, lo: f64, hi: f64, range: &'static str) -> ParamRule {
    ParamRule {
        name,
        range,
        rule: Range::Interval(Box::new(move |_| (lo, hi))),
    }
}

pub fn coupled(
    name: &'static str,
    range: &'static str,
    f: impl Fn(&Params) -> (f64, f64) + Send + Sync + 'static,
) -> ParamRule {
    ParamRule {
        name,
        range,
        rule: Range::Interval(Box::new(f)),
    }
}

pub fn branch(label: &'static str, params: Vec<ParamRule>) -> Branch {
    Branch { label, params }
}

fn slack(lo: f64, hi: f64) -> f64 {
    1e-12 * lo.abs().max(hi.abs()).max(1.0)
}

impl ParamRule {
    pub fn interval(&self, p: &Params) -> (f64, f64) {
        match &self.rule {
            Range::Fixed(v) => (*v, *v),
            Range::Interval(f) => f(p),
        }
    }

    fn contains(&self, p: &Params, v: f64) -> bool {
        let (lo, hi) = self.interval(p);
        let d = slack(lo, hi);
        v.is_finite() && v >= lo - d && v <= hi + d
    }
}

impl std::fmt::Debug for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Domain")
            .field("name", &self.name)
            .field("grade", &self.grade)
            .finish_non_exhaustive()
    }
}

impl Domain {
    pub fn new(name: &'static str, grade: Grade, note: &'static str, branches: Vec<Branch>) -> Self {
        Self {
            name,
            grade,
            note,
            branches,
            constraint: None,
            check: None,
        }
    }

    pub fn with_constraint(mut self, text: &'static str, f: impl Fn(&Params) -> bool + Send + Sync + 'static) -> Self {
        self.constraint = Some(text);
        self.check = Some(Box::new(f));
        self
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        self.branches
            .first()
            .map(|b| b.params.iter().map(|r| r.name).collect())
            .unwrap_or_default()
    }

    fn constraint_ok(&self, p: &Params) -> bool {
        self.check.as_ref().is_none_or(|f| f(p))
    }

    fn branch_contains(&self, b: &Branch, p: &Params) -> bool {
        p.len() == b.params.len()
            && b.params
                .iter()
                .all(|r| p.get(r.name).is_some_and(|&v| r.contains(p, v)))
            && self.constraint_ok(p)
    }

    /// Index of the first branch containing `p`, if any.
    pub fn branch_of(&self, p: &Params) -> Option<usize> {
        self.branches.iter().position(|b| self.branch_contains(b, p))
    }

    pub fn validate(&self, p: &Params) -> Result<(), RegistryError> {
        if self.branches.is_empty() && p.is_empty() {
            return Ok(());
        }
        match self.branch_of(p) {
            Some(_) => Ok(()),
            None => Err(RegistryError::DomainViolation(format!(
                "parameters {p:?} lie outside domain '{}'",
                self.name
            ))),
        }
    }

    /// Uniform sample inside the coupled constraints. With `boundary`, each
    /// interval rule lands on one of its endpoints with probability 1/2.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, boundary: bool) -> Result<Params, RegistryError> {
        if self.branches.is_empty() {
            return Ok(Params::new());
        }
        for _ in 0..MAX_SAMPLE_ATTEMPTS {
            let b = &self.branches[rng.random_range(0..self.branches.len())];
            let mut p = Params::new();
            let mut ok = true;
            for rule in &b.params {
                let v = match &rule.rule {
                    Range::Fixed(v) => *v,
                    Range::Interval(f) => {
                        let (lo, hi) = f(&p);
                        if !(lo <= hi) {
                            ok = false;
                            break;
                        }
                        if boundary && rng.random_bool(0.5) {
                            if rng.random_bool(0.5) {
                                lo
                            } else {
                                hi
                            }
                        } else if lo == hi {
                            lo
                        } else {
                            rng.random_range(lo..=hi)
                        }
                    }
                };
                p.insert(rule.name.to_string(), v);
            }
            if ok && self.constraint_ok(&p) {
                return Ok(p);
            }
        }
        Err(RegistryError::EmptyDomain(self.name.to_string()))
    }

    /// Clamps `p` into the domain: each branch is tried by clamping rules in
    /// order; the admissible branch needing the smallest change wins.
    pub fn project(&self, p: &Params) -> Result<Params, RegistryError> {
        if self.branches.is_empty() {
            return Ok(Params::new());
        }
        let mut best: Option<(f64, Params)> = None;
        for b in &self.branches {
            let mut q = Params::new();
            let mut change = 0.0;
            let mut ok = true;
            for rule in &b.params {
                let (lo, hi) = rule.interval(&q);
                if !(lo <= hi) {
                    ok = false;
                    break;
                }
                let orig = p.get(rule.name).copied().unwrap_or((lo + hi) / 2.0);
                let v = orig.clamp(lo, hi);
                change += (v - orig).abs();
                q.insert(rule.name.to_string(), v);
            }
            if ok && self.constraint_ok(&q) && best.as_ref().is_none_or(|(c, _)| change < *c) {
                best = Some((change, q));
            }
        }
        best.map(|(_, q)| q)
            .ok_or_else(|| RegistryError::EmptyDomain(self.name.to_string()))
    }

    /// Interval widths of the branch containing `p` (0 for fixed rules).
    pub fn widths(&self, p: &Params) -> BTreeMap<String, f64> {
        let idx = self.branch_of(p).unwrap_or(0);
        self.branches
            .get(idx)
            .map(|b| {
                b.params
                    .iter()
                    .map(|r| {
                        let (lo, hi) = r.interval(p);
                        (r.name.to_string(), (hi - lo).max(0.0))
                    })
                    .collect()
            })
            .unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randgen::StreamKey;

    fn coupled_domain() -> Domain {
        Domain::new(
            "test",
            Grade::Proven,
            "",
            vec![
                branch(
                    "positive",
                    vec![
                        between("r", 0.0, 2.0, "[0, 2]"),
                        coupled("t", "[0, r]", |p| (0.0, p["r"])),
                    ],
                ),
                branch(
                    "negative",
                    vec![
                        between("r", -1.0, 0.0, "[-1, 0]"),
                        coupled("t", "[r, 0]", |p| (p["r"], 0.0)),
                    ],
                ),
            ],
        )
        .with_constraint("|r| >= 0.1", |p| p["r"].abs() >= 0.1)
    }

    #[test]
    fn samples_validate() {
        let d = coupled_domain();
        let mut rng = StreamKey::root(1).rng();
        for boundary in [false, true] {
            for _ in 0..500 {
                let p = d.sample(&mut rng, boundary).unwrap();
                d.validate(&p).unwrap();
            }
        }
    }

    #[test]
    fn rejects_outside_points() {
        let d = coupled_domain();
        let p: Params = [("r".to_string(), 1.0), ("t".to_string(), 1.5)].into();
        assert!(d.validate(&p).is_err());
        let p: Params = [("r".to_string(), 0.05), ("t".to_string(), 0.0)].into();
        assert!(d.validate(&p).is_err());
        let p: Params = [("r".to_string(), 1.0)].into();
        assert!(d.validate(&p).is_err());
    }

    #[test]
    fn projection_lands_inside() {
        let d = coupled_domain();
        let p: Params = [("r".to_string(), 1.0), ("t".to_string(), 1.5)].into();
        let q = d.project(&p).unwrap();
        assert_eq!(q["t"], 1.0);
        let p: Params = [("r".to_string(), -0.5), ("t".to_string(), 0.3)].into();
        let q = d.project(&p).unwrap();
        assert_eq!(q["r"], -0.5);
        assert_eq!(q["t"], 0.0);
    }

    #[test]
    fn empty_domain_reported() {
        let d = Domain::new(
            "empty",
            Grade::Proven,
            "",
            vec![branch("x", vec![between("x", 1.0, 0.0, "")])],
        );
        assert!(matches!(
            d.sample(&mut StreamKey::root(0).rng(), false),
            Err(RegistryError::EmptyDomain(_))
        ));
    }
}
