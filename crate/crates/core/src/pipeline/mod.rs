//! Theorem-level hypothesis checks, the admissible prime search and reports.

mod admissible;
mod conditions;
mod theorems;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::locsol::LocalEffort;

pub use admissible::{find_admissible_prime, AdmissiblePrime, AdmissiblePrimeQuery};
pub use conditions::{conditions_table, ConditionsTable};
pub use theorems::{check_theorem_a, check_theorem_b};

/// Version of the report layout.
pub const SCHEMA_VERSION: &str = "1.0.0";

pub const SHA_ASSUMPTION: &str =
    "The 2-primary part of the Tate-Shafarevich group of each Jacobian over the quadratic twist field is finite: assumed, not checkable";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    HypothesesHold,
    HypothesesFail,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: CheckOutcome,
    pub evidence: serde_json::Value,
}

impl Check {
    pub(crate) fn new(name: &str, outcome: CheckOutcome, evidence: serde_json::Value) -> Self {
        Check { name: name.to_string(), outcome, evidence }
    }

    pub(crate) fn from_bool(name: &str, ok: bool, evidence: serde_json::Value) -> Self {
        Self::new(name, if ok { CheckOutcome::Pass } else { CheckOutcome::Fail }, evidence)
    }

    pub(crate) fn error(name: &str, e: &crate::Error) -> Self {
        Self::new(name, CheckOutcome::Fail, serde_json::json!({ "error": e.to_string() }))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub schema_version: String,
    pub theorem: Theorem,
    pub inputs: serde_json::Value,
    pub checks: Vec<Check>,
    pub overall: Overall,
    pub assumptions: Vec<String>,
    /// Checks not run because an earlier one failed.
    pub skipped: Vec<String>,
    pub out_of_scope: Vec<String>,
    /// Wall-clock milliseconds per check; excluded from reproducibility comparisons.
    pub timings: BTreeMap<String, u64>,
}

impl TheoremReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Report JSON without the timing field, for reproducibility comparisons.
    pub fn without_timings(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("timings");
        v
    }
}

/// Effort knobs shared by both theorems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Effort {
    /// Prime budget for Galois group certification.
    pub prime_budget: u64,
    /// Prime budget for the λ class test.
    pub lambda_budget: u64,
    /// Whether to run the local solubility checks.
    pub local: bool,
    pub local_effort: LocalEffort,
    /// Run every check even after a failure.
    pub keep_going: bool,
}

impl Effort {
    pub fn low() -> Self {
        Effort {
            prime_budget: 2_000,
            lambda_budget: 500,
            local: true,
            local_effort: LocalEffort {
                padic_depth: 6,
                hensel_precision: 8,
                real_samples: 16,
                plane_trials: 100,
                exhaustive_limit: 20_000,
                point_height: 2,
                seed: 0,
            },
            keep_going: false,
        }
    }

    pub fn high() -> Self {
        Effort {
            prime_budget: 50_000,
            lambda_budget: 20_000,
            local: true,
            local_effort: LocalEffort {
                padic_depth: 20,
                hensel_precision: 40,
                real_samples: 512,
                plane_trials: 4_000,
                exhaustive_limit: 2_000_000,
                point_height: 4,
                seed: 0,
            },
            keep_going: false,
        }
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "low" => Some(Self::low()),
            "default" => Some(Self::default()),
            "high" => Some(Self::high()),
            _ => None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.local_effort.seed = seed;
        self
    }
}

impl Default for Effort {
    fn default() -> Self {
        Effort {
            prime_budget: crate::permgrp::DEFAULT_PRIME_BUDGET,
            lambda_budget: 5_000,
            local: true,
            local_effort: LocalEffort::default(),
            keep_going: false,
        }
    }
}

type CheckFn<'a> = Box<dyn Fn() -> Check + Send + Sync + 'a>;

/// Runs checks in declared order. Fail-fast stops at the first failure; with
/// `keep_going` all checks run in parallel and are folded in order.
pub(crate) fn run_checks(checks: Vec<(&str, CheckFn<'_>)>, keep_going: bool) -> (Vec<Check>, Vec<String>, BTreeMap<String, u64>) {
    let timed = |f: &CheckFn<'_>| {
        let t = Instant::now();
        let c = f();
        (c, t.elapsed().as_millis() as u64)
    };
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    let mut timings = BTreeMap::new();
    if keep_going {
        let results: Vec<(Check, u64)> = checks.par_iter().map(|(_, f)| timed(f)).collect();
        for (c, ms) in results {
            timings.insert(c.name.clone(), ms);
            out.push(c);
        }
    } else {
        let mut failed = false;
        for (name, f) in &checks {
            if failed {
                skipped.push(name.to_string());
                continue;
            }
            let (c, ms) = timed(f);
            failed = c.outcome == CheckOutcome::Fail;
            timings.insert(c.name.clone(), ms);
            out.push(c);
        }
    }
    (out, skipped, timings)
}

pub(crate) fn overall(checks: &[Check], skipped: &[String]) -> Overall {
    if checks.iter().any(|c| c.outcome == CheckOutcome::Fail) {
        Overall::HypothesesFail
    } else if checks.iter().any(|c| c.outcome == CheckOutcome::Undecided) || !skipped.is_empty() {
        Overall::Undecided
    } else {
        Overall::HypothesesHold
    }
}
