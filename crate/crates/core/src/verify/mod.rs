//! Window-quantified property suites.
//!
//! Every universally quantified statement is checked over a configured
//! window of small groups. A check either enumerates every case
//! ([`Coverage::Exhaustive`]) or draws cases from a seeded generator
//! ([`Coverage::Sampled`]); the report records which, together with the
//! seed, so identical configurations give byte-identical reports.

mod biset;
mod category;
mod green;
mod orthogonal;
mod star;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{builtin_catalog, Catalog, FiniteGroup};
use crate::scalar::Ring;

/// At most this many failing cases are recorded per check.
const MAX_WITNESSES: usize = 3;

/// Names of the default window groups.
pub const DEFAULT_WINDOW: [&str; 6] = ["1", "C2", "C3", "C4", "V4", "S3"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    BisetIdentities,
    GreenAxioms,
    Category,
    Star,
    Orthogonal,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::BisetIdentities,
        Suite::GreenAxioms,
        Suite::Category,
        Suite::Star,
        Suite::Orthogonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BisetIdentities => "biset-identities",
            Suite::GreenAxioms => "green-axioms",
            Suite::Category => "category",
            Suite::Star => "star",
            Suite::Orthogonal => "orthogonal",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.parse().map(|x| vec![x])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Deliberate faults, for exercising failure reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Replace the Burnside star by one negated on a basis vector.
    CorruptStar,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub window: Vec<FiniteGroup>,
    pub ring: Ring,
    /// Box size for bounded orthogonal searches.
    pub bound: u32,
    /// Largest group order used in the four-factor identities.
    pub max_order: usize,
    /// Largest `|H×G|` for hom-sets in category-level checks.
    pub hom_order: usize,
    pub seed: u64,
    /// Cases drawn by each sampled check.
    pub samples: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig::with_catalog(builtin_catalog(), &DEFAULT_WINDOW).expect("builtin window")
    }
}

impl VerifyConfig {
    pub fn with_catalog(catalog: &Catalog, window: &[&str]) -> Result<Self> {
        let window = window.iter().map(|n| catalog.require(n)).collect::<Result<_>>()?;
        Ok(VerifyConfig {
            window,
            ring: Ring::Integers,
            bound: 2,
            max_order: 3,
            hom_order: 4,
            seed: 0,
            samples: 24,
            fault: None,
        })
    }

    pub(crate) fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// Window groups of order at most `n`.
    pub(crate) fn groups_upto(&self, n: usize) -> Vec<FiniteGroup> {
        self.window.iter().filter(|g| g.order() <= n).cloned().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

/// Outcome of one named property over its cases.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub coverage: Coverage,
    pub cases: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "coverage": match self.coverage {
                Coverage::Exhaustive => "exhaustive",
                Coverage::Sampled => "sampled",
            },
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed(),
            "witnesses": self.witnesses,
        })
    }
}

/// Accumulates cases of one check.
pub(crate) struct Tally {
    result: CheckResult,
}

impl Tally {
    pub(crate) fn new(name: &str, coverage: Coverage) -> Self {
        Tally {
            result: CheckResult {
                name: name.to_string(),
                coverage,
                cases: 0,
                failures: 0,
                witnesses: Vec::new(),
            },
        }
    }

    /// Records one case; `witness` is only built on failure.
    pub(crate) fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.fail(witness());
        }
    }

    /// A case whose evaluation may error; errors count as failures.
    pub(crate) fn try_case(&mut self, outcome: Result<bool>, witness: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.case(ok, witness),
            Err(e) => {
                self.result.cases += 1;
                self.fail(format!("{}: {e}", witness()));
            }
        }
    }

    /// A case that reports its own witness.
    pub(crate) fn witness_case(&mut self, outcome: Result<Option<String>>) {
        self.result.cases += 1;
        match outcome {
            Ok(None) => {}
            Ok(Some(w)) => self.fail(w),
            Err(e) => self.fail(format!("error: {e}")),
        }
    }

    /// `cases` cases with the given failures already found.
    pub(crate) fn bulk(&mut self, cases: usize, failures: Vec<String>) {
        self.result.cases += cases.max(failures.len());
        for w in failures {
            self.fail(w);
        }
    }

    fn fail(&mut self, w: String) {
        self.result.failures += 1;
        if self.result.witnesses.len() < MAX_WITNESSES {
            self.result.witnesses.push(w);
        }
    }

    pub(crate) fn finish(self) -> CheckResult {
        self.result
    }
}

pub(crate) fn attempt(f: impl FnOnce() -> Result<bool>) -> Result<bool> {
    f()
}

/// Runs a check body; an error escaping the body becomes a failed case.
pub(crate) fn run_check(
    out: &mut Vec<CheckResult>,
    name: &str,
    coverage: Coverage,
    body: impl FnOnce(&mut Tally) -> Result<()>,
) {
    let mut t = Tally::new(name, coverage);
    if let Err(e) = body(&mut t) {
        t.result.cases += 1;
        t.fail(format!("error: {e}"));
    }
    out.push(t.finish());
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub seed: u64,
    pub window: Vec<String>,
    pub ring: Ring,
    pub bound: u32,
    pub max_order: usize,
    pub hom_order: usize,
    pub samples: usize,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn checks(&self) -> impl Iterator<Item = (Suite, &CheckResult)> {
        self.suites
            .iter()
            .flat_map(|s| s.checks.iter().map(move |c| (s.suite, c)))
    }

    pub fn to_json(&self) -> Value {
        let suites: Vec<Value> = self
            .suites
            .iter()
            .map(|s| {
                json!({
                    "suite": s.suite.name(),
                    "passed": s.passed(),
                    "checks": s.checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "seed": self.seed,
            "window": self.window,
            "ring": self.ring.to_string(),
            "bound": self.bound,
            "maxOrder": self.max_order,
            "homOrder": self.hom_order,
            "samples": self.samples,
            "passed": self.passed(),
            "suites": suites,
        })
    }

    /// One line per check: `PASS|FAIL suite/name (coverage, cases)`, with
    /// the first witness of each failure.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for (suite, c) in self.checks() {
            let cov = match c.coverage {
                Coverage::Exhaustive => "exhaustive",
                Coverage::Sampled => "sampled",
            };
            let status = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {suite}/{} ({cov}, {} cases)\n", c.name, c.cases));
            if let Some(w) = c.witnesses.first() {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
        out
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let checks = match suite {
        Suite::BisetIdentities => biset::run(cfg),
        Suite::GreenAxioms => green::run(cfg),
        Suite::Category => category::run(cfg),
        Suite::Star => star::run(cfg),
        Suite::Orthogonal => orthogonal::run(cfg),
    };
    SuiteReport { suite, checks }
}

pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Report {
    Report {
        seed: cfg.seed,
        window: cfg.window.iter().map(|g| g.name().to_string()).collect(),
        ring: cfg.ring,
        bound: cfg.bound,
        max_order: cfg.max_order,
        hom_order: cfg.hom_order,
        samples: cfg.samples,
        suites: suites.iter().map(|&s| run_suite(s, cfg)).collect(),
    }
}

#[cfg(test)]
mod tests;
