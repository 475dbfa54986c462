//! End-to-end constructions of the four worked examples, each producing a
//! report of computed facts checked against their expected values.

mod ex41;
mod ex42;
mod ex43;
mod ex44;

use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

pub use ex41::run_example_41;
pub use ex42::{run_example_42, search_ex42_witness, Ex42Setup, Witness, WitnessSearch, STORED_WITNESS};
pub use ex43::run_example_43;
pub use ex44::run_example_44;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// Stated for the construction in the source material.
    Stated,
    /// Follows arithmetically from stated values.
    Derived,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckedFact {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub basis: Basis,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExampleReport {
    pub example: String,
    pub facts: Vec<CheckedFact>,
    /// Computed values reported without an expected value.
    pub info: Vec<(String, String)>,
    /// Set when a step could not be completed within its budget.
    pub incomplete: Option<String>,
    pub passed: bool,
    pub wall_time_ms: u128,
}

impl ExampleReport {
    fn new(example: &str) -> Self {
        ExampleReport {
            example: example.to_string(),
            facts: Vec::new(),
            info: Vec::new(),
            incomplete: None,
            passed: false,
            wall_time_ms: 0,
        }
    }

    pub(crate) fn check(&mut self, name: &str, expected: impl Display, actual: impl Display, basis: Basis) -> bool {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let passed = expected == actual;
        self.facts.push(CheckedFact {
            name: name.to_string(),
            expected,
            actual,
            basis,
            passed,
        });
        passed
    }

    pub(crate) fn check_true(&mut self, name: &str, actual: bool, basis: Basis) -> bool {
        self.check(name, true, actual, basis)
    }

    pub(crate) fn note(&mut self, name: &str, value: impl Display) {
        self.info.push((name.to_string(), value.to_string()));
    }

    fn finish(mut self, start: Instant) -> Self {
        self.passed = self.incomplete.is_none() && !self.facts.is_empty() && self.facts.iter().all(|f| f.passed);
        self.wall_time_ms = start.elapsed().as_millis();
        self
    }

    pub fn fact(&self, name: &str) -> Option<&CheckedFact> {
        self.facts.iter().find(|f| f.name == name)
    }

    pub fn failed_facts(&self) -> Vec<&CheckedFact> {
        self.facts.iter().filter(|f| !f.passed).collect()
    }
}

/// Runs `body`, converting an early error into a failing fact.
pub(crate) fn run_report<F>(example: &str, body: F) -> ExampleReport
where
    F: FnOnce(&mut ExampleReport) -> Result<(), String>,
{
    let start = Instant::now();
    let mut report = ExampleReport::new(example);
    if let Err(e) = body(&mut report) {
        report.check("construction completed", "ok", e, Basis::Derived);
    }
    report.finish(start)
}

pub(crate) fn err<E: Display>(e: E) -> String {
    e.to_string()
}
