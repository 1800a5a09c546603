//! Pass/fail records shared by the checkers and the `verify` suites.

use std::fmt;

use serde::Serialize;

/// The outcome of one named identity over a set of sampled instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub instances: usize,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, instances: usize) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            instances,
            failure: None,
        }
    }

    pub fn fail(name: impl Into<String>, instances: usize, failure: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            instances,
            failure: Some(failure.into()),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} instances)", self.name, self.instances)?;
        if let Some(why) = &self.failure {
            write!(f, ": {why}")?;
        }
        Ok(())
    }
}

/// A named list of results.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, r: CheckResult) {
        self.results.push(r);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for r in &self.results {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
