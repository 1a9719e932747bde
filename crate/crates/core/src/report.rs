//! Machine-readable verification reports.

use serde::Serialize;
use serde_json::{Map, Value};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Assertion {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{s} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Output of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub n: usize,
    pub mode: String,
    pub assertions: Vec<Assertion>,
    pub artifacts: Map<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, n: usize, mode: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            n,
            mode: mode.into(),
            assertions: Vec::new(),
            artifacts: Map::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion::new(name, ok, detail));
    }

    pub fn extend(&mut self, items: impl IntoIterator<Item = Assertion>) {
        self.assertions.extend(items);
    }

    pub fn artifact(&mut self, key: impl Into<String>, value: Value) {
        self.artifacts.insert(key.into(), value);
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(Assertion::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!(
            "{} n={} mode={}: {} assertions, {} failed",
            self.command,
            self.n,
            self.mode,
            self.assertions.len(),
            failed
        )
    }
}

/// All assertions pass; otherwise the failing names.
pub fn all_pass(items: &[Assertion]) -> std::result::Result<(), Vec<String>> {
    let bad: Vec<String> = items.iter().filter(|a| !a.passed()).map(|a| a.to_string()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}
