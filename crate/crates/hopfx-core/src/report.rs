//! Pass/fail records for identity checks.

use alloc::string::String;
use alloc::vec::Vec;

/// One checked identity. `witness` is present exactly when the check fails
/// and holds the first failing basis multi-index (empty if none applies).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Record a check from its first failure (`None` = holds).
    pub fn record(&mut self, name: &str, failure: Option<Vec<usize>>) {
        self.checks.push(Check { name: name.into(), holds: failure.is_none(), witness: failure });
    }

    pub fn pass(&mut self, name: &str, ok: bool) {
        self.record(name, if ok { None } else { Some(Vec::new()) });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }
}
