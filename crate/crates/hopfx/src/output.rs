//! Report emission: a JSON document on stdout, a summary on stderr.

use std::time::Instant;

use hopfx_core::report::Report;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckJson {
    pub check: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Wall time of the stage that produced the check; only with --timings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ReportJson {
    pub command: String,
    pub holds: bool,
    pub checks: Vec<CheckJson>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub info: Map<String, Value>,
}

/// Collects checks stage by stage.
pub struct Collector {
    command: String,
    timings: bool,
    checks: Vec<CheckJson>,
    info: Map<String, Value>,
}

impl Collector {
    pub fn new(command: impl Into<String>, timings: bool) -> Self {
        Collector { command: command.into(), timings, checks: Vec::new(), info: Map::new() }
    }

    /// Run a stage and record its report.
    pub fn stage<T>(&mut self, f: impl FnOnce() -> (T, Report)) -> T {
        let t0 = Instant::now();
        let (out, rep) = f();
        self.add(rep, t0);
        out
    }

    pub fn add(&mut self, rep: Report, since: Instant) {
        let ms = self.timings.then(|| since.elapsed().as_secs_f64() * 1e3);
        for c in rep.checks {
            self.checks.push(CheckJson { check: c.name, holds: c.holds, witness: c.witness, elapsed_ms: ms });
        }
    }

    /// Record a single failed check (a construction that could not proceed).
    pub fn fail(&mut self, name: &str, witness: Vec<usize>, why: String) {
        self.checks.push(CheckJson { check: name.into(), holds: false, witness: Some(witness), elapsed_ms: None });
        self.info.insert(format!("{name}_error"), Value::String(why));
    }

    pub fn info(&mut self, key: &str, v: impl Into<Value>) {
        self.info.insert(key.into(), v.into());
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn finish(self) -> ReportJson {
        ReportJson {
            command: self.command,
            holds: self.checks.iter().all(|c| c.holds),
            checks: self.checks,
            info: self.info,
        }
    }
}

impl ReportJson {
    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.holds).count();
        let mut s = format!("hopfx {}: {ok}/{} checks hold", self.command, self.checks.len());
        for c in self.checks.iter().filter(|c| !c.holds) {
            s.push_str(&format!("\n  FAILED {} at {:?}", c.check, c.witness.as_deref().unwrap_or(&[])));
        }
        for (k, v) in &self.info {
            s.push_str(&format!("\n  {k}: {v}"));
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.holds {
            0
        } else {
            1
        }
    }
}
