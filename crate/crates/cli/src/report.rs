//! Check results and the JSON report.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// First nonzero component or other evidence of failure.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl Check {
    pub fn new(name: impl Into<String>, outcome: Result<(), String>, elapsed_ms: u64) -> Self {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        Check { name: name.into(), status, witness, elapsed_ms }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Run `f` and stamp every check it returns with the elapsed time.
pub fn timed(f: impl FnOnce() -> Vec<(String, Result<(), String>)>) -> Vec<Check> {
    let start = Instant::now();
    let out = f();
    let ms = start.elapsed().as_millis() as u64;
    out.into_iter().map(|(name, r)| Check::new(name, r, ms)).collect()
}

/// `Ok` when equal, otherwise a witness showing both sides.
pub fn expect_eq<T: PartialEq + std::fmt::Display>(got: &T, want: &T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suites: Vec<String>,
    pub seed: u64,
    pub degree: u32,
    pub active: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suites: Vec<String>, seed: u64, degree: u32, active: Vec<String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report { schema: SCHEMA, suites, seed, degree, active, checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Copy with every elapsed time zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let _ = write!(out, "{tag}  {:<width$}  {:>6} ms", c.name, c.elapsed_ms);
            if let Some(w) = &c.witness {
                let _ = write!(out, "  {w}");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} passed, {} failed", self.checks.len(), self.checks.len() - failed, failed);
        out
    }
}
