//! Versioned JSON report written by `verify`.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "lollipop-verify-report";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseOutcome {
    Pass,
    Fail,
    /// A search ran out of budget. Does not count as a failure.
    Undecided,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub params: Value,
    pub outcome: CaseOutcome,
    /// Witness or certificate backing the outcome. Graphs are graph6.
    pub evidence: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub undecided: usize,
}

impl Summary {
    pub fn of<'a>(cases: impl IntoIterator<Item = &'a CaseRecord>) -> Summary {
        let mut s = Summary::default();
        for c in cases {
            match c.outcome {
                CaseOutcome::Pass => s.pass += 1,
                CaseOutcome::Fail => s.fail += 1,
                CaseOutcome::Undecided => s.undecided += 1,
            }
        }
        s
    }

    pub fn add(&mut self, other: Summary) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.undecided += other.undecided;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub summary: Summary,
    pub cases: Vec<CaseRecord>,
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<CaseRecord>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            summary: Summary::of(&cases),
            cases,
        }
    }
}

/// Settings that influence the results, echoed into the report.
#[derive(Debug, Clone, Serialize)]
pub struct RunSettings {
    pub seed: u64,
    pub threads: usize,
    pub node_budget: Option<u64>,
    pub config: String,
    pub timing: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fingerprint {
    pub tool: &'static str,
    pub version: &'static str,
    pub os: &'static str,
    pub arch: &'static str,
    pub debug_assertions: bool,
}

impl Fingerprint {
    pub fn current() -> Self {
        Fingerprint {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            os: std::env::consts::OS,
            arch: std::env::consts::ARCH,
            debug_assertions: cfg!(debug_assertions),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub schema_version: u32,
    pub fingerprint: Fingerprint,
    pub settings: RunSettings,
    pub summary: Summary,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn new(settings: RunSettings, suites: Vec<SuiteReport>) -> Self {
        let mut summary = Summary::default();
        for s in &suites {
            summary.add(s.summary);
        }
        VerifyReport {
            schema: SCHEMA,
            schema_version: SCHEMA_VERSION,
            fingerprint: Fingerprint::current(),
            settings,
            summary,
            suites,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Runs `f` and attaches its wall time when `timing` is set.
pub fn timed(timing: bool, f: impl FnOnce() -> CaseRecord) -> CaseRecord {
    let start = Instant::now();
    let mut record = f();
    if timing {
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        record.wall_time_ms = Some((ms * 1000.0).round() / 1000.0);
    }
    record
}
