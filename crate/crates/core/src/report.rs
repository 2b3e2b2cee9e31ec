//! Pass/fail records for verification suites.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One counterexample: the input in literal form and both rendered sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub status: Status,
    pub cases: u64,
    pub failures: Vec<Failure>,
    /// Wall time; zero unless timing was requested, so reports stay
    /// byte-identical across runs.
    pub millis: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Most counterexamples kept per suite; `cases` still counts every check.
pub const MAX_FAILURES: usize = 20;

/// Accumulates cases for one suite.
#[derive(Debug)]
pub struct Recorder {
    suite: String,
    cases: u64,
    failed: u64,
    failures: Vec<Failure>,
    started: Instant,
}

impl Recorder {
    pub fn new(suite: impl Into<String>) -> Self {
        Recorder {
            suite: suite.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Records one case; the closure renders the counterexample only on failure.
    pub fn check<F>(&mut self, ok: bool, describe: F)
    where
        F: FnOnce() -> (String, String, String),
    {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                let (input, lhs, rhs) = describe();
                self.failures.push(Failure { input, lhs, rhs });
            }
        }
    }

    /// Records a case whose evaluation may error: `Ok(None)` passes,
    /// `Ok(Some((lhs, rhs)))` is a mismatch, and an error is a failure too.
    pub fn check_outcome<E, F>(&mut self, outcome: Result<Option<(String, String)>, E>, input: F)
    where
        E: std::fmt::Display,
        F: FnOnce() -> String,
    {
        match outcome {
            Ok(None) => self.check(true, || unreachable!()),
            Ok(Some((lhs, rhs))) => self.check(false, || (input(), lhs, rhs)),
            Err(e) => self.check(false, || (input(), format!("error: {e}"), String::new())),
        }
    }

    pub fn fail(&mut self, input: String, lhs: String, rhs: String) {
        self.check(false, || (input, lhs, rhs));
    }

    pub fn failed(&self) -> u64 {
        self.failed
    }

    pub fn finish(self, timed: bool) -> VerificationReport {
        VerificationReport {
            suite: self.suite,
            status: if self.failed == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            cases: self.cases,
            failures: self.failures,
            millis: if timed {
                self.started.elapsed().as_millis() as u64
            } else {
                0
            },
        }
    }
}
