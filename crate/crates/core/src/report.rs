//! Check reports shared by every verifier in the crate.
//!
//! Reports are deterministic: failures are collected in lexicographic
//! basis-index order and capped, with the total count kept separately.
//! Tuples whose evaluation touches a truncation overflow are skipped and
//! counted, never decided.

use serde::{Deserialize, Serialize};

/// Cap on detailed failures kept in a report; the count keeps the truth.
pub const MAX_RECORDED_FAILURES: usize = 16;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Failure {
    /// Basis labels of the tuple where the identity broke.
    pub at: Vec<String>,
    /// The nonzero difference (or a short description of it).
    pub diff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub pass: bool,
    /// Number of tuples actually decided.
    pub checked: usize,
    /// Tuples skipped because evaluation left the truncation window.
    pub skipped: usize,
    /// Total failing tuples (may exceed `failures.len()`).
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    /// Free-form notes (degeneracy warnings, recorded-only statuses).
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(id: impl Into<String>) -> Self {
        CheckReport {
            id: id.into(),
            pass: true,
            checked: 0,
            skipped: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn record_pass(&mut self) {
        self.checked += 1;
    }

    pub fn record_skip(&mut self) {
        self.skipped += 1;
    }

    pub fn record_failure(&mut self, at: Vec<String>, diff: String) {
        self.checked += 1;
        self.failure_count += 1;
        self.pass = false;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure { at, diff });
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Folds a sub-report in, prefixing its id to failure locations.
    pub fn absorb(&mut self, sub: &CheckReport) {
        self.checked += sub.checked;
        self.skipped += sub.skipped;
        self.failure_count += sub.failure_count;
        if !sub.pass {
            self.pass = false;
        }
        for f in &sub.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                let mut at = vec![sub.id.clone()];
                at.extend(f.at.iter().cloned());
                self.failures.push(Failure { at, diff: f.diff.clone() });
            }
        }
        for n in &sub.notes {
            self.notes.push(format!("{}: {}", sub.id, n));
        }
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}
