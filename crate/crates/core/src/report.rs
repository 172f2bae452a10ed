//! Machine-checkable verification reports.

use serde::Serialize;

/// Stored witnesses per report; the count keeps the full tally.
const MAX_WITNESSES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub claim_id: String,
    pub paper_ref: String,
    pub universe_size: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(claim_id: impl Into<String>, paper_ref: impl Into<String>) -> Report {
        Report {
            claim_id: claim_id.into(),
            paper_ref: paper_ref.into(),
            universe_size: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Records one checked case.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.universe_size += 1;
        if !ok {
            self.fail(witness());
        }
    }

    pub fn fail(&mut self, witness: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(witness);
        }
    }

    /// Folds another report's counts and witnesses into this one.
    pub fn absorb(&mut self, other: Report) {
        self.universe_size += other.universe_size;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(f);
            }
        }
    }

    pub fn summary(&self) -> String {
        let status = if self.passed() { "pass" } else { "FAIL" };
        format!(
            "{status} {} ({} cases, {} failures)",
            self.claim_id, self.universe_size, self.failure_count
        )
    }
}
