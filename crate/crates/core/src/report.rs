//! Identity-check reports.
//!
//! Every verification routine in this crate returns an [`IdentityReport`]
//! rather than a bare boolean: a report names the identity, counts how many
//! instances were checked, and keeps the witnessing `(position, lhs, rhs)`
//! triple for every mismatch, so an exact failure is always reproducible
//! from the output alone.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Where the identity failed, e.g. `n=5,m=2`.
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: String,
    pub checks: usize,
    pub mismatches: Vec<Mismatch>,
}

impl IdentityReport {
    pub fn new(id: impl Into<String>) -> Self {
        IdentityReport {
            id: id.into(),
            checks: 0,
            mismatches: Vec::new(),
        }
    }

    /// Compare both sides of one identity instance and record the result.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, at: impl Into<String>, lhs: T, rhs: T) {
        self.checks += 1;
        if lhs != rhs {
            self.mismatches.push(Mismatch {
                at: at.into(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Record an already-evaluated boolean condition (used for structural
    /// claims like "degree equals 3j" where there is no rhs value).
    pub fn check_that(&mut self, at: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(Mismatch {
                at: at.into(),
                lhs: detail.into(),
                rhs: "expected".into(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Fold another report into this one, keeping its mismatch context.
    pub fn absorb(&mut self, other: IdentityReport) {
        self.checks += other.checks;
        for mut m in other.mismatches {
            m.at = format!("{}: {}", other.id, m.at);
            self.mismatches.push(m);
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: {} checks, all exact", self.id, self.checks)
        } else {
            writeln!(
                f,
                "{}: {} of {} checks FAILED",
                self.id,
                self.mismatches.len(),
                self.checks
            )?;
            for m in &self.mismatches {
                writeln!(f, "  at {}: lhs = {}, rhs = {}", m.at, m.lhs, m.rhs)?;
            }
            Ok(())
        }
    }
}
