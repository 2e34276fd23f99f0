//! Verification report types.
//!
//! Every verification routine returns a [`CheckReport`]: a flat list of
//! named entries, each tagged with the relation it exercises, a category
//! and an exact witness on failure. Reports serialize to JSON with
//! rationals as strings, and merge order-stably so a suite run is
//! byte-identical under a fixed seed.

use serde::Serialize;
use std::fmt;

/// What kind of statement an entry checks.
///
/// Structural entries hold by construction (definitional relations, Jacobi
/// controls); a failure means an implementation bug. Oracle entries compare
/// against values recomputed independently from the matrices. Claim entries
/// test a stated closed form verbatim; they may fail without invalidating
/// the realization, and failures always carry both values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    Structural,
    Oracle,
    Claim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    pub suite: String,
    pub name: String,
    /// Short tag naming the identity or display being checked.
    pub anchor: String,
    pub category: Category,
    pub verdict: Verdict,
    /// Exact data explaining the verdict; always present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(_suite: &str) -> Self {
        // suite name travels on each entry; the constructor takes it for
        // the convenience methods below
        CheckReport { entries: Vec::new() }
    }

    /// Records a pass/fail entry.
    pub fn check(
        &mut self,
        name: &str,
        anchor: &str,
        category: Category,
        passed: bool,
        witness: Option<String>,
    ) {
        self.push_entry(
            name,
            anchor,
            category,
            if passed { Verdict::Pass } else { Verdict::Fail },
            witness,
        );
    }

    pub fn skip(&mut self, name: &str, anchor: &str, category: Category, reason: &str) {
        self.push_entry(name, anchor, category, Verdict::Skipped, Some(reason.into()));
    }

    fn push_entry(
        &mut self,
        name: &str,
        anchor: &str,
        category: Category,
        verdict: Verdict,
        witness: Option<String>,
    ) {
        self.entries.push(CheckEntry {
            suite: String::new(),
            name: name.to_string(),
            anchor: anchor.to_string(),
            category,
            verdict,
            witness,
        });
    }

    /// Appends another report's entries.
    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Stamps a suite label (and optional trial prefix) on every entry that
    /// does not carry one yet.
    pub fn stamp(&mut self, suite: &str, prefix: Option<&str>) {
        for e in &mut self.entries {
            if e.suite.is_empty() {
                e.suite = suite.to_string();
            }
            if let Some(p) = prefix {
                if !e.name.starts_with(p) {
                    e.name = format!("{p}{}", e.name);
                }
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    /// True if some entry in a load-bearing category failed.
    pub fn has_hard_failure(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.verdict == Verdict::Fail && e.category != Category::Claim)
    }

    /// True if only claim entries failed.
    pub fn has_claim_failure(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.verdict == Verdict::Fail && e.category == Category::Claim)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skip",
        };
        write!(f, "[{v}] {}/{} ({})", self.suite, self.name, self.anchor)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}
