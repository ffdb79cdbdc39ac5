use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of a verification suite. `entries` decide [`CheckReport::all_pass`];
/// `observations` record facts worth reporting that are not pass/fail gates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
    pub observations: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.entries.push(CheckEntry {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn observe(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.observations.push(CheckEntry {
            name: name.into(),
            pass: holds,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
        self.observations.extend(other.observations);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mark = if e.pass { "ok  " } else { "FAIL" };
            writeln!(f, "[{mark}] {}: {}", e.name, e.detail)?;
        }
        for e in &self.observations {
            writeln!(
                f,
                "[note] {}: {} ({})",
                e.name,
                e.detail,
                if e.pass { "holds" } else { "does not hold" }
            )?;
        }
        Ok(())
    }
}
