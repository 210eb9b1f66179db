//! Pass/fail reports for axiom suites.

use serde::{Deserialize, Serialize};

/// Outcome of one axiom, with the first failing index tuple when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: &str, witness: Option<Vec<usize>>) {
        self.axioms.push(AxiomResult { name: name.to_string(), passed: witness.is_none(), witness });
    }

    pub fn record_bool(&mut self, name: &str, passed: bool) {
        self.record(name, if passed { None } else { Some(Vec::new()) });
    }

    pub fn all_passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.axioms.iter().find(|a| a.name == name).map(|a| a.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| !a.passed)
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.axioms.extend(other.axioms);
    }
}
