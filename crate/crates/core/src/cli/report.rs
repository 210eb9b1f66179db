use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub kind: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &str, kind: &str, bytes: &[u8]) -> Self {
        InputDigest { path: path.to_string(), kind: kind.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

/// One checked property with its rank or dimension certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub name: String,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
}

impl CriterionResult {
    pub fn new(name: impl Into<String>, verdict: bool) -> Self {
        CriterionResult { name: name.into(), verdict, rank: None, dim: None }
    }

    pub fn rank(mut self, rank: usize, dim: usize) -> Self {
        self.rank = Some(rank);
        self.dim = Some(dim);
        self
    }

    pub fn dim(mut self, dim: usize) -> Self {
        self.dim = Some(dim);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub verdict: Option<bool>,
    pub criteria: Vec<CriterionResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conventions: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub duration_ms: u64,
}

impl CheckReport {
    pub fn new(command: &str) -> Self {
        CheckReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: Vec::new(),
            verdict: None,
            criteria: Vec::new(),
            labels: Vec::new(),
            conventions: Vec::new(),
            output: None,
            error: None,
            duration_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("braidcheck {}\n", self.command);
        for i in &self.inputs {
            let _ = writeln!(out, "  input   {} ({}, sha256 {})", i.path, i.kind, &i.sha256[..16]);
        }
        for c in &self.criteria {
            let mark = if c.verdict { "pass" } else { "FAIL" };
            let _ = write!(out, "  [{mark}] {}", c.name);
            match (c.rank, c.dim) {
                (Some(r), Some(d)) => {
                    let _ = write!(out, " (rank {r} of {d})");
                }
                (None, Some(d)) => {
                    let _ = write!(out, " (dim {d})");
                }
                _ => {}
            }
            out.push('\n');
        }
        if !self.labels.is_empty() {
            let _ = writeln!(out, "  labels  {}", self.labels.join(", "));
        }
        for (k, v) in &self.conventions {
            let _ = writeln!(out, "  convention {k}: {v}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "  error   {e}");
        }
        match self.verdict {
            Some(v) => {
                let _ = writeln!(out, "verdict: {v}");
            }
            None => out.push_str("verdict: none\n"),
        }
        if let Some(o) = &self.output {
            out.push('\n');
            out.push_str(o);
        }
        out
    }
}
