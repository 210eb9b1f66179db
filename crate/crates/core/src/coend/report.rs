use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{build_coend, CONVENTIONS};
use crate::error::{Error, Result};
use crate::hopf::{HopfPresentation, RMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentRecord {
    pub map: String,
    /// input basis vectors on which the factorization was checked
    pub checked: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    pub holds: bool,
    pub rank: usize,
}

/// Both invertibility criteria for `Rep(H)`, computed from independent diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub dim: usize,
    pub drinfeld_iso: Criterion,
    pub omega_nondegenerate: Criterion,
    pub verdict: bool,
    pub conventions: Vec<(String, String)>,
    pub descent: Vec<DescentRecord>,
    pub duration_ms: u64,
}

pub fn invertibility_report(p: &Arc<HopfPresentation>, r: &RMatrix) -> Result<CriterionReport> {
    let start = Instant::now();
    let c = build_coend(p, r)?;
    let d = c.dim();
    let dr = c.drinfeld_map_diagrammatic()?.rank();
    let omega = c.hopf_pairing()?.rank();
    let drinfeld_iso = Criterion { holds: dr == d, rank: dr };
    let omega_nondegenerate = Criterion { holds: omega == d, rank: omega };
    if drinfeld_iso.holds != omega_nondegenerate.holds {
        return Err(Error::InternalInconsistency(format!(
            "Drinfeld map rank {dr} and pairing rank {omega} give different verdicts in dimension {d}"
        )));
    }
    Ok(CriterionReport {
        dim: d,
        verdict: drinfeld_iso.holds,
        drinfeld_iso,
        omega_nondegenerate,
        conventions: CONVENTIONS.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        descent: c.descent.clone(),
        duration_ms: start.elapsed().as_millis() as u64,
    })
}
